// Copyright 2026 The InfraNotes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "recognize.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace infranotes {
namespace {

// Straight strokes: maximum deviation from the chord, as a fraction of the
// chord length.  Chosen with the 20-degree direction bins so a ±10 degree
// tilt cannot change a bin-centered stroke's label.
constexpr double kStraightDevTol = 0.12;
constexpr double kStraightChordFrac = 0.6;
constexpr double kDirBinHalfWidthDeg = 20.0;
constexpr double kClosureTol = 0.15;     // |chord| / path for closed loops
constexpr double kDotDiagMm = 2.0;
constexpr double kInflectionRunDeg = 35.0;  // minimum |turn| of an arc run
constexpr double kJEndpointDyRatio = 0.35;
constexpr int kResamplePoints = 20;

std::vector<Vec2> dedup(const std::vector<Vec2>& pts) {
  std::vector<Vec2> out;
  for (const Vec2& p : pts) {
    if (out.empty() || (p - out.back()).norm() > 1e-12) out.push_back(p);
  }
  return out;
}

std::vector<Vec2> resample(const std::vector<Vec2>& pts, int n) {
  std::vector<double> cum(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i)
    cum[i] = cum[i - 1] + (pts[i] - pts[i - 1]).norm();
  const double total = cum.back();
  std::vector<Vec2> out;
  out.reserve(n);
  std::size_t j = 0;
  for (int k = 0; k < n; ++k) {
    const double s = total * k / (n - 1);
    while (j + 1 < cum.size() && cum[j + 1] < s) ++j;
    if (j + 1 >= pts.size()) {
      out.push_back(pts.back());
      continue;
    }
    const double seg = cum[j + 1] - cum[j];
    const double u = seg > 0 ? (s - cum[j]) / seg : 0.0;
    out.push_back(pts[j] + (pts[j + 1] - pts[j]) * u);
  }
  return out;
}

std::vector<Vec2> smooth3(const std::vector<Vec2>& pts) {
  if (pts.size() < 3) return pts;
  std::vector<Vec2> out(pts.size());
  out.front() = pts.front();
  out.back() = pts.back();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i)
    out[i] = (pts[i - 1] + pts[i] + pts[i + 1]) * (1.0 / 3.0);
  return out;
}

double point_line_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double len = d.norm();
  if (len < 1e-12) return (p - a).norm();
  return std::abs(d.cross(p - a)) / len;
}

Primitive classify_straight(Vec2 chord) {
  double theta = rad_to_deg(std::atan2(chord.y, chord.x));
  if (theta < 0) theta += 180.0;
  if (theta >= 180.0) theta -= 180.0;
  if (theta <= kDirBinHalfWidthDeg || theta >= 180.0 - kDirBinHalfWidthDeg)
    return Primitive::H;
  if (std::abs(theta - 90.0) <= kDirBinHalfWidthDeg) return Primitive::V;
  return theta < 90.0 ? Primitive::DU : Primitive::DD;
}

}  // namespace

const char* primitive_token(Primitive p) {
  switch (p) {
    case Primitive::H: return "-";
    case Primitive::V: return "|";
    case Primitive::DU: return "/";
    case Primitive::DD: return "\\";
    case Primitive::C: return "C";
    case Primitive::DArc: return ")";
    case Primitive::O: return "O";
    case Primitive::S: return "S";
    case Primitive::J: return "J";
    case Primitive::U: return "U";
    case Primitive::Dot: return ".";
  }
  return "?";
}

std::optional<Primitive> primitive_from_token(const std::string& tok) {
  if (tok == "-") return Primitive::H;
  if (tok == "|") return Primitive::V;
  if (tok == "/") return Primitive::DU;
  if (tok == "\\") return Primitive::DD;
  if (tok == "C") return Primitive::C;
  if (tok == ")") return Primitive::DArc;
  if (tok == "O") return Primitive::O;
  if (tok == "S") return Primitive::S;
  if (tok == "J") return Primitive::J;
  if (tok == "U") return Primitive::U;
  if (tok == ".") return Primitive::Dot;
  return std::nullopt;
}

Signature make_signature(std::vector<Primitive> prims) {
  std::sort(prims.begin(), prims.end());
  return prims;
}

std::string signature_to_string(const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ' ';
    out += primitive_token(sig[i]);
  }
  return out;
}

Primitive primitive_of(const StrokeGeom& stroke) {
  std::vector<Vec2> pts = dedup(stroke.pts);
  if (pts.size() < 3) throw Error(Errc::TooShort, "stroke has < 3 points");

  BBox box;
  for (const Vec2& p : pts) box.extend(p.x, p.y);
  if (std::hypot(box.width(), box.height()) < kDotDiagMm) return Primitive::Dot;

  pts = smooth3(resample(pts, kResamplePoints));
  const Vec2 chord = pts.back() - pts.front();
  const double chord_len = chord.norm();
  double path_len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    path_len += (pts[i] - pts[i - 1]).norm();

  if (chord_len >= kStraightChordFrac * path_len) {
    double max_dev = 0.0;
    for (const Vec2& p : pts)
      max_dev = std::max(max_dev, point_line_distance(p, pts.front(), pts.back()));
    if (max_dev <= kStraightDevTol * chord_len) return classify_straight(chord);
  }

  if (chord_len < kClosureTol * path_len) return Primitive::O;

  // Signed turn runs; two opposed arcs mean an inflection (S).
  double run_sum = 0.0;
  int arc_runs = 0;
  bool pos_arc = false, neg_arc = false;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const Vec2 a = pts[i - 1] - pts[i - 2];
    const Vec2 b = pts[i] - pts[i - 1];
    if (a.norm() < 1e-12 || b.norm() < 1e-12) continue;
    const double turn = rad_to_deg(std::atan2(a.cross(b), a.dot(b)));
    if (run_sum != 0.0 && (turn > 0) != (run_sum > 0)) {
      if (std::abs(run_sum) >= kInflectionRunDeg) {
        ++arc_runs;
        (run_sum > 0 ? pos_arc : neg_arc) = true;
      }
      run_sum = 0.0;
    }
    run_sum += turn;
  }
  if (std::abs(run_sum) >= kInflectionRunDeg) {
    ++arc_runs;
    (run_sum > 0 ? pos_arc : neg_arc) = true;
  }
  if (arc_runs >= 2 && pos_arc && neg_arc) return Primitive::S;

  // Single arc: the opening direction separates C, ) and U; J keeps a long
  // stem so its endpoints sit at very different heights.
  std::size_t apex = 0;
  double apex_dev = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = point_line_distance(pts[i], pts.front(), pts.back());
    if (d > apex_dev) {
      apex_dev = d;
      apex = i;
    }
  }
  const Vec2 chord_mid = (pts.front() + pts.back()) * 0.5;
  const Vec2 opening = chord_mid - pts[apex];
  if (std::abs(opening.x) >= std::abs(opening.y))
    return opening.x >= 0 ? Primitive::C : Primitive::DArc;
  if (opening.y < 0)
    return opening.x >= 0 ? Primitive::C : Primitive::DArc;
  const double height = box.height();
  const double dy_ratio =
      height > 1e-9 ? std::abs(pts.front().y - pts.back().y) / height : 0.0;
  return dy_ratio >= kJEndpointDyRatio ? Primitive::J : Primitive::U;
}

Signature signature_of(const CharacterGroup& group) {
  std::vector<Primitive> prims;
  prims.reserve(group.strokes.size());
  for (const StrokeGeom& s : group.strokes) prims.push_back(primitive_of(s));
  return make_signature(std::move(prims));
}

void PrimitiveTable::add_variant(char letter, const Signature& sig) {
  if (sig.empty()) throw Error(Errc::InvalidArgument, "empty signature");
  Signature sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  auto& variants = entries_[letter];
  if (std::find(variants.begin(), variants.end(), sorted) == variants.end())
    variants.push_back(sorted);
}

std::set<char> PrimitiveTable::lookup(const Signature& sig) const {
  Signature sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  std::set<char> out;
  for (const auto& [letter, variants] : entries_)
    if (std::find(variants.begin(), variants.end(), sorted) != variants.end())
      out.insert(letter);
  return out;
}

const std::vector<Signature>* PrimitiveTable::variants(char letter) const {
  auto it = entries_.find(letter);
  return it == entries_.end() ? nullptr : &it->second;
}

PrimitiveTable PrimitiveTable::parse(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  PrimitiveTable table;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!saw_header) {
      if (line != "infranotes-primitives v1")
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) +
                                          ": expected primitives header");
      saw_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string head, tok;
    ls >> head;
    if (head.size() != 2 || head[1] != ':')
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) +
                                        ": expected 'LETTER:'");
    std::vector<Primitive> prims;
    while (ls >> tok) {
      const auto p = primitive_from_token(tok);
      if (!p)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) +
                                          ": unknown primitive '" + tok + "'");
      prims.push_back(*p);
    }
    if (prims.empty())
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": empty variant");
    table.add_variant(head[0], make_signature(std::move(prims)));
  }
  if (!saw_header) throw Error(Errc::ParseError, "missing primitives header");
  return table;
}

std::string PrimitiveTable::serialize() const {
  std::string out = "infranotes-primitives v1\n";
  for (const auto& [letter, variants] : entries_)
    for (const auto& sig : variants)
      out += std::string(1, letter) + ": " + signature_to_string(sig) + '\n';
  return out;
}

StrokeCountTable StrokeCountTable::derive(const PrimitiveTable& table) {
  StrokeCountTable counts;
  for (const auto& [letter, variants] : table.entries())
    for (const auto& sig : variants)
      counts.counts_[letter].insert(static_cast<int>(sig.size()));
  return counts;
}

void StrokeCountTable::set_counts(char symbol, const std::set<int>& counts) {
  for (int c : counts)
    if (c < 1) throw Error(Errc::InvalidArgument, "stroke count must be >= 1");
  counts_[symbol] = counts;
}

const std::set<int>* StrokeCountTable::counts(char symbol) const {
  auto it = counts_.find(symbol);
  return it == counts_.end() ? nullptr : &it->second;
}

void StrokeCountTable::apply_overrides(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!saw_header) {
      if (line != "infranotes-counts v1")
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) +
                                          ": expected counts header");
      saw_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string sym;
    ls >> sym;
    if (sym.size() != 1)
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) +
                                        ": symbol must be one character");
    std::set<int> counts;
    int c = 0;
    while (ls >> c) {
      if (c < 1)
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line_no) + ": count must be >= 1");
      counts.insert(c);
    }
    if (counts.empty())
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": no counts");
    counts_[sym[0]] = counts;
  }
  if (!saw_header) throw Error(Errc::ParseError, "missing counts header");
}

std::string StrokeCountTable::serialize() const {
  std::string out = "infranotes-counts v1\n";
  for (const auto& [symbol, counts] : counts_) {
    out += symbol;
    for (int c : counts) out += ' ' + std::to_string(c);
    out += '\n';
  }
  return out;
}

std::set<char> table_lookup(const PrimitiveTable& table, const Signature& sig) {
  return table.lookup(sig);
}

RerankResult rerank_stroke_count(const CandidateList& candidates,
                                 int observed_count,
                                 const StrokeCountTable& counts,
                                 bool alphabet_only) {
  RerankResult result;
  for (const auto& entry : candidates.entries) {
    if (alphabet_only && !(entry.symbol >= 'A' && entry.symbol <= 'Z'))
      continue;
    const std::set<int>* valid = counts.counts(entry.symbol);
    if (!valid) {
      result.warnings.push_back(std::string("no stroke-count entry for '") +
                                entry.symbol + "'");
      continue;
    }
    if (valid->count(observed_count)) {
      result.symbol = entry.symbol;
      return result;
    }
  }
  return result;
}

const char* recognize_method_name(RecognizeMethod m) {
  switch (m) {
    case RecognizeMethod::PT: return "PT";
    case RecognizeMethod::PTOcr: return "PT+OCR";
    case RecognizeMethod::OSN: return "OSN";
    case RecognizeMethod::Unknown: return "unknown";
  }
  return "unknown";
}

RecognizeResult recognize_group(const CharacterGroup& group,
                                const CandidateList* candidates,
                                const PrimitiveTable& table,
                                const StrokeCountTable& counts) {
  Signature sig;
  try {
    sig = signature_of(group);
  } catch (const Error&) {
    return {};
  }
  const std::set<char> matches = table.lookup(sig);
  if (matches.size() == 1) return {*matches.begin(), RecognizeMethod::PT};
  if (matches.size() > 1 && candidates) {
    char best = 0;
    double best_p = -1.0;
    for (char letter : matches) {
      for (const auto& e : candidates->entries) {
        if (e.symbol == letter && e.probability > best_p) {
          best_p = e.probability;
          best = letter;
        }
      }
    }
    if (best != 0) return {best, RecognizeMethod::PTOcr};
    return {};
  }
  if (matches.empty() && candidates) {
    const RerankResult r = rerank_stroke_count(
        *candidates, static_cast<int>(group.strokes.size()), counts, true);
    if (r.symbol) return {*r.symbol, RecognizeMethod::OSN};
  }
  return {};
}

std::map<int, CandidateList> make_candidates(const GroundTruth& truth,
                                             const PrimitiveTable& table,
                                             const StrokeCountTable& counts,
                                             unsigned long long seed) {
  // Letters sharing a signature can only be separated by the OCR list, so a
  // glyph's collision partners never outrank the true letter.
  std::map<char, std::set<char>> partners;
  for (const auto& [letter, variants] : table.entries())
    for (const auto& sig : variants)
      for (char other : table.lookup(sig))
        if (other != letter) partners[letter].insert(other);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::map<int, CandidateList> out;
  for (const auto& glyph : truth.glyphs) {
    const char letter = glyph.letter;
    const std::set<int>* letter_counts = counts.counts(letter);
    std::vector<char> decoy_pool;          // count-disjoint, non-partner
    std::vector<char> filler_pool;         // anything but the letter
    for (char c = 'A'; c <= 'Z'; ++c) {
      if (c == letter) continue;
      filler_pool.push_back(c);
      if (partners[letter].count(c)) continue;
      const std::set<int>* other = counts.counts(c);
      if (!other || !letter_counts) continue;
      bool disjoint = true;
      for (int n : *other)
        if (letter_counts->count(n)) disjoint = false;
      if (disjoint) decoy_pool.push_back(c);
    }
    auto pick = [&](std::vector<char>& pool) {
      const std::size_t i =
          static_cast<std::size_t>(unit(rng) * pool.size()) % pool.size();
      const char c = pool[i];
      pool.erase(pool.begin() + static_cast<long>(i));
      return c;
    };
    CandidateList list;
    double p = 0.0;
    const bool truth_first = unit(rng) < 0.8 || decoy_pool.empty();
    if (truth_first) {
      p = 0.6 + 0.3 * unit(rng);
      list.entries.push_back({letter, p});
    } else {
      p = 0.25 + 0.15 * unit(rng);
      const char decoy = pick(decoy_pool);
      filler_pool.erase(
          std::find(filler_pool.begin(), filler_pool.end(), decoy));
      list.entries.push_back({decoy, p});
      p -= 0.02 + 0.05 * unit(rng);
      list.entries.push_back({letter, p});
    }
    while (list.entries.size() < 4 && !filler_pool.empty()) {
      p = std::max(0.01, p - 0.03 - 0.1 * unit(rng));
      list.entries.push_back({pick(filler_pool), p});
    }
    out[glyph.id] = std::move(list);
  }
  return out;
}

}  // namespace infranotes
