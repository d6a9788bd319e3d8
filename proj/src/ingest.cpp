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

#include "ingest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace infranotes {
namespace {

constexpr const char* kStreamHeader = "infranotes-stream v1";
constexpr const char* kTruthHeader = "infranotes-truth v1";
constexpr const char* kCandidatesHeader = "infranotes-candidates v1";
constexpr const char* kCandidateSetHeader = "infranotes-candidate-set v1";

struct LineReader {
  std::istringstream in;
  std::string line;
  int line_no = 0;

  explicit LineReader(const std::string& bytes) : in(bytes) {}

  // Returns false at end of input; skips blank and comment lines.
  bool next() {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t i = line.find_first_not_of(" \t");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": " + what);
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double to_num(const LineReader& r, const std::string& tok) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    r.fail("expected a number, got '" + tok + "'");
  }
  if (pos != tok.size()) r.fail("expected a number, got '" + tok + "'");
  return v;
}

long to_int(const LineReader& r, const std::string& tok) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    r.fail("expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) r.fail("expected an integer, got '" + tok + "'");
  return v;
}

void expect_header(LineReader& r, const char* header) {
  if (!r.next()) throw Error(Errc::ParseError, std::string("missing header '") + header + "'");
  if (r.line != header) r.fail(std::string("expected header '") + header + "'");
}

StrokeClass parse_class(const LineReader& r, const std::string& tok) {
  if (tok == "onboard") return StrokeClass::OnBoard;
  if (tok == "offboard") return StrokeClass::OffBoard;
  if (tok == "erase") return StrokeClass::Erase;
  if (tok == "unclassified") return StrokeClass::Unclassified;
  r.fail("unknown stroke class '" + tok + "'");
}

TruthEventKind parse_event_kind(const LineReader& r, const std::string& tok) {
  if (tok == "newline") return TruthEventKind::NewLine;
  if (tok == "newpage") return TruthEventKind::NewPage;
  if (tok == "erase") return TruthEventKind::Erase;
  r.fail("unknown event kind '" + tok + "'");
}

}  // namespace

const char* truth_event_kind_name(TruthEventKind k) {
  switch (k) {
    case TruthEventKind::NewLine: return "newline";
    case TruthEventKind::NewPage: return "newpage";
    case TruthEventKind::Erase: return "erase";
  }
  return "newline";
}

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

SampleSeries parse_stream(const std::string& bytes) {
  LineReader r(bytes);
  expect_header(r, kStreamHeader);
  SampleSeries series;
  bool any_velocity = false;
  bool all_velocity = true;
  while (r.next()) {
    const auto tok = split_ws(r.line);
    // 5 tokens: t x y z n; 8 adds velocity; 11 adds an orientation triple
    // which is carried by the format but dropped here.
    if (tok.size() != 5 && tok.size() != 8 && tok.size() != 11)
      r.fail("expected 5, 8 or 11 fields, got " + std::to_string(tok.size()));
    SamplePoint p;
    p.t = to_num(r, tok[0]);
    if (p.t < 0) r.fail("negative timestamp");
    p.pos = {to_num(r, tok[1]), to_num(r, tok[2]), to_num(r, tok[3])};
    std::size_t k = 4;
    if (tok.size() >= 8) {
      p.vel = {to_num(r, tok[4]), to_num(r, tok[5]), to_num(r, tok[6])};
      k = 7;
      any_velocity = true;
    } else {
      all_velocity = false;
    }
    const long n = to_int(r, tok[k]);
    if (n < 1) r.fail("frame_points must be >= 1");
    p.frame_points = static_cast<int>(n);
    if (!series.empty() && p.t < series.samples.back().t)
      throw Error(Errc::NonMonotonicTime,
                  "line " + std::to_string(r.line_no));
    series.samples.push_back(p);
  }
  if (!any_velocity || !all_velocity) derive_velocities(series);
  return series;
}

std::string write_stream(const SampleSeries& series) {
  std::string out(kStreamHeader);
  out += '\n';
  for (const SamplePoint& p : series.samples) {
    out += fmt_num(p.t);
    out += ' ';
    out += fmt_num(p.pos.x);
    out += ' ';
    out += fmt_num(p.pos.y);
    out += ' ';
    out += fmt_num(p.pos.z);
    out += ' ';
    out += fmt_num(p.vel.x);
    out += ' ';
    out += fmt_num(p.vel.y);
    out += ' ';
    out += fmt_num(p.vel.z);
    out += ' ';
    out += std::to_string(p.frame_points);
    out += '\n';
  }
  return out;
}

GroundTruth parse_truth(const std::string& bytes) {
  LineReader r(bytes);
  expect_header(r, kTruthHeader);
  GroundTruth truth;
  while (r.next()) {
    const auto tok = split_ws(r.line);
    if (tok[0] == "span") {
      if (tok.size() != 5) r.fail("span needs 4 fields");
      GroundTruth::Span s;
      s.start = static_cast<std::size_t>(to_int(r, tok[1]));
      s.end = static_cast<std::size_t>(to_int(r, tok[2]));
      s.cls = parse_class(r, tok[3]);
      s.glyph_id = static_cast<int>(to_int(r, tok[4]));
      if (s.end <= s.start) r.fail("empty span");
      if (!truth.spans.empty() && s.start < truth.spans.back().end)
        r.fail("overlapping spans");
      truth.spans.push_back(s);
    } else if (tok[0] == "glyph") {
      if (tok.size() != 7) r.fail("glyph needs 6 fields");
      GroundTruth::Glyph g;
      g.id = static_cast<int>(to_int(r, tok[1]));
      if (tok[2].size() != 1) r.fail("glyph letter must be one character");
      g.letter = tok[2][0];
      g.bbox = BBox::of(to_num(r, tok[3]), to_num(r, tok[4]),
                        to_num(r, tok[5]), to_num(r, tok[6]));
      for (const auto& existing : truth.glyphs)
        if (existing.id == g.id) r.fail("duplicate glyph id");
      truth.glyphs.push_back(g);
    } else if (tok[0] == "event") {
      if (tok.size() != 3) r.fail("event needs 2 fields");
      GroundTruth::Event e;
      e.kind = parse_event_kind(r, tok[1]);
      e.t = to_num(r, tok[2]);
      truth.events.push_back(e);
    } else {
      r.fail("unknown record '" + tok[0] + "'");
    }
  }
  return truth;
}

std::string write_truth(const GroundTruth& truth) {
  std::string out(kTruthHeader);
  out += '\n';
  for (const auto& s : truth.spans) {
    out += "span " + std::to_string(s.start) + ' ' + std::to_string(s.end) +
           ' ' + stroke_class_name(s.cls) + ' ' + std::to_string(s.glyph_id) +
           '\n';
  }
  for (const auto& g : truth.glyphs) {
    out += "glyph " + std::to_string(g.id) + ' ' + std::string(1, g.letter) +
           ' ' + fmt_num(g.bbox.min_x) + ' ' + fmt_num(g.bbox.max_x) + ' ' +
           fmt_num(g.bbox.min_y) + ' ' + fmt_num(g.bbox.max_y) + '\n';
  }
  for (const auto& e : truth.events) {
    out += "event " + std::string(truth_event_kind_name(e.kind)) + ' ' +
           fmt_num(e.t) + '\n';
  }
  return out;
}

CandidateList parse_candidates(const std::string& bytes) {
  LineReader r(bytes);
  expect_header(r, kCandidatesHeader);
  CandidateList list;
  while (r.next()) {
    const auto tok = split_ws(r.line);
    if (tok.size() != 2) r.fail("expected '<symbol> <probability>'");
    if (tok[0].size() != 1) r.fail("candidate symbol must be one character");
    const double p = to_num(r, tok[1]);
    if (p < 0.0 || p > 1.0)
      throw Error(Errc::BadProbability,
                  "line " + std::to_string(r.line_no) + ": " + tok[1]);
    list.entries.push_back({tok[0][0], p});
  }
  return list;
}

std::string write_candidates(const CandidateList& list) {
  std::string out(kCandidatesHeader);
  out += '\n';
  for (const auto& e : list.entries)
    out += std::string(1, e.symbol) + ' ' + fmt_num(e.probability) + '\n';
  return out;
}

std::map<int, CandidateList> parse_candidate_set(const std::string& bytes) {
  LineReader r(bytes);
  expect_header(r, kCandidateSetHeader);
  std::map<int, CandidateList> set;
  while (r.next()) {
    const auto tok = split_ws(r.line);
    if (tok.size() != 3) r.fail("expected '<glyph_id> <symbol> <probability>'");
    const int id = static_cast<int>(to_int(r, tok[0]));
    if (tok[1].size() != 1) r.fail("candidate symbol must be one character");
    const double p = to_num(r, tok[2]);
    if (p < 0.0 || p > 1.0)
      throw Error(Errc::BadProbability,
                  "line " + std::to_string(r.line_no) + ": " + tok[2]);
    set[id].entries.push_back({tok[1][0], p});
  }
  return set;
}

std::string write_candidate_set(const std::map<int, CandidateList>& set) {
  std::string out(kCandidateSetHeader);
  out += '\n';
  for (const auto& [id, list] : set)
    for (const auto& e : list.entries)
      out += std::to_string(id) + ' ' + std::string(1, e.symbol) + ' ' +
             fmt_num(e.probability) + '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << bytes;
  if (!out) throw Error(Errc::IoError, "short write to " + path);
}

}  // namespace infranotes
