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

#include "pipeline.hpp"

#include <algorithm>
#include <filesystem>

#include "group.hpp"
#include "ingest.hpp"

namespace fs = std::filesystem;

namespace infranotes {
namespace {

std::optional<char> pt_recognize(const CharacterGroup& grp,
                                 const CandidateList* list) {
  Signature sig;
  try {
    sig = signature_of(grp);
  } catch (const Error&) {
    return std::nullopt;
  }
  const std::set<char> matches = PrimitiveTable::builtin().lookup(sig);
  if (matches.size() == 1) return *matches.begin();
  if (matches.size() > 1 && list) {
    char best = 0;
    double best_p = -1.0;
    for (char letter : matches)
      for (const auto& e : list->entries)
        if (e.symbol == letter && e.probability > best_p) {
          best_p = e.probability;
          best = letter;
        }
    if (best != 0) return best;
  }
  return std::nullopt;
}

struct GlyphUnit {
  const GroundTruth::Glyph* glyph = nullptr;
  std::size_t first = 0;  // first on-board sample
  std::size_t last = 0;   // one past the last on-board sample
};

std::vector<GlyphUnit> glyph_units(const GroundTruth& truth) {
  std::map<int, GlyphUnit> by_id;
  for (const auto& span : truth.spans) {
    if (span.cls != StrokeClass::OnBoard || span.glyph_id < 0) continue;
    auto& unit = by_id[span.glyph_id];
    if (unit.last == 0) {
      unit.first = span.start;
      unit.last = span.end;
    } else {
      unit.first = std::min(unit.first, span.start);
      unit.last = std::max(unit.last, span.end);
    }
  }
  std::vector<GlyphUnit> units;
  for (const auto& glyph : truth.glyphs) {
    auto it = by_id.find(glyph.id);
    if (it == by_id.end()) continue;
    it->second.glyph = &glyph;
    units.push_back(it->second);
  }
  std::sort(units.begin(), units.end(),
            [](const GlyphUnit& a, const GlyphUnit& b) {
              return a.first < b.first;
            });
  return units;
}

struct StageScore {
  int ocr = 0;
  int osn = 0;
  int pt = 0;
  bool has_lists = false;

  void score(const CharacterGroup& grp, char letter,
             const CandidateList* list) {
    if (list && !list->entries.empty()) {
      has_lists = true;
      if (list->entries.front().symbol == letter) ++ocr;
      const RerankResult r = rerank_stroke_count(
          *list, static_cast<int>(grp.strokes.size()),
          StrokeCountTable::builtin(), true);
      if (r.symbol && *r.symbol == letter) ++osn;
    }
    const std::optional<char> pt_letter = pt_recognize(grp, list);
    if (pt_letter && *pt_letter == letter) ++pt;
  }
};

EvalReport::Row make_row(EvalStage stage, const StageScore& s, int total) {
  EvalReport::Row row;
  row.stage = stage;
  const double n = std::max(1, total);
  if (s.has_lists) {
    row.ocr = s.ocr / n;
    row.osn = s.osn / n;
  }
  row.pt = s.pt / n;
  return row;
}

}  // namespace

std::vector<CharacterGroup> group_line(const Line& line) {
  return group(line.strokes);
}

std::string line_text(const std::vector<CharacterGroup>& groups,
                      double word_gap_mm) {
  std::string text;
  const CharacterGroup* prev = nullptr;
  for (const CharacterGroup& grp : groups) {
    if (prev && grp.bbox.min_x - prev->bbox.max_x > word_gap_mm) text += ' ';
    const RecognizeResult r = recognize_group(
        grp, nullptr, PrimitiveTable::builtin(), StrokeCountTable::builtin());
    text += r.letter ? *r.letter : '?';
    prev = &grp;
  }
  return text;
}

ProcessResult process(const SampleSeries& series, const Config& cfg) {
  ProcessResult result;
  const std::vector<Stroke> raw = segment(series, cfg.segment);
  const std::vector<Stroke> classified =
      classify_all(series, raw, cfg.classify);
  result.events = detect_events(series, classified, cfg.events);
  result.notes = assemble(series, classified, result.events, cfg.events);
  for (Page& page : result.notes.pages)
    for (Line& line : page.lines)
      line.text = line_text(group_line(line), cfg.word_gap_mm);
  return result;
}

const char* eval_stage_name(EvalStage s) {
  switch (s) {
    case EvalStage::Raw: return "raw";
    case EvalStage::Segmentation: return "segmentation";
    case EvalStage::Classification: return "classification";
    case EvalStage::Grouping: return "grouping";
  }
  return "raw";
}

EvalReport run_eval(const std::vector<EvalSession>& sessions,
                    const Config& cfg) {
  EvalReport report;
  StageScore raw_s, seg_s, cls_s, grp_s;
  int merged_pairs = 0, pairs = 0, matched = 0;

  for (const EvalSession& session : sessions) {
    const SampleSeries& series = session.series;
    const std::vector<Stroke> strokes = segment(series, cfg.segment);
    const std::vector<Stroke> classified =
        classify_all(series, strokes, cfg.classify);
    const std::vector<NoteEvent> events =
        detect_events(series, classified, cfg.events);
    const Notes notes = assemble(series, classified, events, cfg.events);

    std::vector<CharacterGroup> groups;
    for (const Page& page : notes.pages)
      for (const Line& line : page.lines) {
        auto line_groups = group_line(line);
        groups.insert(groups.end(), line_groups.begin(), line_groups.end());
      }

    const std::vector<GlyphUnit> units = glyph_units(session.truth);
    std::vector<int> matched_group(units.size(), -1);
    for (std::size_t u = 0; u < units.size(); ++u) {
      double best_area = 0.0;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const double area =
            groups[g].bbox.overlap_area(units[u].glyph->bbox);
        if (area > best_area) {
          best_area = area;
          matched_group[u] = static_cast<int>(g);
        }
      }
    }

    for (std::size_t u = 0; u < units.size(); ++u) {
      const GlyphUnit& unit = units[u];
      const char letter = unit.glyph->letter;
      const CandidateList* list = nullptr;
      if (auto it = session.candidates.find(unit.glyph->id);
          it != session.candidates.end())
        list = &it->second;
      ++report.glyphs;

      // Raw: the glyph's time window extended halfway into the neighboring
      // transits, taken as one unsegmented stroke.
      std::size_t lo = u > 0 ? (units[u - 1].last + unit.first) / 2 : 0;
      std::size_t hi = u + 1 < units.size()
                           ? (unit.last + units[u + 1].first) / 2
                           : series.size();
      CharacterGroup raw_grp;
      raw_grp.strokes.push_back(
          stroke_geometry(series, {lo, hi, StrokeClass::Unclassified,
                                   BoundaryCause::StreamEdge}));
      raw_grp.bbox = raw_grp.strokes[0].bbox();
      raw_s.score(raw_grp, letter, list);

      // Segmentation: every detected stroke inside the glyph's own span,
      // air transits between its pen strokes included.
      CharacterGroup seg_grp;
      for (const Stroke& s : strokes) {
        if (s.begin + 2 >= unit.first && s.end <= unit.last + 2) {
          seg_grp.strokes.push_back(stroke_geometry(series, s));
          seg_grp.bbox.extend(seg_grp.strokes.back().bbox());
        }
      }
      seg_s.score(seg_grp, letter, list);

      // Classification: the same evidence with off-board movement removed.
      CharacterGroup cls_grp;
      for (const Stroke& s : classified) {
        if (s.cls != StrokeClass::OnBoard) continue;
        if (s.begin + 2 >= unit.first && s.end <= unit.last + 2) {
          cls_grp.strokes.push_back(stroke_geometry(series, s));
          cls_grp.bbox.extend(cls_grp.strokes.back().bbox());
        }
      }
      cls_s.score(cls_grp, letter, list);

      // Grouping: the geometric group overlapping the glyph most.
      if (matched_group[u] >= 0) {
        grp_s.score(groups[static_cast<std::size_t>(matched_group[u])],
                    letter, list);
        ++matched;
      }
      if (u > 0) {
        ++pairs;
        if (matched_group[u] >= 0 && matched_group[u] == matched_group[u - 1])
          ++merged_pairs;
      }
    }
  }

  report.rows.push_back(make_row(EvalStage::Raw, raw_s, report.glyphs));
  report.rows.push_back(
      make_row(EvalStage::Segmentation, seg_s, report.glyphs));
  report.rows.push_back(
      make_row(EvalStage::Classification, cls_s, report.glyphs));
  report.rows.push_back(make_row(EvalStage::Grouping, grp_s, report.glyphs));
  report.merge_rate = pairs > 0 ? static_cast<double>(merged_pairs) / pairs : 0.0;
  report.grouping_agreement =
      report.glyphs > 0 ? static_cast<double>(matched) / report.glyphs : 0.0;
  return report;
}

std::string write_eval_report(const EvalReport& report) {
  std::string out = "infranotes-eval v1\n";
  out += "glyphs " + std::to_string(report.glyphs) + '\n';
  for (const auto& row : report.rows) {
    out += std::string("stage ") + eval_stage_name(row.stage);
    out += " ocr ";
    out += row.ocr ? fmt_num(*row.ocr) : std::string("-");
    out += " osn ";
    out += row.osn ? fmt_num(*row.osn) : std::string("-");
    out += " pt " + fmt_num(row.pt) + '\n';
  }
  out += "merge_rate " + fmt_num(report.merge_rate) + '\n';
  out += "grouping_agreement " + fmt_num(report.grouping_agreement) + '\n';
  return out;
}

std::vector<EvalSession> load_corpus(const std::string& dir) {
  auto load_session = [](const fs::path& p) {
    EvalSession s;
    s.series = parse_stream(read_file((p / "stream.v1").string()));
    s.series.source_id = p.filename().string();
    s.truth = parse_truth(read_file((p / "truth.v1").string()));
    const fs::path cands = p / "candidates.v1";
    if (fs::exists(cands))
      s.candidates = parse_candidate_set(read_file(cands.string()));
    return s;
  };
  const fs::path root(dir);
  if (!fs::exists(root)) throw Error(Errc::IoError, "no such corpus: " + dir);
  std::vector<EvalSession> sessions;
  if (fs::exists(root / "stream.v1")) {
    sessions.push_back(load_session(root));
    return sessions;
  }
  std::vector<fs::path> subdirs;
  for (const auto& entry : fs::directory_iterator(root))
    if (entry.is_directory() && fs::exists(entry.path() / "stream.v1"))
      subdirs.push_back(entry.path());
  std::sort(subdirs.begin(), subdirs.end());
  for (const auto& p : subdirs) sessions.push_back(load_session(p));
  if (sessions.empty())
    throw Error(Errc::IoError, "no sessions under " + dir);
  return sessions;
}

void save_notes_dir(const ProcessResult& result, const std::string& dir) {
  fs::create_directories(dir);
  const fs::path root(dir);
  write_file((root / "notes.manifest").string(),
             write_manifest(result.notes));
  write_file((root / "events.v1").string(), write_event_log(result.events));
  write_file((root / "index.v1").string(),
             write_index(build_index(result.notes)));
  for (const Page& page : result.notes.pages) {
    const SceneGraph scene = compose_page(page, kLatest);
    write_file((root / ("page-" + std::to_string(page.id) + ".svg")).string(),
               render_svg(scene, RenderStyle{}));
  }
}

Notes load_notes_dir(const std::string& dir) {
  return parse_manifest(read_file((fs::path(dir) / "notes.manifest").string()));
}

}  // namespace infranotes
