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

#ifndef INFRANOTES_PIPELINE_HPP
#define INFRANOTES_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "assemble.hpp"
#include "config.hpp"
#include "indexer.hpp"
#include "recognize.hpp"

namespace infranotes {

struct ProcessResult {
  Notes notes;
  std::vector<NoteEvent> events;
};

/// Full pipeline: segmentation, classification, event detection, assembly,
/// then per-line grouping and primitive-table recognition to fill each
/// line's text ('?' for unresolved glyphs, spaces at wide group gaps).
ProcessResult process(const SampleSeries& series, const Config& cfg);

/// Character groups of one assembled line, ordered left to right.
std::vector<CharacterGroup> group_line(const Line& line);

/// Recognized text of grouped content using the built-in tables.
std::string line_text(const std::vector<CharacterGroup>& groups,
                      double word_gap_mm);

/// One labeled session of an evaluation corpus.
struct EvalSession {
  SampleSeries series;
  GroundTruth truth;
  std::map<int, CandidateList> candidates;  // per glyph id, may be empty
};

enum class EvalStage { Raw, Segmentation, Classification, Grouping };

struct EvalReport {
  struct Row {
    EvalStage stage = EvalStage::Raw;
    std::optional<double> ocr;  // absent without candidate lists
    std::optional<double> osn;
    double pt = 0.0;
  };
  int glyphs = 0;
  std::vector<Row> rows;          // raw, segmentation, classification, grouping
  double merge_rate = 0.0;        // adjacent truth glyphs sharing a group
  double grouping_agreement = 0.0;  // glyphs matched 1:1 to a group
};

const char* eval_stage_name(EvalStage s);

/// Staged ablation: each stage recognizes every labeled glyph from the
/// stroke evidence that stage can offer (raw window, segmented strokes,
/// on-board strokes, geometric groups) and scores OCR / OSN / PT columns.
EvalReport run_eval(const std::vector<EvalSession>& sessions,
                    const Config& cfg);

std::string write_eval_report(const EvalReport& report);

/// Loads `dir` as a session (stream.v1 + truth.v1 [+ candidates.v1]) or as
/// a directory of such session directories.
std::vector<EvalSession> load_corpus(const std::string& dir);

/// Writes manifest, per-page SVGs, event log, and search index.
void save_notes_dir(const ProcessResult& result, const std::string& dir);
Notes load_notes_dir(const std::string& dir);

}  // namespace infranotes

#endif  // INFRANOTES_PIPELINE_HPP
