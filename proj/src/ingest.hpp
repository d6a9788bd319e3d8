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
//
// Line-record wire formats, all headed by a `<name> v1` line:
//
//   infranotes-stream v1
//     t x y z [vx vy vz] frame_points        (one record per frame)
//
//   infranotes-truth v1
//     span <start> <end> <class> <glyph_id>  (half-open sample range)
//     glyph <glyph_id> <letter> <min_x> <max_x> <min_y> <max_y>
//     event <newline|newpage|erase> <t>
//
//   infranotes-candidates v1
//     <symbol> <probability>                 (one candidate per line)
//
//   infranotes-candidate-set v1
//     <glyph_id> <symbol> <probability>
//
// Records are whitespace-separated decimals in s / mm / mm·s⁻¹.  Lines
// starting with '#' are skipped.  Stream records may carry a trailing
// orientation triple (11 tokens); it is dropped on parse.

#ifndef INFRANOTES_INGEST_HPP
#define INFRANOTES_INGEST_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "model.hpp"

namespace infranotes {

enum class TruthEventKind { NewLine, NewPage, Erase };

const char* truth_event_kind_name(TruthEventKind k);

/// Verification labels emitted by the synthetic generator.
struct GroundTruth {
  struct Span {
    std::size_t start = 0;  // sample index, inclusive
    std::size_t end = 0;    // sample index, exclusive
    StrokeClass cls = StrokeClass::OnBoard;
    int glyph_id = -1;      // -1 for spans that belong to no glyph
  };
  struct Glyph {
    int id = 0;
    char letter = '?';
    BBox bbox;
  };
  struct Event {
    TruthEventKind kind = TruthEventKind::NewLine;
    double t = 0.0;
  };

  std::vector<Span> spans;    // non-overlapping, sorted by start
  std::vector<Glyph> glyphs;  // unique ids
  std::vector<Event> events;
};

/// Ordered OCR candidate list; order is the rank order of the source list
/// (not re-sorted, the paper's published lists are walked positionally).
struct CandidateList {
  struct Entry {
    char symbol = '?';
    double probability = 0.0;
  };
  std::vector<Entry> entries;
};

SampleSeries parse_stream(const std::string& bytes);
std::string write_stream(const SampleSeries& series);

GroundTruth parse_truth(const std::string& bytes);
std::string write_truth(const GroundTruth& truth);

CandidateList parse_candidates(const std::string& bytes);
std::string write_candidates(const CandidateList& list);

/// Per-glyph candidate lists for a labeled corpus session.
std::map<int, CandidateList> parse_candidate_set(const std::string& bytes);
std::string write_candidate_set(const std::map<int, CandidateList>& set);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

/// Formats a double compactly with enough digits to round-trip at 1e-9.
std::string fmt_num(double v);

}  // namespace infranotes

#endif  // INFRANOTES_INGEST_HPP
