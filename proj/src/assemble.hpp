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
// Event-sourced document model: Lines stay vector snapshots, Masks patch a
// line's rectangle in chronological order, Pages collect one board column,
// Notes is the whole session.  `notes.manifest` is the v1 line-record
// serialization of all of it.

#ifndef INFRANOTES_ASSEMBLE_HPP
#define INFRANOTES_ASSEMBLE_HPP

#include <string>
#include <vector>

#include "model.hpp"
#include "noteevents.hpp"
#include "render.hpp"

namespace infranotes {

struct Line {
  int id = 0;
  int page_id = 0;
  std::vector<StrokeGeom> strokes;
  BBox bbox;
  double created_t = 0.0;
  double closed_t = 0.0;
  std::string text;  // recognized content; '?' marks unknown glyphs
};

struct Mask {
  int id = 0;
  int page_id = 0;
  int target_line_id = 0;
  std::vector<StrokeGeom> strokes;  // may be empty: pure erasure
  BBox bbox;                        // the erase region
  double created_t = 0.0;
};

struct Page {
  int id = 0;
  std::vector<Line> lines;
  std::vector<Mask> masks;  // ordered by created_t
  double start_t = 0.0;
  double end_t = 0.0;
};

struct OrphanErase {
  double t = 0.0;
  BBox bbox;
};

struct Notes {
  std::string source_id;
  double video_offset = 0.0;  // video clock minus note clock, seconds
  std::vector<Page> pages;
  std::vector<OrphanErase> orphans;  // erases over blank board, no mask
};

/// The line whose box overlaps the erase region most; OrphanErase when no
/// line overlaps at all.
int assign_mask_target(const BBox& erase_bbox, const std::vector<Line>& lines);

/// Folds the event stream into Lines, Masks and Pages.  Writing that lands
/// inside a recent erase region patches that mask's target line instead of
/// extending the current line.
Notes assemble(const SampleSeries& series, const std::vector<Stroke>& strokes,
               const std::vector<NoteEvent>& events, const EventConfig& cfg);

constexpr double kLatest = 1e300;

/// Scene of the page as of a moment: lines created by then, then masks in
/// chronological order, each blanking its rectangle on its target line
/// before drawing its own strokes.  kLatest composes the newest version.
SceneGraph compose_page(const Page& page, double as_of);

/// Structural checks; throws CrossPageMask when a mask targets a line on
/// another page (possible only in hand-edited manifests).
void validate_notes(const Notes& notes);

std::string write_manifest(const Notes& notes);
Notes parse_manifest(const std::string& bytes);

}  // namespace infranotes

#endif  // INFRANOTES_ASSEMBLE_HPP
