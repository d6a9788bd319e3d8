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

#ifndef INFRANOTES_NOTEEVENTS_HPP
#define INFRANOTES_NOTEEVENTS_HPP

#include <string>
#include <vector>

#include "model.hpp"

namespace infranotes {

enum class NoteEventKind { NewLine, NewPage, EraseRegion, StrokeWritten };

const char* note_event_kind_name(NoteEventKind k);

struct NoteEvent {
  NoteEventKind kind = NoteEventKind::StrokeWritten;
  double t = 0.0;
  BBox geometry;          // stroke or erase bounding box
  std::size_t stroke_index = 0;  // index into the classified stroke list
};

struct EventConfig {
  // New line: the next on-board stroke starts left of the current line's
  // right frontier by at least max(floor, 0.5 x line width), or lands back
  // at the line's left edge, and its top sits below the line's baseline by
  // a quarter of the line height.
  double newline_floor_mm = 80.0;
  double newline_left_tol_mm = 5.0;
  double newline_drop_frac = 0.25;
  // New page: the next stroke's ink reaches above the page's bottom
  // frontier by at least max(floor, 0.5 x column height written so far).
  double newpage_floor_mm = 150.0;
  // Writing this soon after an erase, intersecting its region, patches the
  // erased line instead of starting fresh content.
  double mask_window_s = 30.0;

  void validate() const;
};

/// Walks classified strokes in time order and emits the event stream:
/// one NewPage sentinel at the start, NewLine/NewPage on the writing
/// convention jumps, EraseRegion per erase stroke, StrokeWritten otherwise.
/// Off-board strokes are ignored; erase strokes do not move the frontiers.
std::vector<NoteEvent> detect_events(const SampleSeries& series,
                                     const std::vector<Stroke>& strokes,
                                     const EventConfig& cfg);

/// `infranotes-events v1` audit log (kind, t, bbox per line).
std::string write_event_log(const std::vector<NoteEvent>& events);

}  // namespace infranotes

#endif  // INFRANOTES_NOTEEVENTS_HPP
