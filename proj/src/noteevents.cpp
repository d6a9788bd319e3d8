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

#include "noteevents.hpp"

#include <algorithm>

#include "ingest.hpp"

namespace infranotes {

const char* note_event_kind_name(NoteEventKind k) {
  switch (k) {
    case NoteEventKind::NewLine: return "newline";
    case NoteEventKind::NewPage: return "newpage";
    case NoteEventKind::EraseRegion: return "erase";
    case NoteEventKind::StrokeWritten: return "stroke";
  }
  return "stroke";
}

void EventConfig::validate() const {
  if (newline_floor_mm <= 0 || newpage_floor_mm <= 0)
    throw Error(Errc::InvalidArgument, "event floors must be positive");
  if (newline_drop_frac < 0 || mask_window_s < 0 || newline_left_tol_mm < 0)
    throw Error(Errc::InvalidArgument, "negative event parameter");
}

std::vector<NoteEvent> detect_events(const SampleSeries& series,
                                     const std::vector<Stroke>& strokes,
                                     const EventConfig& cfg) {
  cfg.validate();
  std::vector<NoteEvent> events;
  BBox line_box;   // ink of the current line
  BBox page_box;   // ink of the current page
  bool page_open = false;

  for (std::size_t idx = 0; idx < strokes.size(); ++idx) {
    const Stroke& s = strokes[idx];
    if (s.cls == StrokeClass::OffBoard || s.cls == StrokeClass::Unclassified)
      continue;
    const BBox box = bbox_of(series, s);
    const double t = stroke_start_t(series, s);
    if (s.cls == StrokeClass::Erase) {
      events.push_back({NoteEventKind::EraseRegion, t, box, idx});
      continue;
    }

    const Vec2 start = series[s.begin].pos.xy();
    if (!page_open) {
      events.push_back({NoteEventKind::NewPage, t, box, idx});
      page_open = true;
      line_box = box;
      page_box = box;
      continue;
    }

    // Bottom-to-top jump: ink rising far above everything written in the
    // column means a fresh page.
    const double rise = box.max_y - page_box.min_y;
    const double page_thresh =
        std::max(cfg.newpage_floor_mm, 0.5 * page_box.height());
    if (rise >= page_thresh) {
      events.push_back({NoteEventKind::NewPage, t, box, idx});
      line_box = box;
      page_box = box;
      continue;
    }

    // Right-to-left return plus a downward start means a new line.
    const double back_jump = line_box.max_x - start.x;
    const double line_thresh =
        std::max(cfg.newline_floor_mm, 0.5 * line_box.width());
    const bool left_return =
        back_jump >= line_thresh ||
        start.x <= line_box.min_x + cfg.newline_left_tol_mm;
    const bool below = box.max_y <
                       line_box.min_y - cfg.newline_drop_frac * line_box.height();
    if (left_return && below) {
      events.push_back({NoteEventKind::NewLine, t, box, idx});
      line_box = box;
      page_box.extend(box);
      continue;
    }

    events.push_back({NoteEventKind::StrokeWritten, t, box, idx});
    line_box.extend(box);
    page_box.extend(box);
  }
  return events;
}

std::string write_event_log(const std::vector<NoteEvent>& events) {
  std::string out = "infranotes-events v1\n";
  for (const NoteEvent& e : events) {
    out += std::string(note_event_kind_name(e.kind)) + ' ' + fmt_num(e.t) +
           ' ' + fmt_num(e.geometry.min_x) + ' ' + fmt_num(e.geometry.max_x) +
           ' ' + fmt_num(e.geometry.min_y) + ' ' + fmt_num(e.geometry.max_y) +
           '\n';
  }
  return out;
}

}  // namespace infranotes
