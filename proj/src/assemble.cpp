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

#include "assemble.hpp"

#include <algorithm>
#include <sstream>

#include "ingest.hpp"

namespace infranotes {
namespace {

BBox strokes_bbox(const std::vector<StrokeGeom>& strokes) {
  BBox b;
  for (const StrokeGeom& s : strokes) b.extend(s.bbox());
  return b;
}

struct Builder {
  Notes notes;
  Page page;
  Line line;
  bool line_open = false;
  bool page_open = false;
  int next_line_id = 1;
  int next_mask_id = 1;
  double mask_window_s = 30.0;

  struct Window {
    int mask_index = 0;  // into page.masks
    BBox region;
    double expires_t = 0.0;
  };
  std::vector<Window> windows;

  void open_page(double t) {
    page = Page{};
    page.id = static_cast<int>(notes.pages.size()) + 1;
    page.start_t = t;
    page.end_t = t;
    page_open = true;
    windows.clear();
  }

  void close_line() {
    if (!line_open) return;
    line.bbox = strokes_bbox(line.strokes);
    if (!line.strokes.empty()) {
      line.closed_t = line.strokes.back().end_t;
      page.lines.push_back(line);
    }
    line_open = false;
  }

  void open_line(double t) {
    line = Line{};
    line.id = next_line_id++;
    line.page_id = page.id;
    line.created_t = t;
    line_open = true;
  }

  void close_page() {
    close_line();
    if (page_open) notes.pages.push_back(page);
    page_open = false;
  }

  // Current page's lines including the open one, for mask targeting.
  std::vector<Line> visible_lines() const {
    std::vector<Line> lines = page.lines;
    if (line_open && !line.strokes.empty()) {
      Line open = line;
      open.bbox = strokes_bbox(open.strokes);
      lines.push_back(open);
    }
    return lines;
  }

  void add_stroke(const StrokeGeom& geom, double t) {
    // Most recent matching erase window wins.
    for (auto it = windows.rbegin(); it != windows.rend(); ++it) {
      if (t > it->expires_t) continue;
      if (!it->region.intersects(geom.bbox())) continue;
      Mask& mask = page.masks[static_cast<std::size_t>(it->mask_index)];
      mask.strokes.push_back(geom);
      page.end_t = std::max(page.end_t, geom.end_t);
      return;
    }
    if (!line_open) open_line(t);
    if (line.strokes.empty()) line.created_t = geom.start_t;
    line.strokes.push_back(geom);
    page.end_t = std::max(page.end_t, geom.end_t);
  }

  void add_erase(const BBox& region, double t) {
    int target = 0;
    try {
      target = assign_mask_target(region, visible_lines());
    } catch (const Error& e) {
      if (e.code() != Errc::OrphanErase) throw;
      notes.orphans.push_back({t, region});
      return;
    }
    Mask mask;
    mask.id = next_mask_id++;
    mask.page_id = page.id;
    mask.target_line_id = target;
    mask.bbox = region;
    mask.created_t = t;
    page.masks.push_back(mask);
    windows.push_back({static_cast<int>(page.masks.size()) - 1, region,
                       t + mask_window_s});
    page.end_t = std::max(page.end_t, t);
  }
};

}  // namespace

int assign_mask_target(const BBox& erase_bbox,
                       const std::vector<Line>& lines) {
  if (lines.empty())
    throw Error(Errc::OrphanErase, "no lines on the page");
  int best = 0;
  double best_area = 0.0;
  for (const Line& line : lines) {
    const double area = erase_bbox.overlap_area(line.bbox);
    if (area > best_area) {
      best_area = area;
      best = line.id;
    }
  }
  if (best_area <= 0.0)
    throw Error(Errc::OrphanErase, "erase region overlaps no line");
  return best;
}

Notes assemble(const SampleSeries& series, const std::vector<Stroke>& strokes,
               const std::vector<NoteEvent>& events, const EventConfig& cfg) {
  cfg.validate();
  Builder b;
  b.mask_window_s = cfg.mask_window_s;
  b.notes.source_id = series.source_id;

  for (const NoteEvent& e : events) {
    switch (e.kind) {
      case NoteEventKind::NewPage:
        b.close_page();
        b.open_page(e.t);
        b.open_line(e.t);
        b.add_stroke(stroke_geometry(series, strokes[e.stroke_index]), e.t);
        break;
      case NoteEventKind::NewLine:
        b.close_line();
        b.open_line(e.t);
        b.add_stroke(stroke_geometry(series, strokes[e.stroke_index]), e.t);
        break;
      case NoteEventKind::StrokeWritten:
        if (!b.page_open) {
          b.open_page(e.t);
          b.open_line(e.t);
        }
        b.add_stroke(stroke_geometry(series, strokes[e.stroke_index]), e.t);
        break;
      case NoteEventKind::EraseRegion:
        if (!b.page_open) {
          b.notes.orphans.push_back({e.t, e.geometry});
          break;
        }
        b.add_erase(e.geometry, e.t);
        break;
    }
  }
  b.close_page();
  if (b.notes.pages.empty()) b.notes.pages.push_back(Page{1, {}, {}, 0.0, 0.0});
  return b.notes;
}

SceneGraph compose_page(const Page& page, double as_of) {
  if (as_of < page.start_t)
    throw Error(Errc::BeforePage, "as_of precedes the page");
  SceneGraph scene;

  std::vector<const Mask*> masks;
  for (const Mask& m : page.masks)
    if (m.created_t <= as_of) masks.push_back(&m);
  std::sort(masks.begin(), masks.end(), [](const Mask* a, const Mask* b) {
    return a->created_t < b->created_t;
  });

  auto blankers_after = [&](int line_id, double t) {
    std::vector<BBox> rects;
    for (const Mask* m : masks) {
      if (m->target_line_id != line_id || m->created_t <= t) continue;
      rects.push_back(m->bbox);
    }
    return rects;
  };

  for (const Line& line : page.lines) {
    if (line.created_t > as_of) continue;
    scene.view.extend(line.bbox);
    std::vector<BBox> rects;
    for (const Mask* m : masks)
      if (m->target_line_id == line.id)
        rects.push_back(m->bbox.intersection(line.bbox));
    for (const StrokeGeom& s : line.strokes)
      for (auto& frag : clip_polyline_outside(s.pts, rects))
        scene.polylines.push_back(std::move(frag));
  }

  for (const Mask* m : masks) {
    const Line* target = nullptr;
    for (const Line& line : page.lines)
      if (line.id == m->target_line_id) target = &line;
    std::vector<BBox> rects = blankers_after(m->target_line_id, m->created_t);
    if (target) {
      std::vector<BBox> clipped;
      for (const BBox& r : rects) {
        const BBox i = r.intersection(target->bbox);
        if (!i.empty) clipped.push_back(i);
      }
      rects = clipped;
    }
    for (const StrokeGeom& s : m->strokes) {
      scene.view.extend(s.bbox());
      for (auto& frag : clip_polyline_outside(s.pts, rects))
        scene.polylines.push_back(std::move(frag));
    }
  }
  return scene;
}

void validate_notes(const Notes& notes) {
  for (const Page& page : notes.pages) {
    for (const Mask& m : page.masks) {
      bool found = false;
      for (const Line& line : page.lines)
        if (line.id == m.target_line_id) found = true;
      if (!found)
        throw Error(Errc::CrossPageMask,
                    "mask " + std::to_string(m.id) + " targets line " +
                        std::to_string(m.target_line_id) +
                        " outside page " + std::to_string(page.id));
    }
    for (const Line& line : page.lines)
      if (line.page_id != page.id)
        throw Error(Errc::CrossPageMask,
                    "line " + std::to_string(line.id) + " filed under page " +
                        std::to_string(page.id));
  }
}

std::string write_manifest(const Notes& notes) {
  std::string out = "infranotes-notes v1\n";
  out += "session " + fmt_num(notes.video_offset) +
         (notes.source_id.empty() ? "" : ' ' + notes.source_id) + '\n';
  auto write_strokes = [&out](const char* owner, int id,
                              const std::vector<StrokeGeom>& strokes) {
    for (const StrokeGeom& s : strokes) {
      out += std::string("stroke ") + owner + ' ' + std::to_string(id) + ' ' +
             fmt_num(s.start_t) + ' ' + fmt_num(s.end_t) + ' ' +
             std::to_string(s.pts.size());
      for (const Vec2& p : s.pts)
        out += ' ' + fmt_num(p.x) + ' ' + fmt_num(p.y);
      out += '\n';
    }
  };
  for (const Page& page : notes.pages) {
    out += "page " + std::to_string(page.id) + ' ' + fmt_num(page.start_t) +
           ' ' + fmt_num(page.end_t) + '\n';
    for (const Line& line : page.lines) {
      out += "line " + std::to_string(line.id) + ' ' +
             std::to_string(line.page_id) + ' ' + fmt_num(line.created_t) +
             ' ' + fmt_num(line.closed_t) + '\n';
      if (!line.text.empty())
        out += "text " + std::to_string(line.id) + ' ' + line.text + '\n';
      write_strokes("line", line.id, line.strokes);
    }
    for (const Mask& m : page.masks) {
      out += "mask " + std::to_string(m.id) + ' ' + std::to_string(m.page_id) +
             ' ' + std::to_string(m.target_line_id) + ' ' +
             fmt_num(m.created_t) + ' ' + fmt_num(m.bbox.min_x) + ' ' +
             fmt_num(m.bbox.max_x) + ' ' + fmt_num(m.bbox.min_y) + ' ' +
             fmt_num(m.bbox.max_y) + '\n';
      write_strokes("mask", m.id, m.strokes);
    }
  }
  for (const OrphanErase& o : notes.orphans) {
    out += "orphan " + fmt_num(o.t) + ' ' + fmt_num(o.bbox.min_x) + ' ' +
           fmt_num(o.bbox.max_x) + ' ' + fmt_num(o.bbox.min_y) + ' ' +
           fmt_num(o.bbox.max_y) + '\n';
  }
  return out;
}

Notes parse_manifest(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string text_line;
  int line_no = 0;
  Notes notes;
  Page* page = nullptr;
  bool saw_header = false;

  auto fail = [&line_no](const std::string& what) -> void {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, text_line)) {
    ++line_no;
    if (!text_line.empty() && text_line.back() == '\r') text_line.pop_back();
    const std::size_t first = text_line.find_first_not_of(" \t");
    if (first == std::string::npos || text_line[first] == '#') continue;
    if (!saw_header) {
      if (text_line != "infranotes-notes v1") fail("expected notes header");
      saw_header = true;
      continue;
    }
    std::istringstream ls(text_line);
    std::string kind;
    ls >> kind;
    if (kind == "session") {
      ls >> notes.video_offset;
      std::string rest;
      std::getline(ls, rest);
      const std::size_t pos = rest.find_first_not_of(' ');
      notes.source_id = pos == std::string::npos ? "" : rest.substr(pos);
    } else if (kind == "page") {
      Page p;
      if (!(ls >> p.id >> p.start_t >> p.end_t)) fail("bad page record");
      notes.pages.push_back(p);
      page = &notes.pages.back();
    } else if (kind == "line") {
      if (!page) fail("line before page");
      Line l;
      if (!(ls >> l.id >> l.page_id >> l.created_t >> l.closed_t))
        fail("bad line record");
      page->lines.push_back(l);
    } else if (kind == "text") {
      if (!page) fail("text before page");
      int id = 0;
      if (!(ls >> id)) fail("bad text record");
      std::string rest;
      std::getline(ls, rest);
      const std::size_t pos = rest.find_first_not_of(' ');
      for (Line& l : page->lines)
        if (l.id == id)
          l.text = pos == std::string::npos ? "" : rest.substr(pos);
    } else if (kind == "mask") {
      if (!page) fail("mask before page");
      Mask m;
      double x0, x1, y0, y1;
      if (!(ls >> m.id >> m.page_id >> m.target_line_id >> m.created_t >>
            x0 >> x1 >> y0 >> y1))
        fail("bad mask record");
      m.bbox = BBox::of(x0, x1, y0, y1);
      page->masks.push_back(m);
    } else if (kind == "stroke") {
      if (!page) fail("stroke before page");
      std::string owner;
      int id = 0;
      std::size_t k = 0;
      StrokeGeom g;
      if (!(ls >> owner >> id >> g.start_t >> g.end_t >> k))
        fail("bad stroke record");
      g.pts.reserve(k);
      for (std::size_t i = 0; i < k; ++i) {
        Vec2 p;
        if (!(ls >> p.x >> p.y)) fail("bad stroke point");
        g.pts.push_back(p);
      }
      if (owner == "line") {
        bool found = false;
        for (Line& l : page->lines)
          if (l.id == id) {
            l.strokes.push_back(g);
            found = true;
          }
        if (!found) fail("stroke for unknown line");
      } else if (owner == "mask") {
        bool found = false;
        for (Mask& m : page->masks)
          if (m.id == id) {
            m.strokes.push_back(g);
            found = true;
          }
        if (!found) fail("stroke for unknown mask");
      } else {
        fail("unknown stroke owner '" + owner + "'");
      }
    } else if (kind == "orphan") {
      OrphanErase o;
      double x0, x1, y0, y1;
      if (!(ls >> o.t >> x0 >> x1 >> y0 >> y1)) fail("bad orphan record");
      o.bbox = BBox::of(x0, x1, y0, y1);
      notes.orphans.push_back(o);
    } else {
      fail("unknown record '" + kind + "'");
    }
  }
  if (!saw_header) throw Error(Errc::ParseError, "missing notes header");
  for (Page& p : notes.pages)
    for (Line& l : p.lines) l.bbox = strokes_bbox(l.strokes);
  validate_notes(notes);
  return notes;
}

}  // namespace infranotes
