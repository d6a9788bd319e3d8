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

#include "render.hpp"

#include <algorithm>
#include <cstdio>

namespace infranotes {
namespace {

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v + 0.0);  // avoid negative zero
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

// Parameter interval of segment [a, b] inside `rect`, or false.
bool segment_rect_interval(Vec2 a, Vec2 b, const BBox& rect, double& t0,
                           double& t1) {
  t0 = 0.0;
  t1 = 1.0;
  const double d[2] = {b.x - a.x, b.y - a.y};
  const double lo[2] = {rect.min_x, rect.min_y};
  const double hi[2] = {rect.max_x, rect.max_y};
  const double p[2] = {a.x, a.y};
  for (int axis = 0; axis < 2; ++axis) {
    if (std::abs(d[axis]) < 1e-15) {
      if (p[axis] < lo[axis] || p[axis] > hi[axis]) return false;
      continue;
    }
    double u0 = (lo[axis] - p[axis]) / d[axis];
    double u1 = (hi[axis] - p[axis]) / d[axis];
    if (u0 > u1) std::swap(u0, u1);
    t0 = std::max(t0, u0);
    t1 = std::min(t1, u1);
    if (t0 > t1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Vec2>> clip_polyline_outside(
    const std::vector<Vec2>& pts, const std::vector<BBox>& rects) {
  if (pts.empty()) return {};
  if (rects.empty()) return {pts};

  std::vector<std::vector<Vec2>> out;
  std::vector<Vec2> current;
  auto flush = [&] {
    if (current.size() >= 2) out.push_back(current);
    current.clear();
  };

  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Vec2 a = pts[i], b = pts[i + 1];
    // Union of covered parameter intervals on this segment.
    std::vector<std::pair<double, double>> covered;
    for (const BBox& r : rects) {
      double t0, t1;
      if (!r.empty && segment_rect_interval(a, b, r, t0, t1))
        covered.push_back({t0, t1});
    }
    std::sort(covered.begin(), covered.end());
    std::vector<std::pair<double, double>> kept;
    double cursor = 0.0;
    for (const auto& [t0, t1] : covered) {
      if (t0 > cursor) kept.push_back({cursor, t0});
      cursor = std::max(cursor, t1);
    }
    if (cursor < 1.0) kept.push_back({cursor, 1.0});

    for (const auto& [t0, t1] : kept) {
      if (t1 - t0 < 1e-12) continue;
      const Vec2 p0 = a + (b - a) * t0;
      const Vec2 p1 = a + (b - a) * t1;
      if (!current.empty() && (current.back() - p0).norm() < 1e-9) {
        current.push_back(p1);
      } else {
        flush();
        current.push_back(p0);
        current.push_back(p1);
      }
    }
    if (kept.empty() || kept.back().second < 1.0) flush();
  }
  flush();
  return out;
}

std::string render_svg(const SceneGraph& scene, const RenderStyle& style) {
  const double m = style.margin_mm;
  const bool blank = scene.view.empty;
  const double x0 = blank ? 0.0 : scene.view.min_x;
  const double y1 = blank ? 0.0 : scene.view.max_y;
  const double w = (blank ? 0.0 : scene.view.width()) + 2 * m;
  const double h = (blank ? 0.0 : scene.view.height()) + 2 * m;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         fmt3(w) + ' ' + fmt3(h) + "\" width=\"" + fmt3(w) + "mm\" height=\"" +
         fmt3(h) + "mm\">\n";
  out += "<g fill=\"none\" stroke=\"" + style.stroke_color +
         "\" stroke-width=\"" + fmt3(style.stroke_width) +
         "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
  for (const auto& poly : scene.polylines) {
    if (poly.size() < 2) continue;
    out += "<polyline points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) out += ' ';
      out += fmt3(poly[i].x - x0 + m) + ',' + fmt3(y1 - poly[i].y + m);
    }
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace infranotes
