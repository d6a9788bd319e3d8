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

#ifndef INFRANOTES_GEOMETRY_HPP
#define INFRANOTES_GEOMETRY_HPP

#include <algorithm>
#include <cmath>

namespace infranotes {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec2 xy() const { return {x, y}; }
};

inline Vec2 rotate_about(Vec2 p, Vec2 pivot, double radians) {
  const double c = std::cos(radians), s = std::sin(radians);
  const Vec2 d = p - pivot;
  return {pivot.x + c * d.x - s * d.y, pivot.y + s * d.x + c * d.y};
}

/// Axis-aligned box in board millimeters.  Empty until extended.
struct BBox {
  double min_x = 0.0;
  double max_x = 0.0;
  double min_y = 0.0;
  double max_y = 0.0;
  bool empty = true;

  static BBox of(double x0, double x1, double y0, double y1) {
    return {std::min(x0, x1), std::max(x0, x1), std::min(y0, y1),
            std::max(y0, y1), false};
  }

  void extend(double x, double y) {
    if (empty) {
      min_x = max_x = x;
      min_y = max_y = y;
      empty = false;
      return;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }

  void extend(const BBox& o) {
    if (o.empty) return;
    extend(o.min_x, o.min_y);
    extend(o.max_x, o.max_y);
  }

  double width() const { return empty ? 0.0 : max_x - min_x; }
  double height() const { return empty ? 0.0 : max_y - min_y; }

  bool contains(double x, double y) const {
    return !empty && x >= min_x && x <= max_x && y >= min_y && y <= max_y;
  }

  bool intersects(const BBox& o) const {
    return !empty && !o.empty && min_x <= o.max_x && o.min_x <= max_x &&
           min_y <= o.max_y && o.min_y <= max_y;
  }

  BBox intersection(const BBox& o) const {
    if (!intersects(o)) return {};
    return {std::max(min_x, o.min_x), std::min(max_x, o.max_x),
            std::max(min_y, o.min_y), std::min(max_y, o.max_y), false};
  }

  double overlap_area(const BBox& o) const {
    const BBox i = intersection(o);
    return i.empty ? 0.0 : i.width() * i.height();
  }
};

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

}  // namespace infranotes

#endif  // INFRANOTES_GEOMETRY_HPP
