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

#ifndef INFRANOTES_MODEL_HPP
#define INFRANOTES_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"

namespace infranotes {

// Board coordinate convention: x runs left to right along the board, y runs
// bottom to top, z is the perpendicular distance from the board surface
// (0 at contact, positive away from the board).

/// One sensor frame observation.
struct SamplePoint {
  double t = 0.0;       // seconds, non-decreasing within a stream
  Vec3 pos;             // millimeters
  Vec3 vel;             // millimeters / second
  int frame_points = 1; // number of tracked tips in this frame (>= 1)
};

struct SampleSeries {
  std::vector<SamplePoint> samples;
  std::string source_id;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  const SamplePoint& operator[](std::size_t i) const { return samples[i]; }
};

enum class StrokeClass { Unclassified, OnBoard, OffBoard, Erase };

const char* stroke_class_name(StrokeClass c);

/// Which detector placed the boundary that starts this stroke.
enum class BoundaryCause { StreamEdge, SlowSpeed, ZJump, SharpAngle };

const char* boundary_cause_name(BoundaryCause c);

/// A contiguous run of samples of one parent series, identified by its
/// half-open index range [begin, end).
struct Stroke {
  std::size_t begin = 0;
  std::size_t end = 0;
  StrokeClass cls = StrokeClass::Unclassified;
  BoundaryCause cause = BoundaryCause::StreamEdge;

  std::size_t size() const { return end - begin; }
};

inline double stroke_start_t(const SampleSeries& s, const Stroke& st) {
  return s.samples[st.begin].t;
}
inline double stroke_end_t(const SampleSeries& s, const Stroke& st) {
  return s.samples[st.end - 1].t;
}

/// Self-contained stroke geometry (board-plane polyline plus time span).
/// Used once strokes leave the raw series: grouping, recognition, assembly.
struct StrokeGeom {
  std::vector<Vec2> pts;
  double start_t = 0.0;
  double end_t = 0.0;

  BBox bbox() const {
    BBox b;
    for (const Vec2& p : pts) b.extend(p.x, p.y);
    return b;
  }
};

StrokeGeom stroke_geometry(const SampleSeries& s, const Stroke& st);

/// Ordered on-board strokes forming one glyph.
struct CharacterGroup {
  std::vector<StrokeGeom> strokes;
  BBox bbox;
};

BBox bbox_of(const SampleSeries& s, const Stroke& st);

inline double xy_speed(const SamplePoint& p) {
  return std::hypot(p.vel.x, p.vel.y);
}

inline double z_speed(const SamplePoint& p) { return std::abs(p.vel.z); }

/// Replaces every velocity with central finite differences of position
/// (forward/backward at the ends).  Zero-length time steps give zero velocity.
void derive_velocities(SampleSeries& s);

}  // namespace infranotes

#endif  // INFRANOTES_MODEL_HPP
