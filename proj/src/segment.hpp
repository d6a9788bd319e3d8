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

#ifndef INFRANOTES_SEGMENT_HPP
#define INFRANOTES_SEGMENT_HPP

#include <string>
#include <vector>

#include "model.hpp"

namespace infranotes {

struct SegmentConfig {
  double low_xy_speed = 50.0;       // mm/s, slow start/end boundary ceiling
  double z_jump_speed = 60.0;       // mm/s, pen lift impulse threshold
  double sharp_angle_deg = 120.0;   // degrees of direction change
  int min_stroke_samples = 4;       // runts below this merge away
  double min_stroke_duration = 0.03;  // seconds

  void validate() const;
};

/// Interior angle at p between p_prev and p_next by the law of cosines,
/// in degrees (180 = collinear).  The direction change is 180 - angle.
double vertex_angle(Vec2 p_prev, Vec2 p, Vec2 p_next);

/// Splits a series into ordered, disjoint strokes covering every sample.
///
/// Boundary detectors, in priority order when they land within 3 samples:
///  1. pen-lift z impulses: runs of |vz| above the jump threshold are
///     coalesced into one air episode whose edges snap to the adjacent
///     slow-speed minima, so a lift-move-touch transit stays one stroke;
///  2. local minima of xy speed below the slow threshold;
///  3. sharp direction changes (applied per stroke, never inside an air
///     episode).
/// Runt pieces merge into their predecessor (leading runts merge forward).
std::vector<Stroke> segment(const SampleSeries& series,
                            const SegmentConfig& cfg);

/// Cuts one stroke at interior vertices whose direction change exceeds the
/// sharp-angle threshold; non-maximum suppression within a 3-sample radius
/// keeps one cut per corner.  Angles are measured on positions smoothed by
/// a 3-sample moving average to keep sensor noise from minting corners.
std::vector<Stroke> split_at_sharp_angles(const SampleSeries& series,
                                          const Stroke& stroke,
                                          const SegmentConfig& cfg);

/// Per-sample diagnostics (xy speed, |vz|, direction change, boundaries)
/// as an `infranotes-trace v1` line-record payload for plotting.
std::string segment_trace(const SampleSeries& series, const SegmentConfig& cfg);

}  // namespace infranotes

#endif  // INFRANOTES_SEGMENT_HPP
