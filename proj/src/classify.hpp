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

#ifndef INFRANOTES_CLASSIFY_HPP
#define INFRANOTES_CLASSIFY_HPP

#include <utility>
#include <vector>

#include "model.hpp"

namespace infranotes {

struct ClassifyConfig {
  int window = 9;               // moving-window width, odd and >= 3
  double z_std_threshold = 0.5; // mm, above this a stroke moved off board
  double erase_min_two_point_fraction = 0.8;

  void validate() const;
};

/// Centered moving-window standard deviation of z per sample, window
/// truncated at the stroke ends.  Population deviation (divide by n).
std::vector<double> depth_std_profile(const SampleSeries& series,
                                      const Stroke& stroke, int window);

/// Erase when enough frames track two points; otherwise off-board when the
/// depth deviation profile peaks above the threshold; otherwise on-board.
StrokeClass classify_stroke(const SampleSeries& series, const Stroke& stroke,
                            const ClassifyConfig& cfg);

struct ClassifiedStrokes {
  std::vector<Stroke> onboard;
  std::vector<Stroke> erase;
};

/// Partitions strokes by class, discarding off-board movement; order is
/// preserved within each list.
ClassifiedStrokes filter_onboard(const SampleSeries& series,
                                 const std::vector<Stroke>& strokes,
                                 const ClassifyConfig& cfg);

/// All strokes with their classes filled in (nothing discarded).
std::vector<Stroke> classify_all(const SampleSeries& series,
                                 const std::vector<Stroke>& strokes,
                                 const ClassifyConfig& cfg);

}  // namespace infranotes

#endif  // INFRANOTES_CLASSIFY_HPP
