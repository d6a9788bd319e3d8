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

#include "classify.hpp"

#include <cmath>

namespace infranotes {

void ClassifyConfig::validate() const {
  if (window < 3 || window % 2 == 0)
    throw Error(Errc::InvalidArgument, "window must be odd and >= 3");
  if (z_std_threshold <= 0)
    throw Error(Errc::InvalidArgument, "z_std_threshold must be positive");
  if (erase_min_two_point_fraction <= 0 || erase_min_two_point_fraction > 1)
    throw Error(Errc::InvalidArgument,
                "erase_min_two_point_fraction outside (0, 1]");
}

std::vector<double> depth_std_profile(const SampleSeries& series,
                                      const Stroke& stroke, int window) {
  const std::size_t len = stroke.size();
  if (len < 3) throw Error(Errc::TooShort, "stroke shorter than 3 samples");
  const std::size_t half = static_cast<std::size_t>(window) / 2;
  std::vector<double> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t lo = i > half ? i - half : 0;
    const std::size_t hi = std::min(len, i + half + 1);
    double mean = 0.0;
    for (std::size_t j = lo; j < hi; ++j)
      mean += series[stroke.begin + j].pos.z;
    const double n = static_cast<double>(hi - lo);
    mean /= n;
    double var = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
      const double d = series[stroke.begin + j].pos.z - mean;
      var += d * d;
    }
    out[i] = std::sqrt(var / n);
  }
  return out;
}

StrokeClass classify_stroke(const SampleSeries& series, const Stroke& stroke,
                            const ClassifyConfig& cfg) {
  cfg.validate();
  std::size_t two_point = 0;
  for (std::size_t i = stroke.begin; i < stroke.end; ++i)
    if (series[i].frame_points == 2) ++two_point;
  // The two-point eraser signature is structural and beats depth classes.
  if (static_cast<double>(two_point) >=
      cfg.erase_min_two_point_fraction * static_cast<double>(stroke.size()))
    return StrokeClass::Erase;

  const std::vector<double> profile =
      depth_std_profile(series, stroke, cfg.window);
  double peak = 0.0;
  for (double v : profile) peak = std::max(peak, v);
  return peak > cfg.z_std_threshold ? StrokeClass::OffBoard
                                    : StrokeClass::OnBoard;
}

ClassifiedStrokes filter_onboard(const SampleSeries& series,
                                 const std::vector<Stroke>& strokes,
                                 const ClassifyConfig& cfg) {
  ClassifiedStrokes out;
  for (const Stroke& s : strokes) {
    Stroke labeled = s;
    labeled.cls = classify_stroke(series, s, cfg);
    switch (labeled.cls) {
      case StrokeClass::OnBoard: out.onboard.push_back(labeled); break;
      case StrokeClass::Erase: out.erase.push_back(labeled); break;
      default: break;  // off-board movement is dropped
    }
  }
  return out;
}

std::vector<Stroke> classify_all(const SampleSeries& series,
                                 const std::vector<Stroke>& strokes,
                                 const ClassifyConfig& cfg) {
  std::vector<Stroke> out;
  out.reserve(strokes.size());
  for (const Stroke& s : strokes) {
    Stroke labeled = s;
    labeled.cls = classify_stroke(series, s, cfg);
    out.push_back(labeled);
  }
  return out;
}

}  // namespace infranotes
