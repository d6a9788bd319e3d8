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

#ifndef INFRANOTES_RENDER_HPP
#define INFRANOTES_RENDER_HPP

#include <string>
#include <vector>

#include "model.hpp"

namespace infranotes {

/// Flat list of visible polyline fragments in board coordinates; mask
/// blanking has already been applied geometrically.
struct SceneGraph {
  BBox view;
  std::vector<std::vector<Vec2>> polylines;
};

struct RenderStyle {
  double margin_mm = 5.0;
  double stroke_width = 1.2;
  std::string stroke_color = "#1a1a1a";
};

/// Deterministic SVG document: board millimeters map 1:1 to user units,
/// y flipped to screen orientation, coordinates fixed to three decimals so
/// output bytes are stable across runs.
std::string render_svg(const SceneGraph& scene, const RenderStyle& style);

/// Removes the parts of `pts` inside any of `rects` (borders count as
/// inside) and returns the surviving fragments in order.
std::vector<std::vector<Vec2>> clip_polyline_outside(
    const std::vector<Vec2>& pts, const std::vector<BBox>& rects);

}  // namespace infranotes

#endif  // INFRANOTES_RENDER_HPP
