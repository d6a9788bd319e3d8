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

#include "group.hpp"

#include <algorithm>

namespace infranotes {
namespace {

CharacterGroup make_group(const std::vector<StrokeGeom>& strokes,
                          std::size_t first, std::size_t last) {
  CharacterGroup g;
  for (std::size_t i = first; i <= last; ++i) {
    g.strokes.push_back(strokes[i]);
    g.bbox.extend(strokes[i].bbox());
  }
  return g;
}

// GROUPING over strokes[first..last], emitting groups in recursion order.
void grouping(const std::vector<StrokeGeom>& strokes,
              const std::vector<BBox>& boxes, std::size_t first,
              std::size_t last, std::vector<CharacterGroup>& out) {
  if (first == last) {
    out.push_back(make_group(strokes, first, last));
    return;
  }
  std::size_t cut = first;
  double widest = -1e300;
  for (std::size_t i = first; i < last; ++i) {
    const double gap = boxes[i + 1].min_x - boxes[i].max_x;
    if (gap > widest) {  // earliest wins ties
      widest = gap;
      cut = i;
    }
  }
  // Rightmost point of the whole left block vs leftmost of the right block.
  double right_of_left = -1e300, left_of_right = 1e300;
  for (std::size_t j = first; j <= cut; ++j)
    right_of_left = std::max(right_of_left, boxes[j].max_x);
  for (std::size_t k = cut + 1; k <= last; ++k)
    left_of_right = std::min(left_of_right, boxes[k].min_x);
  if (right_of_left <= left_of_right) {
    grouping(strokes, boxes, first, cut, out);
    grouping(strokes, boxes, cut + 1, last, out);
  } else {
    out.push_back(make_group(strokes, first, last));
  }
}

}  // namespace

double inter_stroke_gap(const StrokeGeom& a, const StrokeGeom& b) {
  return b.bbox().min_x - a.bbox().max_x;
}

std::vector<CharacterGroup> group(const std::vector<StrokeGeom>& strokes) {
  if (strokes.empty()) return {};
  std::vector<BBox> boxes;
  boxes.reserve(strokes.size());
  for (const StrokeGeom& s : strokes) boxes.push_back(s.bbox());
  std::vector<CharacterGroup> out;
  grouping(strokes, boxes, 0, strokes.size() - 1, out);
  std::sort(out.begin(), out.end(),
            [](const CharacterGroup& a, const CharacterGroup& b) {
              return a.bbox.min_x < b.bbox.min_x;
            });
  return out;
}

std::vector<CharacterGroup> group_exhaustive_oracle(
    const std::vector<StrokeGeom>& strokes) {
  if (strokes.empty()) return {};
  const std::size_t n = strokes.size();
  if (n > 12) throw Error(Errc::OracleTooLarge, "more than 12 strokes");
  std::vector<BBox> boxes;
  for (const StrokeGeom& s : strokes) boxes.push_back(s.bbox());

  std::vector<std::size_t> best_cuts;
  bool found = false;
  const unsigned long masks = 1ul << (n - 1);
  for (unsigned long mask = 0; mask < masks; ++mask) {
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (mask & (1ul << i)) cuts.push_back(i);

    bool valid = true;
    std::size_t start = 0;
    double prev_max_x = -1e300;
    for (std::size_t c = 0; c <= cuts.size() && valid; ++c) {
      const std::size_t end = c < cuts.size() ? cuts[c] : n - 1;
      double min_x = 1e300, max_x = -1e300;
      for (std::size_t i = start; i <= end; ++i) {
        min_x = std::min(min_x, boxes[i].min_x);
        max_x = std::max(max_x, boxes[i].max_x);
      }
      if (c > 0 && prev_max_x > min_x) valid = false;
      prev_max_x = max_x;
      start = end + 1;
    }
    if (valid && (!found || cuts.size() > best_cuts.size())) {
      best_cuts = cuts;
      found = true;
    }
  }

  std::vector<CharacterGroup> out;
  std::size_t start = 0;
  for (std::size_t c = 0; c <= best_cuts.size(); ++c) {
    const std::size_t end = c < best_cuts.size() ? best_cuts[c] : n - 1;
    out.push_back(make_group(strokes, start, end));
    start = end + 1;
  }
  std::sort(out.begin(), out.end(),
            [](const CharacterGroup& a, const CharacterGroup& b) {
              return a.bbox.min_x < b.bbox.min_x;
            });
  return out;
}

}  // namespace infranotes
