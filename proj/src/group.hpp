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

#ifndef INFRANOTES_GROUP_HPP
#define INFRANOTES_GROUP_HPP

#include <vector>

#include "model.hpp"

namespace infranotes {

/// Horizontal gap between two time-consecutive strokes: leftmost x of b
/// minus rightmost x of a.  Negative when they overlap.
double inter_stroke_gap(const StrokeGeom& a, const StrokeGeom& b);

/// Recursive splitting: cut at the widest inter-stroke gap whenever the
/// left block ends no further right than the right block begins, recurse
/// into both halves, stop otherwise.  Ties pick the earliest gap.  Groups
/// come back ordered left to right by bounding box.
std::vector<CharacterGroup> group(const std::vector<StrokeGeom>& strokes);

/// Brute force over all contiguous partitions (at most 12 strokes): keeps
/// partitions whose consecutive blocks are strictly x-disjoint and returns
/// the one with the most blocks.  Test oracle, independent of group().
std::vector<CharacterGroup> group_exhaustive_oracle(
    const std::vector<StrokeGeom>& strokes);

}  // namespace infranotes

#endif  // INFRANOTES_GROUP_HPP
