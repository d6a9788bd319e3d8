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

#ifndef INFRANOTES_CONFIG_HPP
#define INFRANOTES_CONFIG_HPP

#include <string>

#include "classify.hpp"
#include "noteevents.hpp"
#include "segment.hpp"
#include "synthgen.hpp"

namespace infranotes {

/// Every tunable in one place, loadable from a flat key=value text file.
struct Config {
  SegmentConfig segment;
  ClassifyConfig classify;
  EventConfig events;
  WritingStyle style;
  NoiseModel noise;
  double word_gap_mm = 25.0;  // recognized-text word boundary

  /// Sets one key; unknown keys or unparsable values throw InvalidArgument.
  void set(const std::string& key, const std::string& value);

  /// Applies `key=value` lines ('#' comments and blanks skipped).
  void load(const std::string& bytes);

  /// All keys with current values, one per line.
  std::string dump() const;
};

}  // namespace infranotes

#endif  // INFRANOTES_CONFIG_HPP
