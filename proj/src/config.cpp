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

#include "config.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "ingest.hpp"

namespace infranotes {
namespace {

struct Key {
  std::function<void(Config&, const std::string&)> set;
  std::function<std::string(const Config&)> get;
};

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidArgument, key + ": bad number '" + v + "'");
  }
  if (pos != v.size())
    throw Error(Errc::InvalidArgument, key + ": bad number '" + v + "'");
  return out;
}

template <typename T>
Key num_key(T Config::* unused, std::function<T*(Config&)> field);

Key dkey(std::function<double*(Config&)> field) {
  return {[field](Config& c, const std::string& v) {
            *field(c) = parse_double("", v);
          },
          [field](const Config& c) {
            return fmt_num(*field(const_cast<Config&>(c)));
          }};
}

Key ikey(std::function<int*(Config&)> field) {
  return {[field](Config& c, const std::string& v) {
            *field(c) = static_cast<int>(parse_double("", v));
          },
          [field](const Config& c) {
            return std::to_string(*field(const_cast<Config&>(c)));
          }};
}

Key ukey(std::function<unsigned long long*(Config&)> field) {
  return {[field](Config& c, const std::string& v) {
            *field(c) = std::stoull(v);
          },
          [field](const Config& c) {
            return std::to_string(*field(const_cast<Config&>(c)));
          }};
}

const std::map<std::string, Key>& registry() {
  static const std::map<std::string, Key> keys = {
      {"segment.low_xy_speed", dkey([](Config& c) { return &c.segment.low_xy_speed; })},
      {"segment.z_jump_speed", dkey([](Config& c) { return &c.segment.z_jump_speed; })},
      {"segment.sharp_angle_deg", dkey([](Config& c) { return &c.segment.sharp_angle_deg; })},
      {"segment.min_stroke_samples", ikey([](Config& c) { return &c.segment.min_stroke_samples; })},
      {"segment.min_stroke_duration", dkey([](Config& c) { return &c.segment.min_stroke_duration; })},
      {"classify.window", ikey([](Config& c) { return &c.classify.window; })},
      {"classify.z_std_threshold", dkey([](Config& c) { return &c.classify.z_std_threshold; })},
      {"classify.erase_min_two_point_fraction", dkey([](Config& c) { return &c.classify.erase_min_two_point_fraction; })},
      {"events.newline_floor_mm", dkey([](Config& c) { return &c.events.newline_floor_mm; })},
      {"events.newline_left_tol_mm", dkey([](Config& c) { return &c.events.newline_left_tol_mm; })},
      {"events.newline_drop_frac", dkey([](Config& c) { return &c.events.newline_drop_frac; })},
      {"events.newpage_floor_mm", dkey([](Config& c) { return &c.events.newpage_floor_mm; })},
      {"events.mask_window_s", dkey([](Config& c) { return &c.events.mask_window_s; })},
      {"synth.letter_width", dkey([](Config& c) { return &c.style.letter_width; })},
      {"synth.spacing", dkey([](Config& c) { return &c.style.spacing; })},
      {"synth.write_speed", dkey([](Config& c) { return &c.style.write_speed; })},
      {"synth.lift_height", dkey([](Config& c) { return &c.style.lift_height; })},
      {"synth.transit_speed_factor", dkey([](Config& c) { return &c.style.transit_speed_factor; })},
      {"synth.sample_rate", dkey([](Config& c) { return &c.style.sample_rate; })},
      {"synth.tilt_deg", dkey([](Config& c) { return &c.style.tilt_deg; })},
      {"synth.left_margin", dkey([](Config& c) { return &c.style.left_margin; })},
      {"synth.line_pitch", dkey([](Config& c) { return &c.style.line_pitch; })},
      {"synth.first_line_y", dkey([](Config& c) { return &c.style.first_line_y; })},
      {"synth.page_top_y", dkey([](Config& c) { return &c.style.page_top_y; })},
      {"noise.sigma_xy", dkey([](Config& c) { return &c.noise.sigma_xy; })},
      {"noise.sigma_z", dkey([](Config& c) { return &c.noise.sigma_z; })},
      {"noise.seed", ukey([](Config& c) { return &c.noise.seed; })},
      {"pipeline.word_gap_mm", dkey([](Config& c) { return &c.word_gap_mm; })},
  };
  return keys;
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
  const auto it = registry().find(key);
  if (it == registry().end())
    throw Error(Errc::InvalidArgument, "unknown config key '" + key + "'");
  try {
    it->second.set(*this, value);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::InvalidArgument,
                key + ": bad value '" + value + "'");
  }
}

void Config::load(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": expected key=value");
    std::string key = line.substr(first, eq - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
      key.pop_back();
    std::string value = line.substr(eq + 1);
    const std::size_t v0 = value.find_first_not_of(" \t");
    value = v0 == std::string::npos ? "" : value.substr(v0);
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t'))
      value.pop_back();
    set(key, value);
  }
}

std::string Config::dump() const {
  std::string out;
  for (const auto& [key, accessor] : registry())
    out += key + '=' + accessor.get(*this) + '\n';
  return out;
}

}  // namespace infranotes
