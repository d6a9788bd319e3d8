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
//
// Deterministic desk-scale "lecturer writing" generator.  Produces raw
// trajectory streams plus ground-truth labels, standing in for the infrared
// sensor rig when verifying the processing pipeline.

#ifndef INFRANOTES_SYNTHGEN_HPP
#define INFRANOTES_SYNTHGEN_HPP

#include <string>
#include <vector>

#include "ingest.hpp"
#include "model.hpp"
#include "recognize.hpp"

namespace infranotes {

using Polyline = std::vector<Vec2>;

/// One pen-down stroke: smooth segments joined corner to corner and drawn
/// without lifting the tool.
struct PenStroke {
  std::vector<Polyline> segments;
};

/// A letter's shape in a unit box (y up), one primitive label per segment.
/// Diagonal segments keep at least 10 degrees of margin to the direction
/// bins so tilted corpora classify identically.
struct GlyphPlan {
  char letter = '?';
  std::vector<PenStroke> pen_strokes;
  std::vector<Primitive> canonical_primitives;

  /// Number of basic strokes the glyph decomposes into (segments across all
  /// pen strokes); equals the ground-truth on-board span count.
  int stroke_count() const {
    int n = 0;
    for (const PenStroke& s : pen_strokes) n += static_cast<int>(s.segments.size());
    return n;
  }
};

/// Plan for an uppercase letter, or nullptr when none exists.
const GlyphPlan* glyph_plan(char letter);

struct NoiseModel {
  double sigma_xy = 0.35;  // mm, per x and y
  double sigma_z = 0.14;   // mm
  unsigned long long seed = 1;
};

struct WritingStyle {
  double letter_width = 40.0;         // mm
  double spacing = 10.0;              // mm between letters
  double write_speed = 150.0;         // mm/s, peak on-board speed
  double lift_height = 8.0;           // mm air-transit clearance
  double transit_speed_factor = 2.5;  // times write_speed
  double sample_rate = 100.0;         // Hz, valid range [30, 200]
  double tilt_deg = 0.0;              // per-glyph rotation about its center

  // Board layout (mm).  New pages start at the board top; the session's
  // first line sits lower so the bottom-to-top new-page motion exists even
  // for short sessions.
  double left_margin = 20.0;
  double line_pitch = 60.0;
  double first_line_y = 320.0;
  double page_top_y = 440.0;
};

struct SynthResult {
  SampleSeries series;
  GroundTruth truth;
};

/// One glyph at `origin` (lower-left of its letter box).
SynthResult synth_glyph(char letter, const WritingStyle& style, Vec2 origin);

/// Letters A-Z, spaces, newlines and formfeeds, laid out left to right and
/// top to bottom.  A newline returns to the left margin one pitch lower; a
/// formfeed returns to the top of the board (new page).  Consecutive
/// pending line/page breaks collapse to the last one.
SynthResult synth_text(const std::string& text, const WritingStyle& style);

/// Serpentine eraser sweep over `region`; every frame reports two tracked
/// points (the eraser's bottom edge).
SynthResult synth_erase(const BBox& region, const WritingStyle& style);

/// Scripted session mixing writing, explicitly placed rewrites, and erases.
struct SessionAction {
  enum class Kind { Text, TextAt, Erase };
  Kind kind = Kind::Text;
  std::string text;
  Vec2 at;      // TextAt: origin of the first letter box
  BBox region;  // Erase

  static SessionAction write(std::string t) {
    return {Kind::Text, std::move(t), {}, {}};
  }
  static SessionAction write_at(std::string t, Vec2 origin) {
    return {Kind::TextAt, std::move(t), origin, {}};
  }
  static SessionAction erase(const BBox& region) {
    return {Kind::Erase, {}, {}, region};
  }
};

SynthResult synth_session(const std::vector<SessionAction>& actions,
                          const WritingStyle& style);

/// Zero-mean Gaussian position perturbation from a deterministic generator;
/// velocities are recomputed by finite differences.  Identity when both
/// sigmas are zero.
SampleSeries add_noise(const SampleSeries& series, const NoiseModel& noise);

/// Rigid rotation of the board plane about `pivot`; z is untouched and
/// velocities rotate consistently.
SampleSeries rotate_series(const SampleSeries& series, double degrees,
                           Vec2 pivot);

}  // namespace infranotes

#endif  // INFRANOTES_SYNTHGEN_HPP
