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

#include "synthgen.hpp"

#include <algorithm>
#include <random>

namespace infranotes {
namespace {

// On-board speed floor; stroke ends dip to this so the slow-start/slow-end
// minima sit well under the segmentation threshold.
constexpr double kMinSpeed = 5.0;  // mm/s

// Air transits run in a fixed duration window so the pen-lift z impulse
// stays fast enough to clear the jump threshold at any travel distance.
constexpr double kMinTransitSeconds = 0.12;
constexpr double kMaxTransitSeconds = 0.28;
constexpr double kTransitRiseFrac = 0.25;

// Deterministic in-air depth wobble; hands never hold z steady in the air,
// and the classifier's moving-window deviation relies on that.
constexpr double kWobbleAmpMm = 1.5;
constexpr double kWobbleHz = 3.0;

constexpr double kEraserPassHeight = 30.0;  // mm covered per sweep pass
constexpr double kEraseSpeedFactor = 1.3;

double path_length(const Polyline& pts) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    len += (pts[i] - pts[i - 1]).norm();
  return len;
}

struct ArcPath {
  Polyline pts;
  std::vector<double> cum;

  explicit ArcPath(Polyline p) : pts(std::move(p)), cum(pts.size(), 0.0) {
    for (std::size_t i = 1; i < pts.size(); ++i)
      cum[i] = cum[i - 1] + (pts[i] - pts[i - 1]).norm();
  }

  double length() const { return cum.back(); }

  Vec2 at(double s) const {
    if (s <= 0) return pts.front();
    if (s >= cum.back()) return pts.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), s);
    const std::size_t j = static_cast<std::size_t>(it - cum.begin()) - 1;
    const double seg = cum[j + 1] - cum[j];
    const double u = seg > 0 ? (s - cum[j]) / seg : 0.0;
    return pts[j] + (pts[j + 1] - pts[j]) * u;
  }
};

void validate_style(const WritingStyle& style) {
  if (style.sample_rate < 30.0 || style.sample_rate > 200.0)
    throw Error(Errc::InvalidArgument, "sample_rate outside [30, 200]");
  if (style.spacing < 0.0)
    throw Error(Errc::InvalidArgument, "spacing must be >= 0");
  if (style.letter_width <= 0.0 || style.write_speed <= 0.0 ||
      style.lift_height < 0.0)
    throw Error(Errc::InvalidArgument, "non-positive style parameter");
}

/// Builds one session on a shared sample clock; every public synth_* entry
/// point is a thin wrapper around this.
class Emitter {
 public:
  explicit Emitter(const WritingStyle& style)
      : style_(style), dt_(1.0 / style.sample_rate) {
    validate_style(style);
    cursor_ = {style.left_margin, style.first_line_y};
  }

  void draw_glyph(const GlyphPlan& plan, Vec2 origin) {
    const double w = style_.letter_width;
    const Vec2 center{origin.x + 0.5 * w, origin.y + 0.5 * w};
    const double tilt = deg_to_rad(style_.tilt_deg);
    auto map_pt = [&](Vec2 p) {
      const Vec2 board{origin.x + p.x * w, origin.y + p.y * w};
      return tilt != 0.0 ? rotate_about(board, center, tilt) : board;
    };

    const int glyph_id = next_glyph_id_++;
    BBox ink;
    for (const PenStroke& stroke : plan.pen_strokes) {
      Polyline path;
      std::vector<double> piece_ends;
      double cum = 0.0;
      for (const Polyline& segment : stroke.segments) {
        Polyline mapped;
        mapped.reserve(segment.size());
        for (Vec2 p : segment) {
          const Vec2 b = map_pt(p);
          ink.extend(b.x, b.y);
          mapped.push_back(b);
        }
        cum += path_length(mapped);
        piece_ends.push_back(cum);
        for (const Vec2& p : mapped)
          if (path.empty() || (p - path.back()).norm() > 1e-12)
            path.push_back(p);
      }
      transit_to(path.front());
      draw_path(path, piece_ends, style_.write_speed, StrokeClass::OnBoard,
                glyph_id, 1);
    }
    result_.truth.glyphs.push_back({glyph_id, plan.letter, ink});
  }

  void write_text(const std::string& text, Vec2 start, bool flow_cursor) {
    Vec2 cursor = start;
    const double advance = style_.letter_width + style_.spacing;
    for (char ch : text) {
      if (ch == ' ') {
        cursor.x += advance;
      } else if (ch == '\n') {
        cursor = {style_.left_margin, cursor.y - style_.line_pitch};
        pending_event_ = TruthEventKind::NewLine;
      } else if (ch == '\f') {
        cursor = {style_.left_margin, style_.page_top_y};
        pending_event_ = TruthEventKind::NewPage;
      } else {
        const GlyphPlan* plan = glyph_plan(ch);
        if (!plan)
          throw Error(Errc::NoGlyphPlan,
                      std::string("no glyph plan for '") + ch + "'");
        draw_glyph(*plan, cursor);
        cursor.x += advance;
      }
    }
    if (flow_cursor) cursor_ = cursor;
  }

  void erase_region(const BBox& region) {
    if (region.empty || region.width() <= 0.0 || region.height() <= 0.0)
      throw Error(Errc::DegenerateRegion, "erase region has no area");
    const int passes = std::max(
        1, static_cast<int>(std::ceil(region.height() / kEraserPassHeight)));
    const double step = region.height() / passes;
    Polyline path;
    for (int i = 0; i < passes; ++i) {
      const double y = region.max_y - step * (i + 0.5);
      const bool ltr = i % 2 == 0;
      const Vec2 a{ltr ? region.min_x : region.max_x, y};
      const Vec2 b{ltr ? region.max_x : region.min_x, y};
      if (!path.empty()) {
        // Rounded turnaround joining the previous pass end to this pass
        // start; both share an x, the semicircle bulges outward.
        const Vec2 prev = path.back();
        const double cy = (prev.y + a.y) / 2.0;
        const double r = (prev.y - a.y) / 2.0;
        const bool right = prev.x >= region.min_x + region.width() / 2.0;
        for (int k = 1; k < 6; ++k) {
          const double ang = deg_to_rad(right ? 90.0 - 180.0 * k / 6.0
                                              : 90.0 + 180.0 * k / 6.0);
          path.push_back(
              {prev.x + r * std::cos(ang), cy + r * std::sin(ang)});
        }
      }
      if (path.empty() || (a - path.back()).norm() > 1e-12) path.push_back(a);
      path.push_back(b);
    }
    transit_to(path.front());
    const double t_start = t_next_;
    draw_path(path, {path_length(path)},
              style_.write_speed * kEraseSpeedFactor, StrokeClass::Erase, -1,
              2);
    result_.truth.events.push_back({TruthEventKind::Erase, t_start});
  }

  Vec2 cursor() const { return cursor_; }

  SynthResult take() {
    derive_velocities(result_.series);
    return std::move(result_);
  }

 private:
  // Raised-cosine speed profile along `path`; one truth span per entry of
  // `piece_ends` (cumulative arclength of each smooth piece).
  void draw_path(const Polyline& path, const std::vector<double>& piece_ends,
                 double peak_speed, StrokeClass cls, int glyph_id,
                 int frame_points) {
    const ArcPath arc(path);
    const double len = arc.length();
    const double mean = kMinSpeed + (peak_speed - kMinSpeed) * 0.5;
    const int n =
        std::max(6, static_cast<int>(std::lround(len / mean / dt_)));
    const double T = n * dt_;

    open_span(cls, glyph_id);
    if (result_.series.empty())
      push_sample(arc.at(0.0), 0.0, frame_points);
    std::size_t piece = 0;
    for (int i = 1; i <= n; ++i) {
      const double t = i * dt_;
      const double s =
          kMinSpeed * t +
          (peak_speed - kMinSpeed) *
              (t / 2.0 - T / (4.0 * kPi) * std::sin(2.0 * kPi * t / T));
      const double clamped = std::min(s, len);
      while (piece + 1 < piece_ends.size() &&
             clamped > piece_ends[piece] + 1e-9) {
        ++piece;
        close_span();
        open_span(cls, glyph_id);
      }
      push_sample(arc.at(clamped), 0.0, frame_points);
    }
    close_span();
  }

  // Pen-up hop to `target`.  A zero-distance hop still lifts in place so
  // two strokes sharing an endpoint stay separate strokes.
  void transit_to(Vec2 target) {
    if (result_.series.empty()) {
      pen_ = target;
      return;
    }
    const Vec2 from = pen_;
    const double dist = (target - from).norm();
    const double speed = style_.write_speed * style_.transit_speed_factor;
    const double raw_T =
        std::clamp(dist / speed, kMinTransitSeconds, kMaxTransitSeconds);
    const int n = std::max(12, static_cast<int>(std::lround(raw_T / dt_)));

    open_span(StrokeClass::OffBoard, -1);
    for (int i = 1; i <= n; ++i) {
      const double u = static_cast<double>(i) / n;
      const double s = dist * (u - std::sin(2.0 * kPi * u) / (2.0 * kPi));
      const Vec2 xy = dist > 1e-12 ? from + (target - from) * (s / dist) : from;
      push_sample(xy, transit_z(u, i * dt_), 1);
    }
    close_span();
  }

  double transit_z(double u, double local_t) const {
    const double lift = style_.lift_height;
    double z;
    if (u < kTransitRiseFrac) {
      const double r = u / kTransitRiseFrac;
      const double sr = std::sin(kPi * r / 2.0);
      z = lift * sr * sr;
    } else if (u > 1.0 - kTransitRiseFrac) {
      const double r = (1.0 - u) / kTransitRiseFrac;
      const double sr = std::sin(kPi * r / 2.0);
      z = lift * sr * sr;
    } else {
      z = lift;
    }
    const double env = std::sin(kPi * u);
    z += kWobbleAmpMm * env * env * std::sin(2.0 * kPi * kWobbleHz * local_t);
    return z;
  }

  void push_sample(Vec2 xy, double z, int frame_points) {
    SamplePoint p;
    p.t = t_next_;
    p.pos = {xy.x, xy.y, z};
    p.frame_points = frame_points;
    result_.series.samples.push_back(p);
    t_next_ += dt_;
    pen_ = xy;
  }

  void open_span(StrokeClass cls, int glyph_id) {
    span_start_ = result_.series.size();
    span_cls_ = cls;
    span_glyph_ = glyph_id;
    if (pending_event_ && cls == StrokeClass::OnBoard) {
      result_.truth.events.push_back({*pending_event_, t_next_});
      pending_event_.reset();
    }
  }

  void close_span() {
    const std::size_t end = result_.series.size();
    if (end > span_start_)
      result_.truth.spans.push_back(
          {span_start_, end, span_cls_, span_glyph_});
  }

  WritingStyle style_;
  double dt_;
  SynthResult result_;
  Vec2 pen_;
  Vec2 cursor_;
  double t_next_ = 0.0;
  std::size_t span_start_ = 0;
  StrokeClass span_cls_ = StrokeClass::OnBoard;
  int span_glyph_ = -1;
  int next_glyph_id_ = 0;
  std::optional<TruthEventKind> pending_event_;
};

}  // namespace

SynthResult synth_glyph(char letter, const WritingStyle& style, Vec2 origin) {
  const GlyphPlan* plan = glyph_plan(letter);
  if (!plan)
    throw Error(Errc::NoGlyphPlan,
                std::string("no glyph plan for '") + letter + "'");
  Emitter e(style);
  e.draw_glyph(*plan, origin);
  return e.take();
}

SynthResult synth_text(const std::string& text, const WritingStyle& style) {
  if (text.empty()) throw Error(Errc::InvalidArgument, "empty text");
  Emitter e(style);
  e.write_text(text, {style.left_margin, style.first_line_y}, true);
  return e.take();
}

SynthResult synth_erase(const BBox& region, const WritingStyle& style) {
  Emitter e(style);
  e.erase_region(region);
  return e.take();
}

SynthResult synth_session(const std::vector<SessionAction>& actions,
                          const WritingStyle& style) {
  Emitter e(style);
  for (const SessionAction& action : actions) {
    switch (action.kind) {
      case SessionAction::Kind::Text:
        e.write_text(action.text, e.cursor(), true);
        break;
      case SessionAction::Kind::TextAt:
        e.write_text(action.text, action.at, false);
        break;
      case SessionAction::Kind::Erase:
        e.erase_region(action.region);
        break;
    }
  }
  return e.take();
}

SampleSeries add_noise(const SampleSeries& series, const NoiseModel& noise) {
  if (noise.sigma_xy < 0.0 || noise.sigma_z < 0.0)
    throw Error(Errc::InvalidArgument, "negative noise sigma");
  if (noise.sigma_xy == 0.0 && noise.sigma_z == 0.0) return series;
  std::mt19937_64 rng(noise.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SampleSeries out = series;
  for (SamplePoint& p : out.samples) {
    p.pos.x += noise.sigma_xy * gauss(rng);
    p.pos.y += noise.sigma_xy * gauss(rng);
    p.pos.z += noise.sigma_z * gauss(rng);
  }
  derive_velocities(out);
  return out;
}

SampleSeries rotate_series(const SampleSeries& series, double degrees,
                           Vec2 pivot) {
  const double rad = deg_to_rad(degrees);
  const double c = std::cos(rad), s = std::sin(rad);
  SampleSeries out = series;
  for (SamplePoint& p : out.samples) {
    const Vec2 xy = rotate_about(p.pos.xy(), pivot, rad);
    p.pos.x = xy.x;
    p.pos.y = xy.y;
    const double vx = c * p.vel.x - s * p.vel.y;
    const double vy = s * p.vel.x + c * p.vel.y;
    p.vel.x = vx;
    p.vel.y = vy;
  }
  return out;
}

}  // namespace infranotes
