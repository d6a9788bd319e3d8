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

#include "segment.hpp"

#include <algorithm>
#include <optional>

#include "ingest.hpp"

namespace infranotes {
namespace {

// Sub-threshold gaps this short do not end a z impulse episode (the apex of
// a lift has |vz| near zero for a few samples).
constexpr std::size_t kEpisodeGapSamples = 10;

// Episode edges extend through samples whose |vz| stays above this fraction
// of the jump threshold, pinning the boundary to the actual lift/touch
// moment instead of the threshold crossing.
constexpr double kEpisodeTailFrac = 0.3;

constexpr std::size_t kDedupeRadius = 3;
constexpr std::size_t kSharpNmsRadius = 3;

struct Candidate {
  std::size_t index = 0;
  BoundaryCause cause = BoundaryCause::SlowSpeed;
  int priority = 1;  // lower wins: zjump 0, slow 1
};

struct Episode {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
};

// Maximal run of xy speed below the slow threshold; one boundary candidate
// per valley, at its minimum.
struct Valley {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  std::size_t argmin = 0;
};

std::vector<Vec2> smoothed_xy(const SampleSeries& series, std::size_t begin,
                              std::size_t end) {
  std::vector<Vec2> out(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    Vec2 acc = series[i].pos.xy();
    int n = 1;
    if (i > begin) {
      acc = acc + series[i - 1].pos.xy();
      ++n;
    }
    if (i + 1 < end) {
      acc = acc + series[i + 1].pos.xy();
      ++n;
    }
    out[i - begin] = acc * (1.0 / n);
  }
  return out;
}

std::vector<std::size_t> slow_minima(const std::vector<double>& speed,
                                     double threshold) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < speed.size(); ++i) {
    if (speed[i] >= threshold) continue;
    if (speed[i] <= speed[i - 1] && speed[i] <= speed[i + 1] &&
        (speed[i] < speed[i - 1] || speed[i] < speed[i + 1]))
      out.push_back(i);
  }
  return out;
}

std::vector<Episode> z_episodes(const std::vector<double>& abs_vz,
                                double threshold) {
  std::vector<Episode> runs;
  std::optional<std::size_t> run_start;
  for (std::size_t i = 0; i <= abs_vz.size(); ++i) {
    const bool hot = i < abs_vz.size() && abs_vz[i] > threshold;
    if (hot && !run_start) run_start = i;
    if (!hot && run_start) {
      runs.push_back({*run_start, i});
      run_start.reset();
    }
  }
  std::vector<Episode> episodes;
  for (const Episode& run : runs) {
    if (!episodes.empty() &&
        run.start - episodes.back().end <= kEpisodeGapSamples) {
      episodes.back().end = run.end;
    } else {
      episodes.push_back(run);
    }
  }
  return episodes;
}

std::vector<std::size_t> sharp_vertices(const SampleSeries& series,
                                        const Stroke& stroke,
                                        const SegmentConfig& cfg) {
  const std::size_t len = stroke.size();
  if (len < 3) return {};
  const std::vector<Vec2> xy = smoothed_xy(series, stroke.begin, stroke.end);
  std::vector<double> turn(len, 0.0);
  for (std::size_t i = 1; i + 1 < len; ++i) {
    const Vec2 a = xy[i] - xy[i - 1];
    const Vec2 b = xy[i + 1] - xy[i];
    if (a.norm() < 1e-12 || b.norm() < 1e-12) continue;
    turn[i] = 180.0 - vertex_angle(xy[i - 1], xy[i], xy[i + 1]);
  }
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i + 1 < len; ++i) {
    if (turn[i] <= cfg.sharp_angle_deg) continue;
    if (i < kSharpNmsRadius || i + kSharpNmsRadius >= len) continue;
    bool is_max = true;
    for (std::size_t j = i - kSharpNmsRadius; j <= i + kSharpNmsRadius; ++j) {
      if (j == i) continue;
      if (turn[j] > turn[i] || (turn[j] == turn[i] && j < i)) {
        is_max = false;
        break;
      }
    }
    if (is_max) cuts.push_back(stroke.begin + i);
  }
  return cuts;
}

bool is_runt(const SampleSeries& series, const Stroke& s,
             const SegmentConfig& cfg) {
  if (s.size() < static_cast<std::size_t>(cfg.min_stroke_samples)) return true;
  return stroke_end_t(series, s) - stroke_start_t(series, s) <
         cfg.min_stroke_duration;
}

}  // namespace

void SegmentConfig::validate() const {
  if (low_xy_speed <= 0 || z_jump_speed <= 0 || min_stroke_samples <= 0 ||
      min_stroke_duration <= 0)
    throw Error(Errc::InvalidArgument, "segment thresholds must be positive");
  if (sharp_angle_deg <= 0 || sharp_angle_deg >= 180)
    throw Error(Errc::InvalidArgument, "sharp_angle_deg outside (0, 180)");
}

double vertex_angle(Vec2 p_prev, Vec2 p, Vec2 p_next) {
  const Vec2 a = p - p_prev;
  const Vec2 b = p - p_next;
  const double la = a.norm(), lb = b.norm();
  if (la < 1e-12 || lb < 1e-12)
    throw Error(Errc::DegenerateTriple, "coincident points");
  const Vec2 c = p_next - p_prev;
  double cosv = (la * la + lb * lb - c.dot(c)) / (2.0 * la * lb);
  cosv = std::clamp(cosv, -1.0, 1.0);
  return rad_to_deg(std::acos(cosv));
}

std::vector<Stroke> segment(const SampleSeries& series,
                            const SegmentConfig& cfg) {
  cfg.validate();
  const std::size_t n = series.size();
  if (n < 2) return {};

  std::vector<double> speed(n), abs_vz(n);
  for (std::size_t i = 0; i < n; ++i) {
    speed[i] = xy_speed(series[i]);
    abs_vz[i] = z_speed(series[i]);
  }

  std::vector<Episode> episodes = z_episodes(abs_vz, cfg.z_jump_speed);
  std::vector<std::size_t> minima = slow_minima(speed, cfg.low_xy_speed);
  std::vector<bool> minima_used(minima.size(), false);

  // Snap episode edges to the neighboring pen-up/pen-down speed minima.
  for (Episode& ep : episodes) {
    for (std::size_t m = 0; m < minima.size(); ++m) {
      const std::size_t idx = minima[m];
      if (idx <= ep.start && ep.start - idx <= kEpisodeSnapSamples) {
        ep.start = std::min(ep.start, idx);
        minima_used[m] = true;
      }
      if (idx >= ep.end && idx - ep.end <= kEpisodeSnapSamples) {
        ep.end = std::max(ep.end, idx);
        minima_used[m] = true;
      }
    }
  }

  auto in_episode = [&](std::size_t idx) {
    for (const Episode& ep : episodes)
      if (idx > ep.start && idx < ep.end) return true;
    return false;
  };

  std::vector<Candidate> candidates;
  for (const Episode& ep : episodes) {
    candidates.push_back({ep.start, BoundaryCause::ZJump, 0});
    if (ep.end < n) candidates.push_back({ep.end, BoundaryCause::ZJump, 0});
  }
  for (std::size_t m = 0; m < minima.size(); ++m) {
    if (minima_used[m] || in_episode(minima[m])) continue;
    candidates.push_back({minima[m], BoundaryCause::SlowSpeed, 1});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.index < b.index;
            });

  // One boundary per cluster of nearby candidates, higher detector first.
  std::vector<Candidate> boundaries;
  for (std::size_t i = 0; i < candidates.size();) {
    std::size_t j = i;
    Candidate best = candidates[i];
    while (j + 1 < candidates.size() &&
           candidates[j + 1].index - candidates[j].index <= kDedupeRadius) {
      ++j;
      if (candidates[j].priority < best.priority) best = candidates[j];
    }
    boundaries.push_back(best);
    i = j + 1;
  }

  std::vector<Stroke> strokes;
  std::size_t start = 0;
  BoundaryCause cause = BoundaryCause::StreamEdge;
  auto flush = [&](std::size_t end, BoundaryCause next_cause,
                   std::size_t next_start) {
    if (end > start) strokes.push_back({start, end, StrokeClass::Unclassified, cause});
    start = next_start;
    cause = next_cause;
  };
  for (const Candidate& b : boundaries) {
    if (b.index <= start || b.index >= n) continue;
    flush(b.index, b.cause, b.index);
  }
  flush(n, BoundaryCause::StreamEdge, n);

  // Sharp-angle refinement outside air episodes.
  std::vector<Stroke> refined;
  for (const Stroke& s : strokes) {
    bool air = false;
    for (const Episode& ep : episodes)
      if (s.begin >= ep.start && s.end <= ep.end) air = true;
    if (air || s.size() < 3) {
      refined.push_back(s);
      continue;
    }
    for (const Stroke& piece : split_at_sharp_angles(series, s, cfg))
      refined.push_back(piece);
  }

  // Runts merge into the preceding stroke; leading runts merge forward.
  std::vector<Stroke> merged;
  for (const Stroke& s : refined) {
    if (!merged.empty() && is_runt(series, s, cfg)) {
      merged.back().end = s.end;
      continue;
    }
    if (!merged.empty() && is_runt(series, merged.back(), cfg)) {
      Stroke head = merged.back();
      merged.pop_back();
      Stroke grown = s;
      grown.begin = head.begin;
      grown.cause = head.cause;
      merged.push_back(grown);
      continue;
    }
    merged.push_back(s);
  }
  // A single trailing runt can remain when the whole series is tiny.
  if (merged.size() >= 2 && is_runt(series, merged.back(), cfg)) {
    merged[merged.size() - 2].end = merged.back().end;
    merged.pop_back();
  }
  return merged;
}

std::vector<Stroke> split_at_sharp_angles(const SampleSeries& series,
                                          const Stroke& stroke,
                                          const SegmentConfig& cfg) {
  cfg.validate();
  const std::vector<std::size_t> cuts = sharp_vertices(series, stroke, cfg);
  if (cuts.empty()) return {stroke};
  std::vector<Stroke> out;
  std::size_t start = stroke.begin;
  BoundaryCause cause = stroke.cause;
  for (std::size_t cut : cuts) {
    out.push_back({start, cut, stroke.cls, cause});
    start = cut;
    cause = BoundaryCause::SharpAngle;
  }
  out.push_back({start, stroke.end, stroke.cls, cause});
  return out;
}

std::string segment_trace(const SampleSeries& series,
                          const SegmentConfig& cfg) {
  const std::vector<Stroke> strokes = segment(series, cfg);
  std::vector<std::size_t> starts;
  std::vector<BoundaryCause> causes(series.size(), BoundaryCause::StreamEdge);
  std::vector<bool> is_boundary(series.size(), false);
  for (const Stroke& s : strokes) {
    if (s.begin < series.size()) {
      is_boundary[s.begin] = true;
      causes[s.begin] = s.cause;
    }
  }
  const std::vector<Vec2> xy =
      series.empty() ? std::vector<Vec2>{}
                     : smoothed_xy(series, 0, series.size());
  std::string out = "infranotes-trace v1\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    double turn = 0.0;
    if (i > 0 && i + 1 < series.size()) {
      const Vec2 a = xy[i] - xy[i - 1];
      const Vec2 b = xy[i + 1] - xy[i];
      if (a.norm() > 1e-12 && b.norm() > 1e-12)
        turn = 180.0 - vertex_angle(xy[i - 1], xy[i], xy[i + 1]);
    }
    out += std::to_string(i) + ' ' + fmt_num(series[i].t) + ' ' +
           fmt_num(xy_speed(series[i])) + ' ' + fmt_num(z_speed(series[i])) +
           ' ' + fmt_num(turn) + ' ' + (is_boundary[i] ? '1' : '0') + ' ' +
           (is_boundary[i] ? boundary_cause_name(causes[i]) : "-") + '\n';
  }
  return out;
}

}  // namespace infranotes
