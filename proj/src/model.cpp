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

#include "model.hpp"

namespace infranotes {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyStroke: return "EmptyStroke";
    case Errc::DegenerateTriple: return "DegenerateTriple";
    case Errc::DegenerateRegion: return "DegenerateRegion";
    case Errc::NonMonotonicTime: return "NonMonotonicTime";
    case Errc::BadProbability: return "BadProbability";
    case Errc::NoGlyphPlan: return "NoGlyphPlan";
    case Errc::TooShort: return "TooShort";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::OrphanErase: return "OrphanErase";
    case Errc::CrossPageMask: return "CrossPageMask";
    case Errc::BeforePage: return "BeforePage";
    case Errc::OutOfSession: return "OutOfSession";
    case Errc::UnknownPage: return "UnknownPage";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

const char* stroke_class_name(StrokeClass c) {
  switch (c) {
    case StrokeClass::Unclassified: return "unclassified";
    case StrokeClass::OnBoard: return "onboard";
    case StrokeClass::OffBoard: return "offboard";
    case StrokeClass::Erase: return "erase";
  }
  return "unclassified";
}

const char* boundary_cause_name(BoundaryCause c) {
  switch (c) {
    case BoundaryCause::StreamEdge: return "edge";
    case BoundaryCause::SlowSpeed: return "slow";
    case BoundaryCause::ZJump: return "zjump";
    case BoundaryCause::SharpAngle: return "sharp";
  }
  return "edge";
}

BBox bbox_of(const SampleSeries& s, const Stroke& st) {
  if (st.begin >= st.end || st.end > s.size())
    throw Error(Errc::EmptyStroke, "stroke has no samples");
  BBox b;
  for (std::size_t i = st.begin; i < st.end; ++i)
    b.extend(s.samples[i].pos.x, s.samples[i].pos.y);
  return b;
}

StrokeGeom stroke_geometry(const SampleSeries& s, const Stroke& st) {
  if (st.begin >= st.end || st.end > s.size())
    throw Error(Errc::EmptyStroke, "stroke has no samples");
  StrokeGeom g;
  g.pts.reserve(st.size());
  for (std::size_t i = st.begin; i < st.end; ++i)
    g.pts.push_back(s.samples[i].pos.xy());
  g.start_t = stroke_start_t(s, st);
  g.end_t = stroke_end_t(s, st);
  return g;
}

void derive_velocities(SampleSeries& s) {
  const std::size_t n = s.size();
  if (n == 0) return;
  if (n == 1) {
    s.samples[0].vel = {};
    return;
  }
  std::vector<Vec3> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? i : i + 1;
    const double dt = s.samples[hi].t - s.samples[lo].t;
    if (dt <= 0.0) {
      v[i] = {};
    } else {
      v[i] = (s.samples[hi].pos - s.samples[lo].pos) * (1.0 / dt);
    }
  }
  for (std::size_t i = 0; i < n; ++i) s.samples[i].vel = v[i];
}

}  // namespace infranotes
