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
// Uppercase glyph shapes.  Constraints baked into the coordinates:
//  - diagonal chords stay inside (30, 60) or (120, 150) degrees so a ±10
//    degree tilt cannot leave their direction bin;
//  - every segment is one smooth primitive; only Z joins segments into a
//    single pen stroke (its corners exceed the sharp-angle threshold);
//  - Q's tail intentionally overhangs the letter box to the lower right,
//    which is what makes tight 5 mm spacing hard to group.

#include "synthgen.hpp"

#include <map>

namespace infranotes {
namespace {

Polyline arc(Vec2 center, double r, double a0_deg, double a1_deg,
             int pts_per_90 = 12) {
  const int n =
      std::max(4, static_cast<int>(std::abs(a1_deg - a0_deg) / 90.0 *
                                   pts_per_90));
  Polyline out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double a = deg_to_rad(a0_deg + (a1_deg - a0_deg) * i / n);
    out.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
  }
  return out;
}

Polyline join(std::initializer_list<Polyline> parts) {
  Polyline out;
  for (const Polyline& p : parts) {
    for (const Vec2& v : p) {
      if (out.empty() || (v - out.back()).norm() > 1e-12) out.push_back(v);
    }
  }
  return out;
}

Polyline seg(Vec2 a, Vec2 b) { return {a, b}; }

PenStroke pen(std::initializer_list<Polyline> segments) {
  return PenStroke{std::vector<Polyline>(segments)};
}

std::map<char, GlyphPlan> build_plans() {
  using P = Primitive;
  std::map<char, GlyphPlan> plans;
  auto add = [&](char letter, std::vector<PenStroke> strokes,
                 std::vector<Primitive> prims) {
    plans[letter] = GlyphPlan{letter, std::move(strokes), std::move(prims)};
  };

  add('A',
      {pen({seg({0.0, 0.0}, {0.5, 0.65})}),
       pen({seg({0.5, 0.65}, {1.0, 0.0})}),
       pen({seg({0.18, 0.26}, {0.82, 0.26})})},
      {P::DU, P::DD, P::H});
  add('B',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}),
       pen({arc({0.0, 0.75}, 0.25, 90, -90)}),
       pen({arc({0.0, 0.25}, 0.25, 90, -90)})},
      {P::V, P::DArc, P::DArc});
  add('C', {pen({arc({0.5, 0.5}, 0.45, 60, 300)})}, {P::C});
  add('D',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({arc({0.0, 0.5}, 0.5, 90, -90)})},
      {P::V, P::DArc});
  add('E',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({seg({0.0, 1.0}, {0.85, 1.0})}),
       pen({seg({0.0, 0.5}, {0.7, 0.5})}), pen({seg({0.0, 0.0}, {0.85, 0.0})})},
      {P::V, P::H, P::H, P::H});
  add('F',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({seg({0.0, 1.0}, {0.85, 1.0})}),
       pen({seg({0.0, 0.5}, {0.7, 0.5})})},
      {P::V, P::H, P::H});
  add('G',
      {pen({arc({0.5, 0.5}, 0.45, 60, 300)}),
       pen({seg({0.9, 0.45}, {0.5, 0.45})})},
      {P::C, P::H});
  add('H',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({seg({1.0, 1.0}, {1.0, 0.0})}),
       pen({seg({0.0, 0.5}, {1.0, 0.5})})},
      {P::V, P::V, P::H});
  add('I', {pen({seg({0.5, 1.0}, {0.5, 0.0})})}, {P::V});
  add('J',
      {pen({join({seg({0.55, 1.0}, {0.55, 0.35}),
                  arc({0.35, 0.35}, 0.2, 0, -180)})})},
      {P::J});
  add('K',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({seg({0.0, 0.5}, {0.7, 1.0})}),
       pen({seg({0.0, 0.5}, {0.55, 0.0})})},
      {P::V, P::DU, P::DD});
  add('L',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({seg({0.0, 0.0}, {0.8, 0.0})})},
      {P::V, P::H});
  add('M',
      {pen({seg({0.0, 0.0}, {0.0, 1.0})}), pen({seg({0.0, 1.0}, {0.5, 0.4})}),
       pen({seg({0.5, 0.4}, {1.0, 1.0})}), pen({seg({1.0, 1.0}, {1.0, 0.0})})},
      {P::V, P::DD, P::DU, P::V});
  add('N',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({seg({0.0, 1.0}, {1.0, 0.0})}),
       pen({seg({1.0, 1.0}, {1.0, 0.0})})},
      {P::V, P::DD, P::V});
  add('O', {pen({arc({0.5, 0.5}, 0.45, 90, 450)})}, {P::O});
  add('P',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({arc({0.0, 0.75}, 0.25, 90, -90)})},
      {P::V, P::DArc});
  add('Q',
      {pen({arc({0.5, 0.55}, 0.4, 90, 450)}),
       pen({seg({0.78, 0.27}, {1.2, -0.15})})},
      {P::O, P::DD});
  add('R',
      {pen({seg({0.0, 1.0}, {0.0, 0.0})}), pen({arc({0.0, 0.75}, 0.25, 90, -90)}),
       pen({seg({0.0, 0.5}, {0.55, 0.0})})},
      {P::V, P::DArc, P::DD});
  add('S',
      {pen({join({arc({0.5, 0.75}, 0.25, 60, 270),
                  arc({0.5, 0.25}, 0.25, 90, -120)})})},
      {P::S});
  add('T',
      {pen({seg({0.0, 1.0}, {1.0, 1.0})}), pen({seg({0.5, 1.0}, {0.5, 0.0})})},
      {P::H, P::V});
  add('U',
      {pen({join({seg({0.1, 1.0}, {0.1, 0.4}), arc({0.5, 0.4}, 0.4, 180, 360),
                  seg({0.9, 0.4}, {0.9, 1.0})})})},
      {P::U});
  add('V',
      {pen({seg({0.0, 0.65}, {0.5, 0.0})}), pen({seg({0.5, 0.0}, {1.0, 0.65})})},
      {P::DD, P::DU});
  add('W',
      {pen({seg({0.0, 0.4}, {0.25, 0.0})}), pen({seg({0.25, 0.0}, {0.5, 0.4})}),
       pen({seg({0.5, 0.4}, {0.75, 0.0})}), pen({seg({0.75, 0.0}, {1.0, 0.4})})},
      {P::DD, P::DU, P::DD, P::DU});
  add('X',
      {pen({seg({0.1, 0.9}, {0.9, 0.0})}), pen({seg({0.9, 0.9}, {0.1, 0.0})})},
      {P::DD, P::DU});
  add('Y',
      {pen({seg({0.1, 1.0}, {0.5, 0.5})}), pen({seg({0.9, 1.0}, {0.5, 0.5})}),
       pen({seg({0.5, 0.5}, {0.5, 0.0})})},
      {P::DD, P::DU, P::V});
  add('Z',
      {pen({seg({0.0, 1.0}, {1.0, 1.0}), seg({1.0, 1.0}, {0.0, 0.0}),
            seg({0.0, 0.0}, {1.0, 0.0})})},
      {P::H, P::DU, P::H});
  return plans;
}

}  // namespace

const GlyphPlan* glyph_plan(char letter) {
  static const std::map<char, GlyphPlan> plans = build_plans();
  auto it = plans.find(letter);
  return it == plans.end() ? nullptr : &it->second;
}

}  // namespace infranotes
