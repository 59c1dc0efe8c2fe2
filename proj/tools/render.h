// Copyright 2026 The hkgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HKGEOM_TOOLS_RENDER_H_
#define HKGEOM_TOOLS_RENDER_H_

#include <span>
#include <string>
#include <vector>

#include "hkgeom/model.h"
#include "spec_parse.h"

namespace hkgeom::cli {

struct RenderSpec {
  double x_min = -5.0;
  double x_max = 5.0;
  double y_max = 5.0;
  int width_px = 800;
  int height_px = 400;
  int stroke_samples = 256;

  // Throws ParseError.
  void validate() const;
};

struct Vec2px {
  double x;
  double y;
};

// Maps world coordinates (y = 0 at the bottom edge) to SVG pixels.
class Viewport {
 public:
  explicit Viewport(const RenderSpec& spec) : spec_(spec) {}

  Vec2px to_px(double x, double y) const;
  double to_world_y(double py) const;

 private:
  RenderSpec spec_;
};

// Polyline vertices of the visible part of `line`, sampled uniformly in the
// ruler coordinate. The apex of an elliptic line is always included.
std::vector<Vec2px> sample_line(const Model& m, const HLine& line,
                                const RenderSpec& spec);

// Vertices of a segment, sampled uniformly in the ruler coordinate.
std::vector<Vec2px> sample_segment(const Model& m, const Segment& segment,
                                   const RenderSpec& spec);

// A standalone SVG 1.1 document with the x-axis as boundary and every object
// drawn once per k, one colour per k.
std::string render_svg(std::span<const double> k_values,
                       std::span<const SceneObject> objects,
                       const RenderSpec& spec, double eps_abs = kDefaultEpsAbs,
                       double eps_rel = kDefaultEpsRel);

}  // namespace hkgeom::cli

#endif  // HKGEOM_TOOLS_RENDER_H_
