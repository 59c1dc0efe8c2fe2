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

#ifndef HKGEOM_ANGLE_H_
#define HKGEOM_ANGLE_H_

#include <array>

#include "hkgeom/model.h"

namespace hkgeom {

struct Vec2 {
  double x;
  double y;
};

// Euclidean tangent ray of an h-line. dir has unit length.
struct TangentRay {
  Point base;
  Vec2 dir;
};

enum class AngleMeasure {
  // Angle between the Euclidean tangent rays.
  kEuclidean,
  // Angle after mapping both directions through diag(1, k), the differential
  // of the squeeze map. This is the angle of the classical model.
  kPullback,
};

// Throws kPointNotOnLine.
TangentRay tangent_ray(const Model& m, const HLine& line, const Point& p,
                       bool toward_increasing_t);

// Both throw kBaseMismatch unless the bases are approx_eq. Result in [0, pi].
double euclidean_angle(const Model& m, const TangentRay& r1,
                       const TangentRay& r2);
double pullback_angle(const Model& m, const TangentRay& r1,
                      const TangentRay& r2);

double angle_between(const Model& m, const TangentRay& r1, const TangentRay& r2,
                     AngleMeasure measure);

// Interior angles at a, b and c. Throws kDegenerateTriangle for coincident
// or collinear vertices.
std::array<double, 3> triangle_angles(const Model& m, const Point& a,
                                      const Point& b, const Point& c,
                                      AngleMeasure measure);

}  // namespace hkgeom

#endif  // HKGEOM_ANGLE_H_
