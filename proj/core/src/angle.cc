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

#include "hkgeom/angle.h"

#include <cmath>

#include "hkgeom/geodesic.h"

namespace hkgeom {

namespace {

double angle_of(Vec2 u, Vec2 v) {
  const double cross = u.x * v.y - u.y * v.x;
  const double dot = u.x * v.x + u.y * v.y;
  return std::atan2(std::abs(cross), dot);
}

void require_common_base(const Model& m, const TangentRay& r1,
                         const TangentRay& r2) {
  if (!approx_eq(m, r1.base, r2.base)) {
    throw GeometryError(ErrorCode::kBaseMismatch,
                        "angle: rays do not share a base point");
  }
}

TangentRay ray_toward(const Model& m, const Point& from, const Point& to) {
  const HLine line = line_through(m, from, to);
  const bool increasing =
      ruler_unchecked(m, line, to) > ruler_unchecked(m, line, from);
  return tangent_ray(m, line, from, increasing);
}

}  // namespace

TangentRay tangent_ray(const Model& m, const HLine& line, const Point& p,
                       bool toward_increasing_t) {
  if (!contains(m, line, p)) {
    throw GeometryError(ErrorCode::kPointNotOnLine,
                        "tangent_ray: the point is not on the line");
  }
  const double sign = toward_increasing_t ? 1.0 : -1.0;
  if (is_vertical(line)) return {p, {0.0, sign}};
  // Orthogonal to the gradient (2 (x - c), 2 k^2 y); x grows with t.
  const auto& e = std::get<EllipticLine>(line);
  const double k = m.k();
  const double dx = k * k * p.y();
  const double dy = e.c() - p.x();
  const double norm = std::hypot(dx, dy);
  return {p, {sign * dx / norm, sign * dy / norm}};
}

double euclidean_angle(const Model& m, const TangentRay& r1,
                       const TangentRay& r2) {
  require_common_base(m, r1, r2);
  return angle_of(r1.dir, r2.dir);
}

double pullback_angle(const Model& m, const TangentRay& r1,
                      const TangentRay& r2) {
  require_common_base(m, r1, r2);
  const double k = m.k();
  return angle_of({r1.dir.x, k * r1.dir.y}, {r2.dir.x, k * r2.dir.y});
}

double angle_between(const Model& m, const TangentRay& r1, const TangentRay& r2,
                     AngleMeasure measure) {
  return measure == AngleMeasure::kEuclidean ? euclidean_angle(m, r1, r2)
                                             : pullback_angle(m, r1, r2);
}

std::array<double, 3> triangle_angles(const Model& m, const Point& a,
                                      const Point& b, const Point& c,
                                      AngleMeasure measure) {
  if (approx_eq(m, a, b) || approx_eq(m, b, c) || approx_eq(m, a, c)) {
    throw GeometryError(ErrorCode::kDegenerateTriangle,
                        "triangle_angles: coincident vertices");
  }
  if (contains(m, line_through(m, a, b), c)) {
    throw GeometryError(ErrorCode::kDegenerateTriangle,
                        "triangle_angles: collinear vertices");
  }
  const auto at = [&](const Point& v, const Point& u, const Point& w) {
    return angle_between(m, ray_toward(m, v, u), ray_toward(m, v, w), measure);
  };
  return {at(a, b, c), at(b, c, a), at(c, a, b)};
}

}  // namespace hkgeom
