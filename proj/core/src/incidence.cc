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

#include "hkgeom/incidence.h"

#include <algorithm>
#include <cmath>

#include "hkgeom/geodesic.h"
#include "internal.h"

namespace hkgeom {

namespace {

using internal::endpoint_scale;

void require_distinct(const Model& m, const HLine& l1, const HLine& l2,
                      const char* op) {
  if (same_line(m, l1, l2)) {
    throw GeometryError(ErrorCode::kSameLine,
                        std::string(op) + ": the lines coincide");
  }
}

// Strictly inside (lo, hi), with endpoints compared under the tolerance.
bool strictly_inside(const Model& m, double x, double lo, double hi,
                     double scale) {
  return x > lo && x < hi && !m.approx_eq(x, lo, scale) &&
         !m.approx_eq(x, hi, scale);
}

std::optional<Point> meet(const Model& m, const VerticalLine& v,
                          const EllipticLine& e) {
  const double scale = std::max(endpoint_scale(e), std::abs(v.p));
  if (!strictly_inside(m, v.p, e.c() - e.a(), e.c() + e.a(), scale)) {
    return std::nullopt;
  }
  const double dx = v.p - e.c();
  const double ky2 = (e.a() - dx) * (e.a() + dx);
  if (!(ky2 > 0.0)) return std::nullopt;
  return Point(v.p, std::sqrt(ky2) / m.k());
}

std::optional<Point> meet(const Model& m, const EllipticLine& e1,
                          const EllipticLine& e2) {
  const double scale = std::max(endpoint_scale(e1), endpoint_scale(e2));
  if (m.approx_eq(e1.c(), e2.c(), scale)) return std::nullopt;
  // Two such curves cross iff their endpoint intervals interleave.
  const double lo1 = e1.c() - e1.a(), hi1 = e1.c() + e1.a();
  const double lo2 = e2.c() - e2.a(), hi2 = e2.c() + e2.a();
  const bool lo2_in = strictly_inside(m, lo2, lo1, hi1, scale);
  const bool hi2_in = strictly_inside(m, hi2, lo1, hi1, scale);
  if (lo2_in == hi2_in) return std::nullopt;
  const double outer = lo2_in ? hi2 : lo2;
  if (m.approx_eq(outer, lo1, scale) || m.approx_eq(outer, hi1, scale)) {
    return std::nullopt;
  }

  // x* = (c1^2 - c2^2 - a1^2 + a2^2) / (2 (c1 - c2))
  const double x = 0.5 * (e1.c() + e2.c()) +
                   (e2.a() - e1.a()) * (e2.a() + e1.a()) /
                       (2.0 * (e1.c() - e2.c()));
  // Height from the smaller curve; its relative error is the smaller one.
  const EllipticLine& s = e1.a() <= e2.a() ? e1 : e2;
  const double dx = x - s.c();
  const double ky2 = (s.a() - dx) * (s.a() + dx);
  if (!(ky2 > 0.0)) return std::nullopt;
  return Point(x, std::sqrt(ky2) / m.k());
}

bool endpoints_match(const Model& m, const IdealEndpoint& u,
                     const IdealEndpoint& v, double scale) {
  const auto* ua = std::get_if<AxisPoint>(&u);
  const auto* va = std::get_if<AxisPoint>(&v);
  if (ua == nullptr || va == nullptr) return ua == va;
  return m.approx_eq(ua->x, va->x, scale);
}

double line_scale(const HLine& line) {
  if (const auto* v = std::get_if<VerticalLine>(&line)) return std::abs(v->p);
  return endpoint_scale(std::get<EllipticLine>(line));
}

HLine parallel_sharing(const Model& m, const IdealEndpoint& endpoint,
                       const Point& p) {
  const auto* axis = std::get_if<AxisPoint>(&endpoint);
  if (axis == nullptr) return VerticalLine{p.x()};
  const double e = axis->x;
  if (m.approx_eq(p.x(), e)) return VerticalLine{e};
  // The ellipse through p with c' - a' = e (p right of e) or c' + a' = e.
  const double d = p.x() - e;
  const double ky = m.k() * p.y();
  const double a = (d * d + ky * ky) / (2.0 * std::abs(d));
  return EllipticLine(e + std::copysign(a, d), a);
}

}  // namespace

std::optional<Point> intersect(const Model& m, const HLine& l1,
                               const HLine& l2) {
  require_distinct(m, l1, l2, "intersect");
  const auto* v1 = std::get_if<VerticalLine>(&l1);
  const auto* v2 = std::get_if<VerticalLine>(&l2);
  if (v1 != nullptr && v2 != nullptr) return std::nullopt;
  if (v1 != nullptr) return meet(m, *v1, std::get<EllipticLine>(l2));
  if (v2 != nullptr) return meet(m, *v2, std::get<EllipticLine>(l1));
  return meet(m, std::get<EllipticLine>(l1), std::get<EllipticLine>(l2));
}

std::pair<IdealEndpoint, IdealEndpoint> ideal_endpoints(const Model& /*m*/,
                                                        const HLine& line) {
  if (const auto* v = std::get_if<VerticalLine>(&line)) {
    return {AxisPoint{v->p}, AtInfinity{}};
  }
  const auto& e = std::get<EllipticLine>(line);
  return {AxisPoint{e.c() - e.a()}, AxisPoint{e.c() + e.a()}};
}

bool are_parallel(const Model& m, const HLine& l1, const HLine& l2) {
  require_distinct(m, l1, l2, "are_parallel");
  const auto [u1, u2] = ideal_endpoints(m, l1);
  const auto [v1, v2] = ideal_endpoints(m, l2);
  const double scale = std::max(line_scale(l1), line_scale(l2));
  return endpoints_match(m, u1, v1, scale) ||
         endpoints_match(m, u1, v2, scale) ||
         endpoints_match(m, u2, v1, scale) || endpoints_match(m, u2, v2, scale);
}

std::pair<HLine, HLine> parallels_through(const Model& m, const HLine& line,
                                          const Point& p) {
  if (contains(m, line, p)) {
    throw GeometryError(ErrorCode::kPointOnLine,
                        "parallels_through: the point lies on the line");
  }
  const auto [first, second] = ideal_endpoints(m, line);
  return {parallel_sharing(m, second, p), parallel_sharing(m, first, p)};
}

SideLabel side_of(const Model& m, const HLine& line, const Point& p) {
  if (contains(m, line, p)) return SideLabel::kOnLine;
  if (const auto* v = std::get_if<VerticalLine>(&line)) {
    return p.x() > v->p ? SideLabel::kSide1 : SideLabel::kSide2;
  }
  const auto& e = std::get<EllipticLine>(line);
  const double dx = p.x() - e.c();
  const double ky = m.k() * p.y();
  return dx * dx + ky * ky > e.a() * e.a() ? SideLabel::kSide1
                                           : SideLabel::kSide2;
}

bool segment_crosses(const Model& m, const Segment& segment,
                     const HLine& line) {
  require_distinct(m, segment.line(), line, "segment_crosses");
  const auto x = intersect(m, segment.line(), line);
  if (!x) return false;
  const double t = ruler_unchecked(m, segment.line(), *x);
  return (t >= segment.t0() || m.approx_eq(t, segment.t0())) &&
         (t <= segment.t1() || m.approx_eq(t, segment.t1()));
}

}  // namespace hkgeom
