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

#include "hkgeom/geodesic.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "internal.h"

namespace hkgeom {

namespace {

std::string describe(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

}  // namespace

HLine line_through(const Model& m, const Point& p1, const Point& p2) {
  if (approx_eq(m, p1, p2)) {
    throw GeometryError(ErrorCode::kCoincidentPoints,
                        "coincident points " + describe(p1) + " and " +
                            describe(p2));
  }
  const double x1 = p1.x(), y1 = p1.y();
  const double x2 = p2.x(), y2 = p2.y();
  if (x1 == x2) return VerticalLine{x1};

  const double k2 = m.k() * m.k();
  const double dx = x1 - x2;
  // (x1^2 - x2^2 + k^2 (y1^2 - y2^2)) / (2 dx), with x1^2 - x2^2 factored.
  const double c = 0.5 * (x1 + x2) + k2 * (y1 - y2) * (y1 + y2) / (2.0 * dx);
  const double a = std::hypot(x1 - c, m.k() * y1);
  if (!std::isfinite(c) || !std::isfinite(a)) return VerticalLine{x1};

  const EllipticLine line(c, a);
  if (!contains(m, line, p2)) {
    throw std::logic_error("line_through: " + describe(p2) +
                           " misses the constructed line");
  }
  return line;
}

bool contains(const Model& m, const HLine& line, const Point& p) {
  if (const auto* v = std::get_if<VerticalLine>(&line)) {
    return m.approx_eq(p.x(), v->p);
  }
  const auto& e = std::get<EllipticLine>(line);
  const double dx = p.x() - e.c();
  const double ky = m.k() * p.y();
  return m.approx_eq(dx * dx + ky * ky, e.a() * e.a());
}

double ruler_unchecked(const Model& m, const HLine& line, const Point& p) {
  if (is_vertical(line)) return std::log(m.k() * p.y());
  return std::log(internal::ruler_exp(m.k(), std::get<EllipticLine>(line),
                                      p.x(), p.y()));
}

double ruler(const Model& m, const HLine& line, const Point& p) {
  if (!contains(m, line, p)) {
    throw GeometryError(ErrorCode::kPointNotOnLine,
                        "ruler: " + describe(p) + " is not on the line");
  }
  return ruler_unchecked(m, line, p);
}

Point ruler_inverse(const Model& m, const HLine& line, double t) {
  if (!std::isfinite(t)) {
    throw GeometryError(ErrorCode::kNonFinite,
                        "ruler_inverse: t must be finite");
  }
  if (const auto* v = std::get_if<VerticalLine>(&line)) {
    return Point(v->p, std::exp(t) / m.k());
  }
  const auto& e = std::get<EllipticLine>(line);
  return Point(e.c() + e.a() * std::tanh(t), e.a() / (m.k() * std::cosh(t)));
}

bool between(const Model& m, const Point& a, const Point& b, const Point& c) {
  if (approx_eq(m, a, b) || approx_eq(m, b, c) || approx_eq(m, a, c)) {
    throw GeometryError(ErrorCode::kCoincidentPoints,
                        "between: points must be distinct");
  }
  const HLine line = line_through(m, a, c);
  if (!contains(m, line, b)) {
    throw GeometryError(ErrorCode::kNotCollinear,
                        "between: " + describe(b) + " is not on line AC");
  }
  const double ta = ruler_unchecked(m, line, a);
  const double tb = ruler_unchecked(m, line, b);
  const double tc = ruler_unchecked(m, line, c);
  const double lo = std::min(ta, tc);
  const double hi = std::max(ta, tc);
  return tb > lo && tb < hi && !m.approx_eq(tb, lo) && !m.approx_eq(tb, hi);
}

Segment segment_between(const Model& m, const Point& a, const Point& b) {
  HLine line = line_through(m, a, b);
  const double ta = ruler_unchecked(m, line, a);
  const double tb = ruler_unchecked(m, line, b);
  return Segment(std::move(line), std::min(ta, tb), std::max(ta, tb));
}

}  // namespace hkgeom
