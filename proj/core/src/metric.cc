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

#include "hkgeom/metric.h"

#include <cmath>

#include "hkgeom/geodesic.h"
#include "internal.h"

namespace hkgeom {

Point squeeze(const Model& m, const Point& p) {
  return Point(p.x(), m.k() * p.y());
}

Point unsqueeze(const Model& m, const Point& p) {
  return Point(p.x(), p.y() / m.k());
}

double classical_distance(const Point& p, const Point& q) {
  const double x1 = p.x(), y1 = p.y();
  const double x2 = q.x(), y2 = q.y();
  if (x1 != x2) {
    // Semicircle (x - c)^2 + y^2 = r^2 through both points.
    const double c = 0.5 * (x1 + x2) + (y1 - y2) * (y1 + y2) / (2.0 * (x1 - x2));
    const double r = std::hypot(x1 - c, y1);
    if (std::isfinite(c) && std::isfinite(r)) {
      const EllipticLine circle(c, r);
      return std::abs(std::log(internal::ruler_exp(1.0, circle, x1, y1) /
                               internal::ruler_exp(1.0, circle, x2, y2)));
    }
  }
  return std::abs(std::log(y2 / y1));
}

double distance(const Model& m, const Point& p, const Point& q) {
  if (approx_eq(m, p, q)) return 0.0;
  const HLine line = line_through(m, p, q);
  if (is_vertical(line)) return std::abs(std::log(q.y() / p.y()));
  const auto& e = std::get<EllipticLine>(line);
  const double u1 = internal::ruler_exp(m.k(), e, p.x(), p.y());
  const double u2 = internal::ruler_exp(m.k(), e, q.x(), q.y());
  return std::abs(std::log(u1 / u2));
}

namespace {

class ArcLength {
 public:
  ArcLength(const Model& m, const HLine& line) : m_(m), line_(line) {}

  // |d/dt (x, k y)| / (k y) at ruler coordinate t.
  double speed(double t) const {
    const Point p = ruler_inverse(m_, line_, t);
    double dx = 0.0;
    double dy = 0.0;
    if (is_vertical(line_)) {
      dy = std::exp(t) / m_.k();
    } else {
      const double a = std::get<EllipticLine>(line_).a();
      const double ch = std::cosh(t);
      dx = a / (ch * ch);
      dy = -a * std::tanh(t) / (m_.k() * ch);
    }
    const double ky = m_.k() * p.y();
    return std::hypot(dx, m_.k() * dy) / ky;
  }

  double integrate(double t0, double t1, const QuadratureSpec& spec) const {
    const double f0 = speed(t0);
    const double f1 = speed(t1);
    const double fm = speed(0.5 * (t0 + t1));
    return adapt(t0, t1, f0, fm, f1, simpson(t0, t1, f0, fm, f1), spec.tol,
                 spec.max_depth);
  }

 private:
  static double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double adapt(double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) const {
    const double m = 0.5 * (a + b);
    const double flm = speed(0.5 * (a + m));
    const double frm = speed(0.5 * (m + b));
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 1) {
      throw GeometryError(ErrorCode::kQuadratureFailure,
                          "arc_length_oracle: max_depth exhausted");
    }
    return adapt(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }

  const Model& m_;
  const HLine& line_;
};

}  // namespace

double arc_length_oracle(const Model& m, const HLine& line, double t0,
                         double t1, const QuadratureSpec& spec) {
  if (!std::isfinite(t0) || !std::isfinite(t1)) {
    throw GeometryError(ErrorCode::kNonFinite,
                        "arc_length_oracle: bounds must be finite");
  }
  if (t0 > t1) {
    throw GeometryError(ErrorCode::kInvalidConfig,
                        "arc_length_oracle: requires t0 <= t1");
  }
  if (spec.max_depth < 1 || !(spec.tol > 0.0)) {
    throw GeometryError(ErrorCode::kInvalidConfig,
                        "arc_length_oracle: invalid quadrature spec");
  }
  if (t0 == t1) return 0.0;
  return ArcLength(m, line).integrate(t0, t1, spec);
}

}  // namespace hkgeom
