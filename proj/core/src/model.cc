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

#include "hkgeom/model.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hkgeom {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveParameter:
      return "NonPositiveParameter";
    case ErrorCode::kNonFinite:
      return "NonFinite";
    case ErrorCode::kNotInUpperHalfPlane:
      return "NotInUpperHalfPlane";
    case ErrorCode::kCoincidentPoints:
      return "CoincidentPoints";
    case ErrorCode::kPointNotOnLine:
      return "PointNotOnLine";
    case ErrorCode::kNotCollinear:
      return "NotCollinear";
    case ErrorCode::kSameLine:
      return "SameLine";
    case ErrorCode::kPointOnLine:
      return "PointOnLine";
    case ErrorCode::kBaseMismatch:
      return "BaseMismatch";
    case ErrorCode::kDegenerateTriangle:
      return "DegenerateTriangle";
    case ErrorCode::kQuadratureFailure:
      return "QuadratureFailure";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
  }
  return "Unknown";
}

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << name << " must be finite, got " << v;
    throw GeometryError(ErrorCode::kNonFinite, os.str());
  }
}

void require_positive(double v, const char* name) {
  require_finite(v, name);
  if (v <= 0.0) {
    std::ostringstream os;
    os << name << " must be positive, got " << v;
    throw GeometryError(ErrorCode::kNonPositiveParameter, os.str());
  }
}

}  // namespace

Model::Model(double k, double eps_abs, double eps_rel)
    : k_(k), eps_abs_(eps_abs), eps_rel_(eps_rel) {
  require_positive(k, "k");
  require_positive(eps_abs, "eps_abs");
  require_positive(eps_rel, "eps_rel");
}

bool Model::approx_eq(double u, double v) const noexcept {
  return std::abs(u - v) <=
         eps_abs_ + eps_rel_ * std::max(std::abs(u), std::abs(v));
}

bool Model::approx_eq(double u, double v, double magnitude) const noexcept {
  const double scale =
      std::max({std::abs(u), std::abs(v), std::abs(magnitude)});
  return std::abs(u - v) <= eps_abs_ + eps_rel_ * scale;
}

Model make_model(double k, double eps_abs, double eps_rel) {
  return Model(k, eps_abs, eps_rel);
}

Point::Point(double x, double y) : x_(x), y_(y) {
  require_finite(x, "x");
  require_finite(y, "y");
  if (y <= 0.0) {
    std::ostringstream os;
    os << "point (" << x << ", " << y << ") is not in the upper half-plane";
    throw GeometryError(ErrorCode::kNotInUpperHalfPlane, os.str());
  }
}

Point make_point(double x, double y) { return Point(x, y); }

bool approx_eq(const Model& m, const Point& p, const Point& q) noexcept {
  return m.approx_eq(p.x(), q.x()) && m.approx_eq(p.y(), q.y());
}

EllipticLine::EllipticLine(double c, double a) : c_(c), a_(a) {
  require_finite(c, "c");
  require_positive(a, "a");
}

bool same_line(const Model& m, const HLine& l1, const HLine& l2) noexcept {
  if (const auto* v1 = std::get_if<VerticalLine>(&l1)) {
    const auto* v2 = std::get_if<VerticalLine>(&l2);
    return v2 != nullptr && m.approx_eq(v1->p, v2->p);
  }
  const auto& e1 = std::get<EllipticLine>(l1);
  const auto* e2 = std::get_if<EllipticLine>(&l2);
  return e2 != nullptr && m.approx_eq(e1.c(), e2->c(), e1.a()) &&
         m.approx_eq(e1.a(), e2->a());
}

Segment::Segment(HLine line, double t0, double t1)
    : line_(std::move(line)), t0_(t0), t1_(t1) {
  require_finite(t0, "t0");
  require_finite(t1, "t1");
  if (t0 > t1) {
    throw GeometryError(ErrorCode::kInvalidConfig,
                        "segment requires t0 <= t1");
  }
}

}  // namespace hkgeom
