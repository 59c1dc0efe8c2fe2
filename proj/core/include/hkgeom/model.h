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

#ifndef HKGEOM_MODEL_H_
#define HKGEOM_MODEL_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace hkgeom {

enum class ErrorCode {
  kNonPositiveParameter,
  kNonFinite,
  kNotInUpperHalfPlane,
  kCoincidentPoints,
  kPointNotOnLine,
  kNotCollinear,
  kSameLine,
  kPointOnLine,
  kBaseMismatch,
  kDegenerateTriangle,
  kQuadratureFailure,
  kInvalidConfig,
};

std::string_view error_code_name(ErrorCode code);

// Every precondition violation in the library is reported with this type.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline constexpr double kDefaultEpsAbs = 1e-9;
inline constexpr double kDefaultEpsRel = 1e-12;

// One member H_k of the family: the squeeze factor k plus the tolerance
// policy every predicate in the library routes its comparisons through.
class Model {
 public:
  // Throws GeometryError(kNonFinite / kNonPositiveParameter).
  explicit Model(double k, double eps_abs = kDefaultEpsAbs,
                 double eps_rel = kDefaultEpsRel);

  double k() const noexcept { return k_; }
  double eps_abs() const noexcept { return eps_abs_; }
  double eps_rel() const noexcept { return eps_rel_; }

  // |u - v| <= eps_abs + eps_rel * max(|u|, |v|).
  bool approx_eq(double u, double v) const noexcept;

  // Same as approx_eq, but the relative term also scales with `magnitude`,
  // the size of the quantities u and v were derived from.
  bool approx_eq(double u, double v, double magnitude) const noexcept;

 private:
  double k_;
  double eps_abs_;
  double eps_rel_;
};

Model make_model(double k, double eps_abs = kDefaultEpsAbs,
                 double eps_rel = kDefaultEpsRel);

inline bool approx_eq(const Model& m, double u, double v) noexcept {
  return m.approx_eq(u, v);
}

// A point of the open upper half-plane. y > 0 holds exactly.
class Point {
 public:
  // Throws GeometryError(kNonFinite / kNotInUpperHalfPlane).
  Point(double x, double y);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  double x_;
  double y_;
};

Point make_point(double x, double y);

// Componentwise approx_eq.
bool approx_eq(const Model& m, const Point& p, const Point& q) noexcept;

// The h-line {(p, y) : y > 0}.
struct VerticalLine {
  double p;

  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

// The h-line {(x, y) : (x - c)^2 + k^2 y^2 = a^2, y > 0} of the owning model.
// The other semi-axis, a / k, is never stored.
class EllipticLine {
 public:
  // Throws GeometryError unless c is finite and a is finite and positive.
  EllipticLine(double c, double a);

  double c() const noexcept { return c_; }
  double a() const noexcept { return a_; }

  friend bool operator==(const EllipticLine&, const EllipticLine&) = default;

 private:
  double c_;
  double a_;
};

using HLine = std::variant<VerticalLine, EllipticLine>;

inline bool is_vertical(const HLine& line) noexcept {
  return std::holds_alternative<VerticalLine>(line);
}

// Same variant and approx_eq parameters.
bool same_line(const Model& m, const HLine& l1, const HLine& l2) noexcept;

struct AxisPoint {
  double x;

  friend bool operator==(const AxisPoint&, const AxisPoint&) = default;
};

// The shared ideal point of all vertical lines.
struct AtInfinity {
  friend bool operator==(const AtInfinity&, const AtInfinity&) = default;
};

using IdealEndpoint = std::variant<AxisPoint, AtInfinity>;

// The part of `line` with ruler coordinate in [t0, t1].
class Segment {
 public:
  // Throws GeometryError unless t0 <= t1 and both are finite.
  Segment(HLine line, double t0, double t1);

  const HLine& line() const noexcept { return line_; }
  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t1_; }

 private:
  HLine line_;
  double t0_;
  double t1_;
};

}  // namespace hkgeom

#endif  // HKGEOM_MODEL_H_
