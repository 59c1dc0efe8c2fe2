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

#ifndef HKGEOM_GEODESIC_H_
#define HKGEOM_GEODESIC_H_

#include "hkgeom/model.h"

namespace hkgeom {

// The unique h-line through two distinct points.
//
// Equal abscissas give a vertical line. Otherwise the centre is
//   c = (x1^2 - x2^2 + k^2 (y1^2 - y2^2)) / (2 (x1 - x2))
// and a = sqrt((x1 - c)^2 + k^2 y1^2). Abscissas that differ by so little
// that c overflows are also routed to the vertical branch.
//
// Throws kCoincidentPoints when p1 and p2 are approx_eq componentwise.
HLine line_through(const Model& m, const Point& p1, const Point& p2);

// True iff p satisfies the defining equation of `line` within tolerance.
bool contains(const Model& m, const HLine& line, const Point& p);

// Ruler coordinate: ln((x - c + a) / (k y)) on elliptic lines, ln(k y) on
// vertical ones. Increases with x, resp. with y.
// Throws kPointNotOnLine unless contains(m, line, p).
double ruler(const Model& m, const HLine& line, const Point& p);

// ruler() without the membership check. Only meaningful for points on the
// line (up to rounding); used where membership is already established.
double ruler_unchecked(const Model& m, const HLine& line, const Point& p);

// (c + a tanh t, a / (k cosh t)) or (p, e^t / k). Throws kNonFinite.
Point ruler_inverse(const Model& m, const HLine& line, double t);

// True iff b lies strictly between a and c on the line through a and c.
// Throws kCoincidentPoints or kNotCollinear.
bool between(const Model& m, const Point& a, const Point& b, const Point& c);

// Segment on line_through(a, b) spanning the sorted ruler coordinates.
Segment segment_between(const Model& m, const Point& a, const Point& b);

}  // namespace hkgeom

#endif  // HKGEOM_GEODESIC_H_
