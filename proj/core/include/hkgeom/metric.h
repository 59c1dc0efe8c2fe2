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

#ifndef HKGEOM_METRIC_H_
#define HKGEOM_METRIC_H_

#include "hkgeom/model.h"

namespace hkgeom {

// (x, y) -> (x, k y). Carries H_k onto the classical half-plane.
Point squeeze(const Model& m, const Point& p);

// (x, y) -> (x, y / k).
Point unsqueeze(const Model& m, const Point& p);

// Poincare distance of the classical half-plane, evaluated through the
// semicircle (centre c, radius r) joining p and q.
double classical_distance(const Point& p, const Point& q);

// Distance of H_k, evaluated in closed form on line_through(p, q). Zero iff
// p and q are approx_eq.
double distance(const Model& m, const Point& p, const Point& q);

struct QuadratureSpec {
  int max_depth = 40;
  double tol = 1e-8;
};

// Length of the arc t in [t0, t1] of `line`, integrating the pulled-back
// length element sqrt(dx^2 + k^2 dy^2) / (k y) with adaptive Simpson.
// Throws kQuadratureFailure when max_depth is hit before tol is met.
double arc_length_oracle(const Model& m, const HLine& line, double t0,
                         double t1, const QuadratureSpec& spec = {});

}  // namespace hkgeom

#endif  // HKGEOM_METRIC_H_
