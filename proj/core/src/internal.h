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

#ifndef HKGEOM_SRC_INTERNAL_H_
#define HKGEOM_SRC_INTERNAL_H_

#include <cmath>

#include "hkgeom/model.h"

namespace hkgeom::internal {

// e^t for the ruler coordinate t of a point on an elliptic line.
//
// Right of the centre this is (x - c + a) / (k y). Left of it, x - c + a
// cancels, so the equivalent (on the line) k y / (c + a - x) is used.
inline double ruler_exp(double k, const EllipticLine& line, double x,
                        double y) {
  const double dx = x - line.c();
  if (dx > 0.0) return (dx + line.a()) / (k * y);
  return (k * y) / (line.a() - dx);
}

// Magnitude of the numbers an elliptic line's endpoints are computed from.
inline double endpoint_scale(const EllipticLine& line) {
  return std::abs(line.c()) + line.a();
}

}  // namespace hkgeom::internal

#endif  // HKGEOM_SRC_INTERNAL_H_
