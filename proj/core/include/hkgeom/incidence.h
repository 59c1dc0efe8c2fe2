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

#ifndef HKGEOM_INCIDENCE_H_
#define HKGEOM_INCIDENCE_H_

#include <optional>
#include <utility>

#include "hkgeom/model.h"

namespace hkgeom {

// Half-plane labels. Side1 is {x > p} for a vertical line and the outside
// {(x - c)^2 + k^2 y^2 > a^2} for an elliptic one.
enum class SideLabel { kOnLine, kSide1, kSide2 };

// The meeting point of two distinct h-lines, if they meet in the half-plane.
// Lines that only touch on the x-axis do not meet.
// Throws kSameLine.
std::optional<Point> intersect(const Model& m, const HLine& l1,
                               const HLine& l2);

// (c - a, c + a) for elliptic lines, (p, infinity) for vertical ones.
std::pair<IdealEndpoint, IdealEndpoint> ideal_endpoints(const Model& m,
                                                        const HLine& line);

// True iff the lines share an ideal endpoint. Throws kSameLine.
bool are_parallel(const Model& m, const HLine& l1, const HLine& l2);

// The two h-lines through p parallel to `line`. The first shares the second
// ideal endpoint of `line`, the second shares the first.
// Throws kPointOnLine.
std::pair<HLine, HLine> parallels_through(const Model& m, const HLine& line,
                                          const Point& p);

SideLabel side_of(const Model& m, const HLine& line, const Point& p);

// True iff `line` meets the segment, endpoints included. Throws kSameLine.
bool segment_crosses(const Model& m, const Segment& segment,
                     const HLine& line);

}  // namespace hkgeom

#endif  // HKGEOM_INCIDENCE_H_
