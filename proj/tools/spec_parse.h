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

#ifndef HKGEOM_TOOLS_SPEC_PARSE_H_
#define HKGEOM_TOOLS_SPEC_PARSE_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hkgeom/model.h"

namespace hkgeom::cli {

// Malformed command-line or input-file text. Maps to exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Decimal or scientific notation, the whole string.
double parse_real(std::string_view text);

// "1,2,0.5"
std::vector<double> parse_real_list(std::string_view text);

// "x,y". Point validation errors surface as GeometryError.
Point parse_point(std::string_view text);

// "v:p" or "e:c,a".
HLine parse_line(std::string_view text);

struct PointObject {
  Point p;
};
struct SegmentObject {
  Point a;
  Point b;
};
struct TriangleObject {
  Point a;
  Point b;
  Point c;
};

// Something the renderer can draw.
using SceneObject =
    std::variant<HLine, PointObject, SegmentObject, TriangleObject>;

// "v:p", "e:c,a", "p:x,y", "s:x1,y1;x2,y2" or "t:x1,y1;x2,y2;x3,y3".
SceneObject parse_object(std::string_view text);

// One object per line; '#' starts a comment and blank lines are skipped.
std::vector<SceneObject> parse_object_file(std::string_view contents);

}  // namespace hkgeom::cli

#endif  // HKGEOM_TOOLS_SPEC_PARSE_H_
