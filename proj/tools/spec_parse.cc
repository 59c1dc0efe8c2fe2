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

#include "spec_parse.h"

#include <charconv>
#include <cmath>
#include <sstream>

namespace hkgeom::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<Point> parse_points(std::string_view text, std::size_t count,
                                std::string_view what) {
  const auto parts = split(text, ';');
  if (parts.size() != count) {
    std::ostringstream os;
    os << what << " needs " << count << " points separated by ';', got '"
       << text << "'";
    throw ParseError(os.str());
  }
  std::vector<Point> points;
  for (auto part : parts) points.push_back(parse_point(part));
  return points;
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end ||
      !std::isfinite(value)) {
    throw ParseError("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> values;
  for (auto part : split(text, ',')) values.push_back(parse_real(part));
  return values;
}

Point parse_point(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw ParseError("expected a point 'x,y', got '" + std::string(text) +
                     "'");
  }
  return Point(parse_real(parts[0]), parse_real(parts[1]));
}

HLine parse_line(std::string_view text) {
  text = trim(text);
  if (text.starts_with("v:")) return VerticalLine{parse_real(text.substr(2))};
  if (text.starts_with("e:")) {
    const auto parts = split(text.substr(2), ',');
    if (parts.size() == 2) {
      return EllipticLine(parse_real(parts[0]), parse_real(parts[1]));
    }
  }
  throw ParseError("expected a line 'v:p' or 'e:c,a', got '" +
                   std::string(text) + "'");
}

SceneObject parse_object(std::string_view text) {
  text = trim(text);
  if (text.starts_with("v:") || text.starts_with("e:")) return parse_line(text);
  if (text.starts_with("p:")) return PointObject{parse_point(text.substr(2))};
  if (text.starts_with("s:")) {
    const auto pts = parse_points(text.substr(2), 2, "segment");
    return SegmentObject{pts[0], pts[1]};
  }
  if (text.starts_with("t:")) {
    const auto pts = parse_points(text.substr(2), 3, "triangle");
    return TriangleObject{pts[0], pts[1], pts[2]};
  }
  throw ParseError("unknown object '" + std::string(text) + "'");
}

std::vector<SceneObject> parse_object_file(std::string_view contents) {
  std::vector<SceneObject> objects;
  for (auto line : split(contents, '\n')) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    objects.push_back(parse_object(line));
  }
  return objects;
}

}  // namespace hkgeom::cli
