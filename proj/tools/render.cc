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

#include "render.h"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "hkgeom/geodesic.h"

namespace hkgeom::cli {

namespace {

constexpr std::array<const char*, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
};

// Height below which a curve is indistinguishable from the axis.
double floor_height(const RenderSpec& spec) {
  return 0.25 * spec.y_max / spec.height_px;
}

std::vector<Vec2px> sample_range(const Model& m, const HLine& line, double t0,
                                 double t1, int samples, bool with_apex,
                                 const Viewport& view) {
  std::vector<double> ts;
  ts.reserve(samples + 1);
  for (int i = 0; i < samples; ++i) {
    ts.push_back(t0 + (t1 - t0) * i / (samples - 1));
  }
  if (with_apex && t0 < 0.0 && t1 > 0.0) {
    ts.insert(std::upper_bound(ts.begin(), ts.end(), 0.0), 0.0);
  }
  std::vector<Vec2px> out;
  out.reserve(ts.size());
  for (double t : ts) {
    const Point p = ruler_inverse(m, line, t);
    out.push_back(view.to_px(p.x(), p.y()));
  }
  return out;
}

std::string polyline(const std::vector<Vec2px>& pts, const char* colour) {
  std::string out = "<polyline fill=\"none\" stroke=\"";
  out += colour;
  out += "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out += ' ';
    out += fmt::format("{:.3f},{:.3f}", pts[i].x, pts[i].y);
  }
  out += "\"/>\n";
  return out;
}

}  // namespace

void RenderSpec::validate() const {
  if (!(x_min < x_max)) throw ParseError("viewport requires xmin < xmax");
  if (!(y_max > 0.0)) throw ParseError("viewport requires ymax > 0");
  if (width_px < 1 || height_px < 1) {
    throw ParseError("width and height must be positive");
  }
  if (stroke_samples < 2) throw ParseError("stroke-samples must be >= 2");
}

Vec2px Viewport::to_px(double x, double y) const {
  return {(x - spec_.x_min) / (spec_.x_max - spec_.x_min) * spec_.width_px,
          spec_.height_px * (1.0 - y / spec_.y_max)};
}

double Viewport::to_world_y(double py) const {
  return spec_.y_max * (1.0 - py / spec_.height_px);
}

std::vector<Vec2px> sample_line(const Model& m, const HLine& line,
                                const RenderSpec& spec) {
  const Viewport view(spec);
  const double y_floor = floor_height(spec);
  if (const auto* v = std::get_if<VerticalLine>(&line)) {
    if (v->p < spec.x_min || v->p > spec.x_max) return {};
    return sample_range(m, line, std::log(m.k() * y_floor),
                        std::log(m.k() * spec.y_max), spec.stroke_samples,
                        false, view);
  }
  const auto& e = std::get<EllipticLine>(line);
  const double lo = std::max(spec.x_min, e.c() - e.a());
  const double hi = std::min(spec.x_max, e.c() + e.a());
  if (!(lo < hi)) return {};
  // Beyond |t| = t_cap the curve sits below y_floor.
  const double t_cap = std::acosh(std::max(1.0, e.a() / (m.k() * y_floor)));
  const auto t_at = [&](double x) {
    return std::clamp(std::atanh(std::clamp((x - e.c()) / e.a(), -1.0, 1.0)),
                      -t_cap, t_cap);
  };
  const double t0 = t_at(lo);
  const double t1 = t_at(hi);
  if (!(t0 < t1)) return {};
  return sample_range(m, line, t0, t1, spec.stroke_samples, true, view);
}

std::vector<Vec2px> sample_segment(const Model& m, const Segment& segment,
                                   const RenderSpec& spec) {
  return sample_range(m, segment.line(), segment.t0(), segment.t1(),
                      spec.stroke_samples, false, Viewport(spec));
}

std::string render_svg(std::span<const double> k_values,
                       std::span<const SceneObject> objects,
                       const RenderSpec& spec, double eps_abs,
                       double eps_rel) {
  spec.validate();
  const Viewport view(spec);
  std::string svg = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
      "<line x1=\"0\" y1=\"{1}\" x2=\"{0}\" y2=\"{1}\" stroke=\"black\" "
      "stroke-width=\"2\"/>\n",
      spec.width_px, spec.height_px);

  for (std::size_t i = 0; i < k_values.size(); ++i) {
    const Model m(k_values[i], eps_abs, eps_rel);
    const char* colour = kPalette[i % kPalette.size()];
    svg += fmt::format("<g id=\"k{}\" data-k=\"{}\">\n", i, k_values[i]);
    for (const auto& object : objects) {
      if (const auto* line = std::get_if<HLine>(&object)) {
        const auto pts = sample_line(m, *line, spec);
        if (!pts.empty()) svg += polyline(pts, colour);
      } else if (const auto* pt = std::get_if<PointObject>(&object)) {
        const Vec2px px = view.to_px(pt->p.x(), pt->p.y());
        svg += fmt::format(
            "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"{}\"/>\n", px.x,
            px.y, colour);
      } else if (const auto* seg = std::get_if<SegmentObject>(&object)) {
        svg += polyline(
            sample_segment(m, segment_between(m, seg->a, seg->b), spec),
            colour);
      } else {
        const auto& tri = std::get<TriangleObject>(object);
        for (const auto& [u, v] : {std::pair{tri.a, tri.b},
                                   std::pair{tri.b, tri.c},
                                   std::pair{tri.c, tri.a}}) {
          svg += polyline(sample_segment(m, segment_between(m, u, v), spec),
                          colour);
        }
      }
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace hkgeom::cli
