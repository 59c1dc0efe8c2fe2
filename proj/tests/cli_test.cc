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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "cli.h"
#include "hkgeom/hkgeom.h"
#include "render.h"
#include "spec_parse.h"

namespace hkgeom::cli {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(SpecParseTest, Reals) {
  EXPECT_EQ(parse_real("1.5"), 1.5);
  EXPECT_EQ(parse_real("-2e-3"), -2e-3);
  EXPECT_EQ(parse_real("+4"), 4.0);
  EXPECT_THROW(parse_real("abc"), ParseError);
  EXPECT_THROW(parse_real("1.5x"), ParseError);
  EXPECT_THROW(parse_real(""), ParseError);
  EXPECT_EQ(parse_real_list("0.5,1,2"), (std::vector<double>{0.5, 1, 2}));
  EXPECT_THROW(parse_real_list("0.5,,2"), ParseError);
}

TEST(SpecParseTest, LinesAndPoints) {
  const HLine v = parse_line("v:-3");
  EXPECT_EQ(std::get<VerticalLine>(v).p, -3.0);
  const HLine e = parse_line("e:1.5,2.5");
  EXPECT_EQ(std::get<EllipticLine>(e), EllipticLine(1.5, 2.5));
  EXPECT_THROW(parse_line("e:1.5"), ParseError);
  EXPECT_THROW(parse_line("e:1.5,-2"), GeometryError);
  EXPECT_THROW(parse_line("q:1"), ParseError);
  EXPECT_EQ(parse_point("0,1"), Point(0, 1));
  EXPECT_THROW(parse_point("0,-1"), GeometryError);
}

TEST(SpecParseTest, Objects) {
  EXPECT_TRUE(std::holds_alternative<HLine>(parse_object("v:0")));
  EXPECT_TRUE(std::holds_alternative<PointObject>(parse_object("p:1,2")));
  const auto s = std::get<SegmentObject>(parse_object("s:0,1;3,1"));
  EXPECT_EQ(s.b, Point(3, 1));
  const auto t = std::get<TriangleObject>(parse_object("t:0,1;3,1;1,4"));
  EXPECT_EQ(t.c, Point(1, 4));
  EXPECT_THROW(parse_object("t:0,1;3,1"), ParseError);
  const auto file = parse_object_file("# scene\ne:1.5,2.5\n\n  p:0,1  # apex\n");
  EXPECT_EQ(file.size(), 2u);
}

TEST(RenderTest, ApexIsHighestSample) {
  RenderSpec spec;
  spec.x_min = -2;
  spec.x_max = 5;
  spec.y_max = 3;
  const Model m(2.0);
  const auto pts = sample_line(m, EllipticLine(1.5, 2.5), spec);
  ASSERT_GT(pts.size(), 10u);
  const auto top = std::min_element(
      pts.begin(), pts.end(), [](auto a, auto b) { return a.y < b.y; });
  EXPECT_NEAR(Viewport(spec).to_world_y(top->y), 1.25, 1e-12);
  const Vec2px apex = Viewport(spec).to_px(1.5, 1.25);
  EXPECT_NEAR(top->x, apex.x, 1e-9);
}

TEST(RenderTest, VerticalIsStraight) {
  const auto pts = sample_line(Model(1.0), VerticalLine{0}, RenderSpec{});
  ASSERT_GT(pts.size(), 2u);
  for (const auto& p : pts) EXPECT_EQ(p.x, pts.front().x);
}

TEST(RenderTest, SqueezeScalesVertically) {
  RenderSpec spec;
  spec.stroke_samples = 64;
  const auto one = sample_line(Model(1.0), EllipticLine(1.5, 2.5), spec);
  const auto two = sample_line(Model(2.0), EllipticLine(1.5, 2.5), spec);
  const Viewport vp(spec);
  const auto height = [&](const std::vector<Vec2px>& pts) {
    double h = 0;
    for (const auto& p : pts) h = std::max(h, vp.to_world_y(p.y));
    return h;
  };
  EXPECT_NEAR(height(one), 2.5, 1e-12);
  EXPECT_NEAR(height(two), 1.25, 1e-12);
  // Both strokes run down to the shared ends (-1, 0) and (4, 0).
  for (const auto* pts : {&one, &two}) {
    const auto [lo, hi] = std::minmax_element(
        pts->begin(), pts->end(), [](auto a, auto b) { return a.x < b.x; });
    EXPECT_NEAR(lo->x, vp.to_px(-1, 0).x, 0.5);
    EXPECT_NEAR(hi->x, vp.to_px(4, 0).x, 0.5);
  }
}

TEST(RenderTest, SvgIsDeterministic) {
  const std::vector<double> ks = {1.0, 2.0};
  const std::vector<SceneObject> objects = {
      parse_object("e:1.5,2.5"), parse_object("v:0"), parse_object("p:1,1"),
      parse_object("s:0,1;3,1"), parse_object("t:0,1;3,1;1,3")};
  const std::string svg = render_svg(ks, objects, RenderSpec{});
  EXPECT_EQ(svg, render_svg(ks, objects, RenderSpec{}));
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("data-k=\"2\""), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  RenderSpec bad;
  bad.x_max = bad.x_min;
  EXPECT_THROW(render_svg(ks, objects, bad), ParseError);
}

TEST(CliTest, Line) {
  EXPECT_EQ(run_cli({"line", "--k", "2", "0", "1", "3", "1"}).out,
            "elliptic c=1.5 a=2.5 endpoints -1 4\n");
  EXPECT_EQ(run_cli({"line", "--k", "1", "0", "1", "0", "2"}).out,
            "vertical p=0\n");
  const CliResult bad = run_cli({"line", "--k", "1", "0", "1", "0", "1"});
  EXPECT_EQ(bad.code, kExitGeometry);
  EXPECT_NE(bad.err.find("CoincidentPoints"), std::string::npos);
}

TEST(CliTest, Dist) {
  EXPECT_EQ(run_cli({"dist", "--k", "2", "0", "1", "3", "1"}).out,
            "1.38629436112\n");
  EXPECT_EQ(run_cli({"dist", "--k", "7", "5", "1", "5", "1"}).out, "0\n");
  const CliResult r = run_cli({"dist", "--k", "3", "5", "1", "5", "7.389056098931"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NEAR(std::stod(r.out), 2.0, 1e-12);
}

TEST(CliTest, MatchesLibrary) {
  const Model m(0.7);
  const Point p(-1.25, 0.3), q(2.5, 4.0);
  const CliResult r = run_cli({"dist", "--k", "0.7", "--format", "records", "-1.25",
                         "0.3", "2.5", "4"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["distance"].get<double>(), distance(m, p, q));

  const CliResult t = run_cli({"ruler", "--k", "0.7", "--format", "records",
                         "e:1.5,2.5", "1.5", "3.5714285714285716"});
  EXPECT_EQ(nlohmann::json::parse(t.out)["t"].get<double>(),
            ruler(m, EllipticLine(1.5, 2.5), Point(1.5, 2.5 / 0.7)));
}

TEST(CliTest, RulerAndInverse) {
  EXPECT_EQ(run_cli({"ruler", "--k", "2", "e:1.5,2.5", "3", "1"}).out,
            "0.69314718056\n");
  EXPECT_EQ(run_cli({"ruler", "--k", "2", "--t", "0", "e:1.5,2.5"}).out,
            "1.5 1.25\n");
  EXPECT_EQ(run_cli({"ruler", "--k", "2", "e:1.5,2.5", "0", "2"}).code,
            kExitGeometry);
}

TEST(CliTest, Intersect) {
  EXPECT_EQ(run_cli({"intersect", "--k", "2", "v:1.5", "e:1.5,2.5"}).out,
            "point 1.5 1.25\n");
  EXPECT_EQ(run_cli({"intersect", "v:0", "v:3"}).out, "none\n");
  EXPECT_EQ(run_cli({"intersect", "v:0", "v:0"}).code, kExitGeometry);
}

TEST(CliTest, Parallels) {
  EXPECT_EQ(run_cli({"parallels", "--k", "1", "e:0,1", "3", "1"}).out,
            "elliptic c=2.25 a=1.25 endpoints 1 3.5\n"
            "elliptic c=1.125 a=2.125 endpoints -1 3.25\n");
  EXPECT_EQ(run_cli({"parallels", "--k", "2", "v:0", "3", "1"}).out,
            "vertical p=3\n"
            "elliptic c=2.16666666667 a=2.16666666667 endpoints 0 "
            "4.33333333333\n");
  EXPECT_EQ(run_cli({"parallels", "--k", "1", "e:0,1", "1", "2"}).out,
            "vertical p=1\nelliptic c=1 a=2 endpoints -1 3\n");
}

TEST(CliTest, Angle) {
  const CliResult r = run_cli({"angle", "--k", "2", "--measure", "pullback", "0",
                         "1", "3", "1", "1.5", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("pullback A=", 0), 0u);
  const CliResult degenerate = run_cli(
      {"angle", "--k", "2", "0", "1", "1.5", "1.25", "3", "1"});
  EXPECT_EQ(degenerate.code, kExitGeometry);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"dist", "0", "1", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"dist", "0", "1", "3", "x"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"dist", "--k", "0", "0", "1", "3", "1"}).code,
            kExitGeometry);
  EXPECT_EQ(run_cli({"line", "--format", "yaml", "0", "1", "3", "1"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--suite", "nosuch"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--samples", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"dist", "--help"}).code, kExitOk);
}

TEST(CliTest, VerifyWritesIdenticalReports) {
  const std::string a = temp_path("hkgeom_cli_test_a.jsonl");
  const std::string b = temp_path("hkgeom_cli_test_b.jsonl");
  const std::vector<std::string> base = {"verify", "--seed", "42", "--samples",
                                         "100", "--k", "0.5,1,2"};
  auto with_report = [&](const std::string& path) {
    auto args = base;
    args.insert(args.end(), {"--report", path});
    return run_cli(args);
  };
  const CliResult ra = with_report(a);
  EXPECT_EQ(ra.code, kExitOk);
  EXPECT_NE(ra.out.find("incidence"), std::string::npos);
  EXPECT_EQ(with_report(b).code, kExitOk);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(CliTest, Render) {
  const std::string path = temp_path("hkgeom_cli_test.svg");
  const CliResult r = run_cli({"render", "--k", "1,2", "--out", path, "--xmin", "-2",
                         "--xmax", "5", "--ymax", "3", "e:1.5,2.5", "v:0"});
  EXPECT_EQ(r.code, kExitOk);
  const std::string svg = slurp(path);
  EXPECT_NE(svg.find("id=\"k1\""), std::string::npos);
  std::remove(path.c_str());

  EXPECT_EQ(run_cli({"render", "--out", path, "e:1.5"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"render", "--out", "/nonexistent/dir/x.svg", "v:0"}).code,
            kExitUsage);
}

}  // namespace
}  // namespace hkgeom::cli
