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

#include "cli.h"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "hkgeom/hkgeom.h"
#include "render.h"
#include "spec_parse.h"

namespace hkgeom::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double v) { return fmt::format("{:.12g}", v); }

struct CommonFlags {
  std::string k = "1";
  double eps_abs = kDefaultEpsAbs;
  double eps_rel = kDefaultEpsRel;
  std::string format = "human";
  std::vector<std::string> args;

  bool records() const { return format == "records"; }

  Model model() const {
    const auto ks = parse_real_list(k);
    if (ks.size() != 1) throw ParseError("--k takes a single value here");
    return Model(ks.front(), eps_abs, eps_rel);
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& k_help,
                const std::string& args_help) {
  cmd->add_option("--k", flags.k, k_help)->capture_default_str();
  cmd->add_option("--eps-abs", flags.eps_abs, "Absolute tolerance")
      ->capture_default_str();
  cmd->add_option("--eps-rel", flags.eps_rel, "Relative tolerance")
      ->capture_default_str();
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();
  cmd->add_option("args", flags.args, args_help);
}

void require_args(const CommonFlags& flags, std::size_t n,
                  const char* usage) {
  if (flags.args.size() != n) {
    throw ParseError(std::string("expected ") + usage);
  }
}

Point point_arg(const CommonFlags& flags, std::size_t i) {
  return Point(parse_real(flags.args[i]), parse_real(flags.args[i + 1]));
}

Json endpoint_json(const IdealEndpoint& e) {
  if (const auto* a = std::get_if<AxisPoint>(&e)) return a->x;
  return "inf";
}

Json line_json(const Model& m, const HLine& line) {
  Json j;
  if (const auto* v = std::get_if<VerticalLine>(&line)) {
    j["kind"] = "vertical";
    j["p"] = v->p;
  } else {
    const auto& e = std::get<EllipticLine>(line);
    j["kind"] = "elliptic";
    j["c"] = e.c();
    j["a"] = e.a();
  }
  const auto [e1, e2] = ideal_endpoints(m, line);
  j["endpoints"] = Json::array({endpoint_json(e1), endpoint_json(e2)});
  return j;
}

std::string line_text(const Model& m, const HLine& line) {
  if (const auto* v = std::get_if<VerticalLine>(&line)) {
    return "vertical p=" + num(v->p);
  }
  const auto& e = std::get<EllipticLine>(line);
  const auto [e1, e2] = ideal_endpoints(m, line);
  return "elliptic c=" + num(e.c()) + " a=" + num(e.a()) + " endpoints " +
         num(std::get<AxisPoint>(e1).x) + " " + num(std::get<AxisPoint>(e2).x);
}

Json record(std::string_view cmd, const Model& m) {
  Json j;
  j["cmd"] = cmd;
  j["k"] = m.k();
  return j;
}

void cmd_line(const CommonFlags& f, std::ostream& out) {
  require_args(f, 4, "x1 y1 x2 y2");
  const Model m = f.model();
  const HLine line = line_through(m, point_arg(f, 0), point_arg(f, 2));
  if (f.records()) {
    Json j = record("line", m);
    j.update(line_json(m, line));
    out << j.dump() << '\n';
  } else {
    out << line_text(m, line) << '\n';
  }
}

void cmd_dist(const CommonFlags& f, std::ostream& out) {
  require_args(f, 4, "x1 y1 x2 y2");
  const Model m = f.model();
  const double d = distance(m, point_arg(f, 0), point_arg(f, 2));
  if (f.records()) {
    Json j = record("dist", m);
    j["distance"] = d;
    out << j.dump() << '\n';
  } else {
    out << num(d) << '\n';
  }
}

void cmd_ruler(const CommonFlags& f, const std::optional<double>& t,
               std::ostream& out) {
  const Model m = f.model();
  if (t) {
    require_args(f, 1, "LINE (with --t)");
    const Point p = ruler_inverse(m, parse_line(f.args[0]), *t);
    if (f.records()) {
      Json j = record("ruler_inverse", m);
      j["t"] = *t;
      j["x"] = p.x();
      j["y"] = p.y();
      out << j.dump() << '\n';
    } else {
      out << num(p.x()) << ' ' << num(p.y()) << '\n';
    }
    return;
  }
  require_args(f, 3, "LINE x y");
  const double value = ruler(m, parse_line(f.args[0]), point_arg(f, 1));
  if (f.records()) {
    Json j = record("ruler", m);
    j["t"] = value;
    out << j.dump() << '\n';
  } else {
    out << num(value) << '\n';
  }
}

void cmd_intersect(const CommonFlags& f, std::ostream& out) {
  require_args(f, 2, "LINE LINE");
  const Model m = f.model();
  const auto p = intersect(m, parse_line(f.args[0]), parse_line(f.args[1]));
  if (f.records()) {
    Json j = record("intersect", m);
    j["point"] = p ? Json::array({p->x(), p->y()}) : Json(nullptr);
    out << j.dump() << '\n';
  } else if (p) {
    out << "point " << num(p->x()) << ' ' << num(p->y()) << '\n';
  } else {
    out << "none\n";
  }
}

void cmd_parallels(const CommonFlags& f, std::ostream& out) {
  require_args(f, 3, "LINE x y");
  const Model m = f.model();
  const auto [first, second] =
      parallels_through(m, parse_line(f.args[0]), point_arg(f, 1));
  if (f.records()) {
    Json j = record("parallels", m);
    j["lines"] = Json::array({line_json(m, first), line_json(m, second)});
    out << j.dump() << '\n';
  } else {
    out << line_text(m, first) << '\n' << line_text(m, second) << '\n';
  }
}

void cmd_angle(const CommonFlags& f, const std::string& measure,
               std::ostream& out) {
  require_args(f, 6, "ax ay bx by cx cy");
  const Model m = f.model();
  const Point a = point_arg(f, 0), b = point_arg(f, 2), c = point_arg(f, 4);
  std::vector<std::pair<std::string, AngleMeasure>> measures;
  if (measure != "pullback") {
    measures.emplace_back("euclidean", AngleMeasure::kEuclidean);
  }
  if (measure != "euclidean") {
    measures.emplace_back("pullback", AngleMeasure::kPullback);
  }
  constexpr double kDeg = 180.0 / std::numbers::pi;
  for (const auto& [name, which] : measures) {
    const auto angles = triangle_angles(m, a, b, c, which);
    const double sum = angles[0] + angles[1] + angles[2];
    if (f.records()) {
      Json j = record("angle", m);
      j["measure"] = name;
      j["degrees"] = Json::array(
          {angles[0] * kDeg, angles[1] * kDeg, angles[2] * kDeg});
      j["sum"] = sum * kDeg;
      out << j.dump() << '\n';
    } else {
      out << name << " A=" << num(angles[0] * kDeg)
          << " B=" << num(angles[1] * kDeg) << " C=" << num(angles[2] * kDeg)
          << " sum=" << num(sum * kDeg) << '\n';
    }
  }
}

struct VerifyFlags {
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::string k = "0.5,1,2";
  std::string suites;
  std::string report;
  unsigned threads = 1;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.seed = f.seed;
  cfg.samples = f.samples;
  cfg.k_values = parse_real_list(f.k);
  cfg.threads = f.threads;
  if (!f.report.empty()) cfg.report_path = f.report;

  std::vector<Suite> selected;
  if (f.suites.empty()) {
    const auto all = all_suites();
    selected.assign(all.begin(), all.end());
  } else {
    std::istringstream names(f.suites);
    for (std::string name; std::getline(names, name, ',');) {
      const auto suite = parse_suite(name);
      if (!suite) throw ParseError("unknown suite '" + name + "'");
      selected.push_back(*suite);
    }
  }
  try {
    cfg.validate();
  } catch (const GeometryError& e) {
    throw ParseError(e.what());
  }

  std::vector<SuiteReport> reports;
  std::size_t failed = 0;
  for (Suite suite : selected) {
    reports.push_back(run_suite(suite, cfg));
    const auto& r = reports.back();
    failed += r.failed;
    out << fmt::format("{:<10} passed={} failed={} ({:.3f} s)\n",
                       r.suite_name, r.passed, r.failed, r.wall_time.count());
    for (std::size_t i = 0; i < std::min<std::size_t>(3, r.counterexamples.size());
         ++i) {
      const auto& c = r.counterexamples[i];
      out << "  sample " << c.sample_index << ": " << c.check
          << " observed=" << num(c.observed) << " expected=" << num(c.expected)
          << '\n';
    }
  }
  if (cfg.report_path) {
    std::ofstream file(*cfg.report_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << *cfg.report_path
          << "' for writing: " << std::strerror(errno) << '\n';
      return kExitUsage;
    }
    write_report(file, reports);
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

struct RenderFlags {
  std::string k = "1";
  std::string out;
  std::string input;
  double eps_abs = kDefaultEpsAbs;
  double eps_rel = kDefaultEpsRel;
  RenderSpec spec;
  std::vector<std::string> objects;
};

int cmd_render(const RenderFlags& f, std::ostream& out, std::ostream& err) {
  std::vector<SceneObject> objects;
  if (!f.input.empty()) {
    std::ifstream in(f.input, std::ios::binary);
    if (!in) {
      err << "error: cannot read '" << f.input << "': " << std::strerror(errno)
          << '\n';
      return kExitUsage;
    }
    const std::string text{std::istreambuf_iterator<char>(in), {}};
    objects = parse_object_file(text);
  }
  for (const auto& spec : f.objects) objects.push_back(parse_object(spec));
  const auto ks = parse_real_list(f.k);
  const std::string svg =
      render_svg(ks, objects, f.spec, f.eps_abs, f.eps_rel);
  std::ofstream file(f.out, std::ios::binary);
  if (!file || !(file << svg)) {
    err << "error: cannot write '" << f.out << "': " << std::strerror(errno)
        << '\n';
    return kExitUsage;
  }
  out << "wrote " << f.out << " (" << objects.size() << " objects, "
      << ks.size() << " k values)\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app("Generalized Poincare half-plane geometry H_k", "hkgeom");
  app.require_subcommand(1);

  CommonFlags line_f, dist_f, ruler_f, intersect_f, parallels_f, angle_f;
  const std::string k_one = "Squeeze factor k > 0";
  add_common(app.add_subcommand("line", "The h-line through two points"),
             line_f, k_one, "x1 y1 x2 y2");
  add_common(app.add_subcommand("dist", "Distance between two points"), dist_f,
             k_one, "x1 y1 x2 y2");
  auto* ruler_cmd =
      app.add_subcommand("ruler", "Ruler coordinate of a point, or its inverse");
  add_common(ruler_cmd, ruler_f, k_one, "LINE x y");
  std::optional<double> ruler_t;
  ruler_cmd->add_option("--t", ruler_t, "Evaluate the inverse ruler at t");
  add_common(app.add_subcommand("intersect", "Meeting point of two h-lines"),
             intersect_f, k_one, "LINE LINE");
  add_common(
      app.add_subcommand("parallels", "The two parallels through a point"),
      parallels_f, k_one, "LINE x y");
  auto* angle_cmd = app.add_subcommand("angle", "Interior angles of a triangle");
  add_common(angle_cmd, angle_f, k_one, "ax ay bx by cx cy");
  std::string measure = "both";
  angle_cmd->add_option("--measure", measure, "Angle measure")
      ->check(CLI::IsMember({"euclidean", "pullback", "both"}))
      ->capture_default_str();

  VerifyFlags verify_f;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the randomized axiom suites");
  verify_cmd->add_option("--seed", verify_f.seed)->capture_default_str();
  verify_cmd->add_option("--samples", verify_f.samples)->capture_default_str();
  verify_cmd->add_option("--k", verify_f.k, "Comma-separated k values")
      ->capture_default_str();
  verify_cmd->add_option("--suite", verify_f.suites,
                         "Comma-separated suites (default: all)");
  verify_cmd->add_option("--report", verify_f.report,
                         "Write a JSON Lines report");
  verify_cmd->add_option("--threads", verify_f.threads)->capture_default_str();

  RenderFlags render_f;
  auto* render_cmd = app.add_subcommand("render", "Render objects to SVG");
  render_cmd->add_option("--k", render_f.k, "Comma-separated k values")
      ->capture_default_str();
  render_cmd->add_option("--out", render_f.out, "Output SVG path")->required();
  render_cmd->add_option("--input", render_f.input, "Object file");
  render_cmd->add_option("--eps-abs", render_f.eps_abs)->capture_default_str();
  render_cmd->add_option("--eps-rel", render_f.eps_rel)->capture_default_str();
  render_cmd->add_option("--xmin", render_f.spec.x_min)->capture_default_str();
  render_cmd->add_option("--xmax", render_f.spec.x_max)->capture_default_str();
  render_cmd->add_option("--ymax", render_f.spec.y_max)->capture_default_str();
  render_cmd->add_option("--width", render_f.spec.width_px)
      ->capture_default_str();
  render_cmd->add_option("--height", render_f.spec.height_px)
      ->capture_default_str();
  render_cmd->add_option("--stroke-samples", render_f.spec.stroke_samples)
      ->capture_default_str();
  render_cmd->add_option("objects", render_f.objects,
                         "v:p  e:c,a  p:x,y  s:x,y;x,y  t:x,y;x,y;x,y");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "line") cmd_line(line_f, out);
    if (name == "dist") cmd_dist(dist_f, out);
    if (name == "ruler") cmd_ruler(ruler_f, ruler_t, out);
    if (name == "intersect") cmd_intersect(intersect_f, out);
    if (name == "parallels") cmd_parallels(parallels_f, out);
    if (name == "angle") cmd_angle(angle_f, measure, out);
    if (name == "verify") return cmd_verify(verify_f, out, err);
    if (name == "render") return cmd_render(render_f, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kExitGeometry;
  }
  return kExitOk;
}

}  // namespace hkgeom::cli
