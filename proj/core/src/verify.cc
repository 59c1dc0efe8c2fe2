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

#include "hkgeom/verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hkgeom/angle.h"
#include "hkgeom/geodesic.h"
#include "hkgeom/incidence.h"
#include "hkgeom/metric.h"
#include "hkgeom/model.h"

namespace hkgeom {

namespace {

constexpr std::array<Suite, 7> kAllSuites = {
    Suite::kIncidence, Suite::kMetric,   Suite::kRuler, Suite::kPsaPasch,
    Suite::kParallel,  Suite::kOracle,   Suite::kAngle,
};

// Tolerances of the individual checks.
constexpr double kResidualTol = 1e-9;        // ellipse residual, times a^2
constexpr double kSymmetryTol = 1e-12;       // relative
constexpr double kTriangleSlack = 1e-9;      // absolute
constexpr double kRoundTripTol = 1e-9;       // absolute, in t
constexpr double kRulerTol = 1e-10;          // relative
constexpr double kIsometryTol = 1e-10;       // relative
constexpr double kQuadratureTol = 1e-6;      // absolute
constexpr double kEndpointTol = 1e-9;        // absolute
constexpr double kMeasureAgreementTol = 1e-12;
constexpr double kSasTol = 1e-8;             // relative
constexpr double kSasConstructionTol = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-sample random stream.
class Sampler {
 public:
  Sampler(std::uint64_t seed, Suite suite, std::size_t index)
      : gen_(splitmix64(splitmix64(seed) ^
                        splitmix64(static_cast<std::uint64_t>(suite) + 1) ^
                        splitmix64(splitmix64(index)))) {}

  // Uniform in [0, 1), built from the raw bits so the stream does not depend
  // on the standard library's distribution implementations.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  bool chance(double p) { return unit() < p; }
  double sign() { return chance(0.5) ? 1.0 : -1.0; }

 private:
  std::mt19937_64 gen_;
};

struct PointWindow {
  double x_half;
  double y_lo;
  double y_hi;
};

struct LineWindow {
  double c_half;
  double a_lo;
  double a_hi;
};

constexpr PointWindow kWidePoints{1e3, 1e-3, 1e3};
constexpr PointWindow kModeratePoints{10.0, 0.05, 20.0};
// Points produced by ruler_inverse keep |x| / a <= 1e4 here, so rounding
// of x stays far below the height of the deepest sampled points.
constexpr LineWindow kRulerLines{1e2, 1e-2, 1e2};
constexpr LineWindow kModerateLines{10.0, 0.05, 20.0};
// Arcs with |t| <= 10 on these lines stay far above eps_abs in height, so
// distinct ruler coordinates never give approx_eq endpoints.
constexpr LineWindow kOracleLines{10.0, 0.5, 20.0};

Point random_point(Sampler& rng, const PointWindow& w) {
  const double x = rng.uniform(-w.x_half, w.x_half);
  return Point(x, rng.log_uniform(w.y_lo, w.y_hi));
}

// A point almost straight above or below p, to exercise near-vertical lines.
Point near_vertical_partner(Sampler& rng, const Point& p) {
  const double dx = rng.sign() * rng.log_uniform(1e-9, 1e-6);
  return Point(p.x() + dx, rng.log_uniform(1.0, 1e3));
}

HLine random_line(Sampler& rng, const LineWindow& w) {
  if (rng.chance(0.25)) return VerticalLine{rng.uniform(-w.c_half, w.c_half)};
  const double c = rng.uniform(-w.c_half, w.c_half);
  return EllipticLine(c, rng.log_uniform(w.a_lo, w.a_hi));
}

template <typename Fn>
auto retry(Fn&& fn) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    if (auto result = fn()) return *result;
  }
  throw std::logic_error("sampler: could not draw a valid configuration");
}

double rel_err(double observed, double expected) {
  const double scale = std::max(std::abs(observed), std::abs(expected));
  return scale == 0.0 ? 0.0 : std::abs(observed - expected) / scale;
}

class Sample {
 public:
  explicit Sample(CheckRecord& record) : record_(record) {}

  void input(std::string name, double v) {
    record_.inputs.push_back({std::move(name), v});
  }
  void input(const std::string& name, const Point& p) {
    input(name + ".x", p.x());
    input(name + ".y", p.y());
  }
  void input(const std::string& name, const HLine& line) {
    if (const auto* v = std::get_if<VerticalLine>(&line)) {
      input(name + ".p", v->p);
    } else {
      const auto& e = std::get<EllipticLine>(line);
      input(name + ".c", e.c());
      input(name + ".a", e.a());
    }
  }

  // Records the outcome of one check. After the first failure the record
  // keeps that failure; later checks still run but are not recorded.
  bool check(std::string_view name, bool ok, double observed,
             double expected) {
    if (!record_.passed) return ok;
    record_.check = name;
    record_.observed = observed;
    record_.expected = expected;
    record_.passed = ok;
    return ok;
  }
  bool check(std::string_view name, bool ok) {
    return check(name, ok, ok ? 1.0 : 0.0, 1.0);
  }

 private:
  CheckRecord& record_;
};

using SampleFn = std::function<void(const Model&, Sampler&, Sample&)>;

SuiteReport run_samples(Suite suite, const SuiteConfig& cfg,
                        const SampleFn& fn) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite_name = suite_name(suite);
  report.records.resize(cfg.samples);

  const auto run_one = [&](std::size_t i) {
    CheckRecord& record = report.records[i];
    record.suite = report.suite_name;
    record.sample_index = i;
    const double k = cfg.k_values[i % cfg.k_values.size()];
    Sample sample(record);
    sample.input("k", k);
    try {
      const Model m(k);
      Sampler rng(cfg.seed, suite, i);
      fn(m, rng, sample);
    } catch (const GeometryError& e) {
      sample.check(std::string("error:") +
                       std::string(error_code_name(e.code())),
                   false);
    } catch (const std::exception& e) {
      sample.check(std::string("exception:") + e.what(), false);
    }
  };

  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1 || cfg.samples < 2) {
    for (std::size_t i = 0; i < cfg.samples; ++i) run_one(i);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < cfg.samples; i += threads) run_one(i);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  for (const auto& record : report.records) {
    if (record.passed) {
      ++report.passed;
    } else {
      ++report.failed;
      report.counterexamples.push_back(record);
    }
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

double ellipse_residual(const Model& m, const EllipticLine& e,
                        const Point& p) {
  const double dx = p.x() - e.c();
  const double ky = m.k() * p.y();
  return std::abs(dx * dx + ky * ky - e.a() * e.a());
}

bool shares_endpoint_exactly(const IdealEndpoint& u, const IdealEndpoint& v) {
  const auto* ua = std::get_if<AxisPoint>(&u);
  const auto* va = std::get_if<AxisPoint>(&v);
  if (ua == nullptr || va == nullptr) return ua == va;
  return std::abs(ua->x - va->x) <= kEndpointTol;
}

// The h-line through p with tangent direction `theta`, measured in the
// squeezed (classical) frame, and the point at distance s along it.
Point point_along(const Model& m, const Point& p, double theta, double s) {
  const double tx = std::cos(theta);
  const double ty = std::sin(theta) / m.k();
  if (std::abs(tx) < 1e-12) {
    const HLine line = VerticalLine{p.x()};
    const double t = ruler_unchecked(m, line, p);
    return ruler_inverse(m, line, ty > 0.0 ? t + s : t - s);
  }
  // Tangent orthogonal to the gradient (x - c, k^2 y).
  const double c = p.x() + m.k() * m.k() * p.y() * ty / tx;
  const HLine line = EllipticLine(c, std::hypot(p.x() - c, m.k() * p.y()));
  const double t = ruler_unchecked(m, line, p);
  return ruler_inverse(m, line, tx > 0.0 ? t + s : t - s);
}

void incidence_sample(const Model& m, Sampler& rng, Sample& s) {
  const Point p1 = random_point(rng, kWidePoints);
  const bool near_vertical = rng.chance(0.01);
  const Point p2 = retry([&]() -> std::optional<Point> {
    const Point q = near_vertical ? near_vertical_partner(rng, p1)
                                  : random_point(rng, kWidePoints);
    if (approx_eq(m, p1, q)) return std::nullopt;
    return q;
  });
  s.input("p1", p1);
  s.input("p2", p2);

  const HLine line = line_through(m, p1, p2);
  s.input("line", line);
  if (const auto* e = std::get_if<EllipticLine>(&line)) {
    const double bound = kResidualTol * e->a() * e->a();
    const double r1 = ellipse_residual(m, *e, p1);
    const double r2 = ellipse_residual(m, *e, p2);
    s.check("contains_p1", r1 < bound, r1, bound);
    s.check("contains_p2", r2 < bound, r2, bound);
  } else {
    const double p = std::get<VerticalLine>(line).p;
    s.check("contains_p1", m.approx_eq(p1.x(), p), p1.x(), p);
    s.check("contains_p2", m.approx_eq(p2.x(), p), p2.x(), p);
  }
  s.check("deterministic", line_through(m, p1, p2) == line);
  s.check("unique", same_line(m, line, line_through(m, p2, p1)));
}

void metric_sample(const Model& m, Sampler& rng, Sample& s) {
  const Point p = random_point(rng, kWidePoints);
  const Point q = rng.chance(0.01) ? near_vertical_partner(rng, p)
                                   : random_point(rng, kWidePoints);
  const Point r = random_point(rng, kWidePoints);
  s.input("p", p);
  s.input("q", q);
  s.input("r", r);

  const double pq = distance(m, p, q);
  const double qp = distance(m, q, p);
  const double qr = distance(m, q, r);
  const double pr = distance(m, p, r);
  s.check("nonnegative", pq >= 0.0 && qr >= 0.0 && pr >= 0.0,
          std::min({pq, qr, pr}), 0.0);
  s.check("identity", distance(m, p, p) == 0.0, distance(m, p, p), 0.0);
  if (!approx_eq(m, p, q)) s.check("distinct_positive", pq > 0.0, pq, 0.0);
  s.check("symmetry", rel_err(pq, qp) <= kSymmetryTol, qp, pq);
  s.check("triangle", pr <= pq + qr + kTriangleSlack, pr, pq + qr);
}

void ruler_sample(const Model& m, Sampler& rng, Sample& s) {
  const HLine line = random_line(rng, kRulerLines);
  const double t1 = rng.uniform(-20.0, 20.0);
  const double t2 = rng.uniform(-20.0, 20.0);
  s.input("line", line);
  s.input("t1", t1);
  s.input("t2", t2);

  const Point p = ruler_inverse(m, line, t1);
  const Point q = ruler_inverse(m, line, t2);
  const double f1 = ruler(m, line, p);
  const double f2 = ruler(m, line, q);
  s.check("round_trip_1", std::abs(f1 - t1) < kRoundTripTol, f1, t1);
  s.check("round_trip_2", std::abs(f2 - t2) < kRoundTripTol, f2, t2);
  const double apex = ruler(m, line, ruler_inverse(m, line, 0.0));
  s.check("origin", std::abs(apex) < kRoundTripTol, apex, 0.0);
  if (!approx_eq(m, p, q)) {
    const double d = distance(m, p, q);
    const double df = std::abs(f1 - f2);
    s.check("ruler_postulate", rel_err(df, d) <= kRulerTol, df, d);
  }
}

void psa_pasch_sample(const Model& m, Sampler& rng, Sample& s) {
  const Point l1 = random_point(rng, kModeratePoints);
  const Point l2 = retry([&]() -> std::optional<Point> {
    const Point q = random_point(rng, kModeratePoints);
    if (approx_eq(m, l1, q)) return std::nullopt;
    return q;
  });
  const HLine line = line_through(m, l1, l2);
  const Point a = random_point(rng, kModeratePoints);
  const Point b = random_point(rng, kModeratePoints);
  s.input("line", line);
  s.input("a", a);
  s.input("b", b);

  // Partition.
  const SideLabel sa = side_of(m, line, a);
  const SideLabel sb = side_of(m, line, b);
  s.check("partition",
          (sa == SideLabel::kOnLine) == contains(m, line, a) &&
              (sb == SideLabel::kOnLine) == contains(m, line, b));

  if (sa != SideLabel::kOnLine && sb != SideLabel::kOnLine &&
      !approx_eq(m, a, b)) {
    const Segment seg = segment_between(m, a, b);
    if (sa == sb) {
      for (int j = 1; j < 8; ++j) {
        const double t = seg.t0() + (seg.t1() - seg.t0()) * j / 8.0;
        const SideLabel st = side_of(m, line, ruler_inverse(m, seg.line(), t));
        if (!s.check("convex", st == sa, static_cast<double>(st),
                     static_cast<double>(sa))) {
          s.input("convex.t", t);
          break;
        }
      }
    } else if (!same_line(m, seg.line(), line)) {
      s.check("crossing", segment_crosses(m, seg, line));
    }
  }

  // Pasch: a line through an interior point of side AB of triangle ABC that
  // misses the vertices meets BC or CA.
  const auto [ta, tb, tc] = retry([&]() -> std::optional<std::array<Point, 3>> {
    const Point u = random_point(rng, kModeratePoints);
    const Point v = random_point(rng, kModeratePoints);
    const Point w = random_point(rng, kModeratePoints);
    if (approx_eq(m, u, v) || approx_eq(m, v, w) || approx_eq(m, u, w) ||
        contains(m, line_through(m, u, v), w)) {
      return std::nullopt;
    }
    return std::array<Point, 3>{u, v, w};
  });
  const Segment ab = segment_between(m, ta, tb);
  const Segment bc = segment_between(m, tb, tc);
  const Segment ca = segment_between(m, tc, ta);
  const auto [cross_t, pasch_line] =
      retry([&]() -> std::optional<std::pair<double, HLine>> {
        const double t = ab.t0() + (ab.t1() - ab.t0()) * rng.uniform(0.05, 0.95);
        const Point x = ruler_inverse(m, ab.line(), t);
        const Point y = random_point(rng, kModeratePoints);
        if (approx_eq(m, x, y)) return std::nullopt;
        HLine l = line_through(m, x, y);
        if (contains(m, l, ta) || contains(m, l, tb) || contains(m, l, tc) ||
            same_line(m, l, ab.line()) || same_line(m, l, bc.line()) ||
            same_line(m, l, ca.line())) {
          return std::nullopt;
        }
        return std::pair<double, HLine>{t, l};
      });
  s.input("tri.a", ta);
  s.input("tri.b", tb);
  s.input("tri.c", tc);
  s.input("pasch.t", cross_t);
  s.input("pasch.line", pasch_line);
  s.check("pasch_meets_ab", segment_crosses(m, ab, pasch_line));
  s.check("pasch",
          segment_crosses(m, bc, pasch_line) || segment_crosses(m, ca, pasch_line));
}

void parallel_sample(const Model& m, Sampler& rng, Sample& s) {
  const HLine line = random_line(rng, kModerateLines);
  const Point p = retry([&]() -> std::optional<Point> {
    const Point q = random_point(rng, kModeratePoints);
    if (contains(m, line, q)) return std::nullopt;
    return q;
  });
  s.input("line", line);
  s.input("p", p);

  const auto [first, second] = parallels_through(m, line, p);
  s.input("parallel1", first);
  s.input("parallel2", second);
  s.check("distinct", !same_line(m, first, second));
  const auto ends = ideal_endpoints(m, line);
  for (const HLine* par : {&first, &second}) {
    s.check("contains_p", contains(m, *par, p));
    s.check("parallel", are_parallel(m, line, *par));
    const auto pe = ideal_endpoints(m, *par);
    const int shared = shares_endpoint_exactly(ends.first, pe.first) +
                       shares_endpoint_exactly(ends.first, pe.second) +
                       shares_endpoint_exactly(ends.second, pe.first) +
                       shares_endpoint_exactly(ends.second, pe.second);
    s.check("one_shared_endpoint", shared == 1, shared, 1.0);
    s.check("disjoint", !intersect(m, line, *par).has_value());
  }
  const auto again = parallels_through(m, line, p);
  s.check("deterministic", again.first == first && again.second == second);
}

void oracle_sample(const Model& m, Sampler& rng, Sample& s) {
  const Point p = random_point(rng, kWidePoints);
  const Point q = rng.chance(0.01) ? near_vertical_partner(rng, p)
                                   : random_point(rng, kWidePoints);
  s.input("p", p);
  s.input("q", q);
  const double d = distance(m, p, q);
  const double dc = classical_distance(squeeze(m, p), squeeze(m, q));
  s.check("isometry", rel_err(d, dc) <= kIsometryTol, d, dc);

  const HLine line = random_line(rng, kOracleLines);
  const double span = rng.uniform(0.0, 10.0);
  const double t0 = rng.uniform(-10.0, 10.0 - span);
  const double t1 = t0 + span;
  s.input("line", line);
  s.input("t0", t0);
  s.input("t1", t1);
  const double length = arc_length_oracle(m, line, t0, t1);
  s.check("arc_length", std::abs(length - (t1 - t0)) <= kQuadratureTol, length,
          t1 - t0);
  const double closed =
      distance(m, ruler_inverse(m, line, t0), ruler_inverse(m, line, t1));
  s.check("arc_vs_distance", std::abs(length - closed) <= kQuadratureTol,
          length, closed);
}

void angle_sample(const Model& m, Sampler& rng, Sample& s) {
  using std::numbers::pi;
  // Two rays at a common base.
  const Point base = random_point(rng, kModeratePoints);
  const auto [u, w] = retry([&]() -> std::optional<std::pair<Point, Point>> {
    const Point a = random_point(rng, kModeratePoints);
    const Point b = random_point(rng, kModeratePoints);
    if (approx_eq(m, a, base) || approx_eq(m, b, base)) return std::nullopt;
    return std::pair<Point, Point>{a, b};
  });
  const bool o1 = rng.chance(0.5);
  const bool o2 = rng.chance(0.5);
  s.input("base", base);
  s.input("u", u);
  s.input("w", w);
  const TangentRay r1 = tangent_ray(m, line_through(m, base, u), base, o1);
  const TangentRay r2 = tangent_ray(m, line_through(m, base, w), base, o2);
  const double eu = euclidean_angle(m, r1, r2);
  const double pb = pullback_angle(m, r1, r2);
  s.check("euclidean_range", eu >= 0.0 && eu <= pi, eu, pi);
  s.check("pullback_range", pb >= 0.0 && pb <= pi, pb, pi);
  if (m.k() == 1.0) {
    s.check("measures_agree", std::abs(eu - pb) <= kMeasureAgreementTol, pb, eu);
  }

  // Pullback angle sum of a random triangle.
  const auto [a, b, c] = retry([&]() -> std::optional<std::array<Point, 3>> {
    const Point x = random_point(rng, kModeratePoints);
    const Point y = random_point(rng, kModeratePoints);
    const Point z = random_point(rng, kModeratePoints);
    if (approx_eq(m, x, y) || approx_eq(m, y, z) || approx_eq(m, x, z) ||
        contains(m, line_through(m, x, y), z)) {
      return std::nullopt;
    }
    return std::array<Point, 3>{x, y, z};
  });
  s.input("tri.a", a);
  s.input("tri.b", b);
  s.input("tri.c", c);
  const auto angles = triangle_angles(m, a, b, c, AngleMeasure::kPullback);
  const double sum = angles[0] + angles[1] + angles[2];
  s.check("angle_sum", sum < pi, sum, pi);
  const auto euclid = triangle_angles(m, a, b, c, AngleMeasure::kEuclidean);
  s.input("euclidean_sum", euclid[0] + euclid[1] + euclid[2]);

  // SAS evidence: equal (side, angle, side) data at two placements give
  // equal third sides.
  const double alpha = rng.uniform(0.2, pi - 0.2);
  const double side_b = rng.uniform(0.2, 3.0);
  const double side_c = rng.uniform(0.2, 3.0);
  s.input("sas.alpha", alpha);
  s.input("sas.b", side_b);
  s.input("sas.c", side_c);
  std::array<double, 2> third{};
  for (int placement = 0; placement < 2; ++placement) {
    const Point apex = random_point(rng, kModeratePoints);
    const double theta = rng.uniform(-pi, pi);
    const Point pb_pt = point_along(m, apex, theta, side_b);
    const Point pc_pt = point_along(m, apex, theta + alpha, side_c);
    const auto measured = triangle_angles(m, apex, pb_pt, pc_pt,
                                          AngleMeasure::kPullback);
    s.check("sas_angle", std::abs(measured[0] - alpha) <= kSasConstructionTol,
            measured[0], alpha);
    const double db = distance(m, apex, pb_pt);
    s.check("sas_side", std::abs(db - side_b) <= kSasConstructionTol, db,
            side_b);
    third[placement] = distance(m, pb_pt, pc_pt);
  }
  s.check("sas", rel_err(third[0], third[1]) <= kSasTol, third[1], third[0]);
}

}  // namespace

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kIncidence:
      return "incidence";
    case Suite::kMetric:
      return "metric";
    case Suite::kRuler:
      return "ruler";
    case Suite::kPsaPasch:
      return "psa";
    case Suite::kParallel:
      return "parallel";
    case Suite::kOracle:
      return "oracle";
    case Suite::kAngle:
      return "angle";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kAllSuites) {
    if (suite_name(s) == name) return s;
  }
  if (name == "pasch") return Suite::kPsaPasch;
  return std::nullopt;
}

std::span<const Suite> all_suites() { return kAllSuites; }

void SuiteConfig::validate() const {
  if (samples < 1) {
    throw GeometryError(ErrorCode::kInvalidConfig, "samples must be >= 1");
  }
  if (k_values.empty()) {
    throw GeometryError(ErrorCode::kInvalidConfig, "k_values is empty");
  }
  for (double k : k_values) {
    if (!std::isfinite(k) || k <= 0.0) {
      std::ostringstream os;
      os << "k_values must be positive and finite, got " << k;
      throw GeometryError(ErrorCode::kInvalidConfig, os.str());
    }
  }
}

SuiteReport run_suite(Suite suite, const SuiteConfig& cfg) {
  switch (suite) {
    case Suite::kIncidence:
      return run_samples(suite, cfg, incidence_sample);
    case Suite::kMetric:
      return run_samples(suite, cfg, metric_sample);
    case Suite::kRuler:
      return run_samples(suite, cfg, ruler_sample);
    case Suite::kPsaPasch:
      return run_samples(suite, cfg, psa_pasch_sample);
    case Suite::kParallel:
      return run_samples(suite, cfg, parallel_sample);
    case Suite::kOracle:
      return run_samples(suite, cfg, oracle_sample);
    case Suite::kAngle:
      return run_samples(suite, cfg, angle_sample);
  }
  throw std::logic_error("run_suite: unknown suite");
}

SuiteReport incidence_suite(const SuiteConfig& cfg) {
  return run_suite(Suite::kIncidence, cfg);
}
SuiteReport metric_suite(const SuiteConfig& cfg) {
  return run_suite(Suite::kMetric, cfg);
}
SuiteReport ruler_suite(const SuiteConfig& cfg) {
  return run_suite(Suite::kRuler, cfg);
}
SuiteReport psa_pasch_suite(const SuiteConfig& cfg) {
  return run_suite(Suite::kPsaPasch, cfg);
}
SuiteReport parallel_suite(const SuiteConfig& cfg) {
  return run_suite(Suite::kParallel, cfg);
}
SuiteReport oracle_suite(const SuiteConfig& cfg) {
  return run_suite(Suite::kOracle, cfg);
}
SuiteReport angle_suite(const SuiteConfig& cfg) {
  return run_suite(Suite::kAngle, cfg);
}

}  // namespace hkgeom
