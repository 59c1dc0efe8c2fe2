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

#include <cmath>
#include <numbers>
#include <random>

#include "hkgeom/angle.h"
#include "hkgeom/geodesic.h"

namespace hkgeom {
namespace {

using std::numbers::pi;

TangentRay ray(double x, double y, double dx, double dy) {
  const double n = std::hypot(dx, dy);
  return {Point(x, y), {dx / n, dy / n}};
}

TEST(TangentRayTest, Examples) {
  const Model m(2.0);
  const EllipticLine e(1.5, 2.5);
  const TangentRay apex = tangent_ray(m, e, Point(1.5, 1.25), true);
  EXPECT_NEAR(apex.dir.x, 1.0, 1e-15);
  EXPECT_NEAR(apex.dir.y, 0.0, 1e-15);

  const TangentRay up = tangent_ray(Model(0.5), VerticalLine{0}, Point(0, 1), true);
  EXPECT_EQ(up.dir.x, 0.0);
  EXPECT_EQ(up.dir.y, 1.0);
  const TangentRay down =
      tangent_ray(Model(0.5), VerticalLine{0}, Point(0, 1), false);
  EXPECT_EQ(down.dir.y, -1.0);

  // (4, -1.5) / |(4, -1.5)|.
  const TangentRay r = tangent_ray(m, e, Point(3, 1), true);
  const double n = std::hypot(4.0, 1.5);
  EXPECT_NEAR(r.dir.x, 4.0 / n, 1e-15);
  EXPECT_NEAR(r.dir.y, -1.5 / n, 1e-15);
  EXPECT_NEAR(r.dir.x, 0.93633, 1e-5);
  EXPECT_NEAR(r.dir.y, -0.35112, 1e-5);

  EXPECT_THROW(tangent_ray(m, e, Point(0, 2), true), GeometryError);
}

TEST(TangentRayTest, OrthogonalToGradientProperty) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> uc(-10, 10), ua(0.1, 10), ut(-5, 5);
  for (double k : {0.5, 1.0, 2.0, 5.0}) {
    const Model m(k);
    for (int i = 0; i < 1000; ++i) {
      const EllipticLine e(uc(gen), ua(gen));
      const Point p = ruler_inverse(m, e, ut(gen));
      const TangentRay r = tangent_ray(m, e, p, true);
      const double gx = 2 * (p.x() - e.c()), gy = 2 * k * k * p.y();
      EXPECT_NEAR((r.dir.x * gx + r.dir.y * gy) / std::hypot(gx, gy), 0.0,
                  1e-12);
      EXPECT_NEAR(std::hypot(r.dir.x, r.dir.y), 1.0, 1e-15);
    }
  }
}

TEST(EuclideanAngleTest, Examples) {
  for (double k : {0.5, 2.0}) {
    const Model m(k);
    const EllipticLine e(1.5, 2.5);
    const Point apex = ruler_inverse(m, e, 0.0);
    const TangentRay h = tangent_ray(m, e, apex, true);
    const TangentRay v = tangent_ray(m, VerticalLine{1.5}, apex, true);
    EXPECT_NEAR(euclidean_angle(m, h, v), pi / 2, 1e-15);
    EXPECT_EQ(euclidean_angle(m, h, h), 0.0);
    EXPECT_NEAR(euclidean_angle(m, h, tangent_ray(m, e, apex, false)), pi,
                1e-15);
  }
}

TEST(EuclideanAngleTest, BaseMismatch) {
  try {
    euclidean_angle(Model(1.0), ray(0, 1, 1, 0), ray(0, 2, 1, 0));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBaseMismatch);
  }
  EXPECT_THROW(pullback_angle(Model(1.0), ray(0, 1, 1, 0), ray(0, 2, 1, 0)),
               GeometryError);
}

TEST(PullbackAngleTest, Examples) {
  for (double k : {0.5, 2.0, 10.0}) {
    EXPECT_NEAR(pullback_angle(Model(k), ray(0, 1, 1, 0), ray(0, 1, 0, 1)),
                pi / 2, 1e-15);
  }
  const Model m(2.0);
  const TangentRay diag = ray(0, 1, 1, 1);
  const TangentRay horiz = ray(0, 1, 1, 0);
  EXPECT_NEAR(euclidean_angle(m, diag, horiz), pi / 4, 1e-15);
  EXPECT_NEAR(pullback_angle(m, diag, horiz), std::atan(2.0), 1e-15);
  EXPECT_NEAR(std::atan(2.0), 1.10715, 1e-5);
  EXPECT_EQ(angle_between(m, diag, horiz, AngleMeasure::kPullback),
            pullback_angle(m, diag, horiz));
  EXPECT_EQ(angle_between(m, diag, horiz, AngleMeasure::kEuclidean),
            euclidean_angle(m, diag, horiz));
}

TEST(PullbackAngleTest, AgreesAtKOneProperty) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(-1, 1);
  const Model m(1.0);
  for (int i = 0; i < 1000; ++i) {
    const TangentRay r1 = ray(0, 1, u(gen), u(gen));
    const TangentRay r2 = ray(0, 1, u(gen), u(gen));
    EXPECT_EQ(pullback_angle(m, r1, r2), euclidean_angle(m, r1, r2));
  }
}

TEST(TriangleAnglesTest, ClassicalTriangle) {
  const Model m(1.0);
  const Point a(0, 1), b(0, std::exp(1.0)), c(1, std::sqrt(2.0));
  const auto pb = triangle_angles(m, a, b, c, AngleMeasure::kPullback);
  const auto eu = triangle_angles(m, a, b, c, AngleMeasure::kEuclidean);
  for (int i = 0; i < 3; ++i) {
    EXPECT_GT(pb[i], 0.0);
    EXPECT_LT(pb[i], pi);
    EXPECT_EQ(pb[i], eu[i]);
  }
  EXPECT_LT(pb[0] + pb[1] + pb[2], pi);
}

TEST(TriangleAnglesTest, Degenerate) {
  const Model m(2.0);
  try {
    triangle_angles(m, Point(0, 1), Point(1.5, 1.25), Point(3, 1),
                    AngleMeasure::kPullback);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateTriangle);
  }
  EXPECT_THROW(triangle_angles(m, Point(0, 1), Point(0, 1), Point(3, 1),
                               AngleMeasure::kEuclidean),
               GeometryError);
}

TEST(TriangleAnglesTest, PullbackSumBelowPiProperty) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> ux(-10, 10), uy(0.05, 20);
  for (double k : {0.5, 1.0, 2.0, 5.0}) {
    const Model m(k);
    for (int i = 0; i < 1000; ++i) {
      const Point a(ux(gen), uy(gen)), b(ux(gen), uy(gen)), c(ux(gen), uy(gen));
      const auto t = triangle_angles(m, a, b, c, AngleMeasure::kPullback);
      for (double v : t) {
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, pi);
      }
      EXPECT_LT(t[0] + t[1] + t[2], pi);
    }
  }
}

}  // namespace
}  // namespace hkgeom
