#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "shadow/geometry.hpp"

namespace shadow {
namespace {

using testing::Gen;
using testing::sphere_pair;

TEST(Dist, Examples) {
  EXPECT_DOUBLE_EQ(dist(Vec(0, 0, 0), Vec(3, 0, 0)), 3.0);
  EXPECT_DOUBLE_EQ(dist(Vec(1.5, -2, 7), Vec(1.5, -2, 7)), 0.0);
  EXPECT_DOUBLE_EQ(dist(Vec(1, 1), Vec(4, 5)), 5.0);
}

TEST(Dist, DimensionMismatchThrows) {
  try {
    dist(Vec(0, 0), Vec(0, 0, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::dimension_mismatch);
  }
}

TEST(Dist, Symmetric) {
  Gen g(1);
  for (int i = 0; i < 1000; ++i) {
    const int dim = g.integer(2, 3);
    const Point a = g.point(dim, 10), b = g.point(dim, 10);
    EXPECT_EQ(dist(a, b), dist(b, a));
  }
}

TEST(Ball, RejectsBadInput) {
  EXPECT_THROW(Ball(Vec(0, 0), 0.0), Error);
  EXPECT_THROW(Ball(Vec(0, 0), -1.0), Error);
  EXPECT_THROW(Ball(Vec(0, 0), NAN), Error);
  EXPECT_THROW(Vec::from({1.0, INFINITY}), Error);
  EXPECT_THROW(Cap(Vec(0, 0, 1), kPi / 2), Error);
  EXPECT_THROW(Cap(Vec(0, 0, 0), 0.3), Error);
  EXPECT_THROW(HomothetyCoeff(0.0), Error);
}

TEST(InteriorsDisjoint, Examples) {
  EXPECT_TRUE(interiors_disjoint(Ball(Vec(0, 0, 0), 1), Ball(Vec(3, 0, 0), 2)));
  EXPECT_FALSE(interiors_disjoint(Ball(Vec(0, 0, 0), 1), Ball(Vec(2.9, 0, 0), 2)));
}

// Searches for a point strictly inside both balls along the segment of
// centers (the only place a common interior point must show up).
bool common_interior_point(const Ball& a, const Ball& b, int steps) {
  for (int i = 0; i <= steps; ++i) {
    const double s = static_cast<double>(i) / steps;
    const Point p = a.center() + s * (b.center() - a.center());
    if (dist(p, a.center()) < a.radius() && dist(p, b.center()) < b.radius()) return true;
  }
  return false;
}

TEST(InteriorsDisjoint, AgreesWithMembershipSampling) {
  Gen g(2);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const int dim = g.integer(2, 3);
    const Ball a(g.point(dim, 3), g.uniform(0.1, 2));
    const Ball b(g.point(dim, 3), g.uniform(0.1, 2));
    const double gap = dist(a.center(), b.center()) - a.radius() - b.radius();
    if (std::abs(gap) < 1e-3) continue;  // sampling resolution
    EXPECT_EQ(interiors_disjoint(a, b), !common_interior_point(a, b, 20000));
    ++checked;
  }
  EXPECT_GT(checked, 9000);
}

TEST(SetsDisjoint, Examples) {
  EXPECT_FALSE(sets_disjoint(Ball(Vec(0, 0, 0), 1), Ball(Vec(3, 0, 0), 2)));
  EXPECT_TRUE(sets_disjoint(Ball(Vec(0, 0, 0), 1, BallMode::open),
                            Ball(Vec(3, 0, 0), 2, BallMode::open)));
  EXPECT_TRUE(sets_disjoint(Ball(Vec(0, 0, 0), 1), Ball(Vec(3.0001, 0, 0), 2)));
}

TEST(Homothety, Examples) {
  const Ball b(Vec(0.3, 1, -2), 0.5);
  EXPECT_EQ(homothety_ball(b, Vec(7, 7, 7), HomothetyCoeff(1.0)), b);
  const Ball s = homothety_ball(Ball(Vec(0, 1, 0), 0.5), Vec(0, 0, 0), HomothetyCoeff(2.0));
  EXPECT_EQ(s.center(), Vec(0, 2, 0));
  EXPECT_DOUBLE_EQ(s.radius(), 1.0);
}

TEST(Homothety, Composition) {
  Gen g(3);
  for (int i = 0; i < 10000; ++i) {
    const int dim = g.integer(2, 3);
    const Ball b(g.point(dim, 5), g.uniform(0.01, 3));
    const Point c = g.point(dim, 5);
    const double k1 = g.uniform(0.1, 5), k2 = g.uniform(0.1, 5);
    const Ball twice = homothety_ball(homothety_ball(b, c, HomothetyCoeff(k1)), c, HomothetyCoeff(k2));
    const Ball once = homothety_ball(b, c, HomothetyCoeff(k1 * k2));
    const double scale = 1.0 + dist(b.center(), c) * k1 * k2;
    EXPECT_LE(dist(twice.center(), once.center()), 1e-12 * scale);
    EXPECT_NEAR(twice.radius(), once.radius(), 1e-12 * scale);
  }
}

TEST(CapOfBall, Examples) {
  const Cap c = cap_of_ball(Vec(0, 0, 0), Ball(Vec(0, 0, 2), 1));
  EXPECT_NEAR(c.half_angle(), kPi / 6, 1e-15);
  EXPECT_EQ(c.axis(), Vec(0, 0, 1));
  const Cap d = cap_of_ball(Vec(0, -1, 0), Ball(Vec(0, 0, 0), 0.99));
  EXPECT_NEAR(d.half_angle(), std::asin(0.99), 1e-15);
}

TEST(CapOfBall, PointInsideThrows) {
  try {
    cap_of_ball(Vec(0, 0), Ball(Vec(0.5, 0), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::point_inside_ball);
  }
  EXPECT_THROW(cap_of_ball(Vec(1, 0), Ball(Vec(0, 0), 1)), Error);
}

// Independent oracle: the half-angle is where a rotated line from x0 becomes
// tangent, i.e. where its distance to the center equals r.
TEST(CapOfBall, TangentLineOracle) {
  Gen g(4);
  for (int i = 0; i < 2000; ++i) {
    const Point x0 = g.point(3, 3);
    const Vec axis = g.unit(3);
    const double d = g.uniform(0.5, 5), r = g.uniform(0.01, 0.99) * d;
    const Ball b(x0 + d * axis, r);
    const Cap cap = cap_of_ball(x0, b);
    Vec perp = cross(axis, g.unit(3));
    perp = perp.normalized();
    double lo = 0, hi = kPi / 2;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      const Vec u = std::cos(mid) * axis + std::sin(mid) * perp;
      (line_point_distance(x0, u, b.center()) <= r ? lo : hi) = mid;
    }
    EXPECT_NEAR(cap.half_angle(), lo, 1e-12);
    EXPECT_LE(dist(cap.axis(), axis), 1e-12);
  }
}

TEST(CapOfBall, InvariantUnderHomothetyAboutPoint) {
  Gen g(5);
  for (int i = 0; i < 10000; ++i) {
    const int dim = g.integer(2, 3);
    const Point x0 = g.point(dim, 3);
    const double d = g.uniform(0.1, 5);
    const Ball b(x0 + d * g.unit(dim), g.uniform(0.01, 0.99) * d);
    const double k = std::exp(g.uniform(-4, 4));
    const Cap c1 = cap_of_ball(x0, b);
    const Cap c2 = cap_of_ball(x0, homothety_ball(b, x0, HomothetyCoeff(k)));
    EXPECT_LE(dist(c1.axis(), c2.axis()), 1e-12);
    EXPECT_NEAR(c1.half_angle(), c2.half_angle(), 1e-12);
  }
}

TEST(LineHitsBall, Examples) {
  const Point o(0, 0, 0);
  EXPECT_TRUE(line_hits_ball(o, Vec(1, 0, 0), Ball(Vec(5, 0, 0), 1)));
  EXPECT_FALSE(line_hits_ball(o, Vec(1, 0, 0), Ball(Vec(0, 3, 0), 1)));
  EXPECT_TRUE(line_hits_ball(o, Vec(0, 1, 0), Ball(Vec(1, 0, 0), 1, BallMode::closed)));
  EXPECT_FALSE(line_hits_ball(o, Vec(0, 1, 0), Ball(Vec(1, 0, 0), 1, BallMode::open)));
}

TEST(LineHitsBall, SymmetricInDirectionSign) {
  Gen g(6);
  for (int i = 0; i < 10000; ++i) {
    const int dim = g.integer(2, 3);
    const Point x0 = g.point(dim, 3);
    const Ball b(g.point(dim, 3), g.uniform(0.1, 2), g.coin() ? BallMode::open : BallMode::closed);
    const Vec u = g.unit(dim);
    EXPECT_EQ(line_hits_ball(x0, u, b), line_hits_ball(x0, -u, b));
  }
}

// Pairs on a common sphere: pushing the smaller ball out (k >= 1), pulling the
// bigger one in (k <= 1), or both with k_small >= k_big keeps them apart.
class SpherePairProperty : public ::testing::TestWithParam<int> {};

TEST_P(SpherePairProperty, SmallerPushedOut) {
  const int dim = GetParam();
  Gen g(10 + dim);
  for (int i = 0; i < 20000; ++i) {
    const auto p = sphere_pair(g, dim);
    const HomothetyCoeff k(1.0 + std::exp(g.uniform(-10, 3)));
    ASSERT_TRUE(interiors_disjoint(homothety_ball(p.smaller, p.o, k), p.bigger));
  }
}

TEST_P(SpherePairProperty, BiggerPulledIn) {
  const int dim = GetParam();
  Gen g(20 + dim);
  for (int i = 0; i < 20000; ++i) {
    const auto p = sphere_pair(g, dim);
    const HomothetyCoeff k(g.uniform(1e-6, 1.0));
    ASSERT_TRUE(interiors_disjoint(homothety_ball(p.bigger, p.o, k), p.smaller));
  }
}

TEST_P(SpherePairProperty, OrderedCoefficients) {
  const int dim = GetParam();
  Gen g(30 + dim);
  for (int i = 0; i < 20000; ++i) {
    const auto p = sphere_pair(g, dim);
    const double k2 = std::exp(g.uniform(-5, 3));
    const double k1 = k2 * (1.0 + std::exp(g.uniform(-10, 2)));
    ASSERT_TRUE(interiors_disjoint(homothety_ball(p.smaller, p.o, HomothetyCoeff(k1)),
                                   homothety_ball(p.bigger, p.o, HomothetyCoeff(k2))));
  }
}

TEST_P(SpherePairProperty, DisplacedCenterDistanceIdentity) {
  const int dim = GetParam();
  Gen g(40 + dim);
  for (int i = 0; i < 10000; ++i) {
    const auto p = sphere_pair(g, dim);
    const double d = dist(p.bigger.center(), p.smaller.center());
    const double eps = g.uniform(0.0, 2.0) * p.rho;
    const Vec axis = (p.smaller.center() - p.o) / p.rho;
    const double d_eps = dist(p.bigger.center(), p.smaller.center() + eps * axis);
    const double sin_phi = d / (2 * p.rho);
    const double rhs = d * d + eps * eps + 2 * d * eps * sin_phi;
    EXPECT_NEAR(d_eps * d_eps, rhs, 1e-10 * rhs);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, SpherePairProperty, ::testing::Values(2, 3));

TEST(Rotation3, Basics) {
  Gen g(7);
  for (int i = 0; i < 1000; ++i) {
    const Vec a = g.unit(3), b = g.unit(3);
    const Rotation3 r = Rotation3::taking(a, b);
    EXPECT_LE(dist(r.apply(a), b), 1e-12);
    const Vec v = g.point(3, 2);
    EXPECT_NEAR(r.apply(v).norm(), v.norm(), 1e-12);
    EXPECT_LE(dist(r.transposed().apply(r.apply(v)), v), 1e-12);
  }
  EXPECT_LE(dist(Rotation3::taking(Vec(0, 0, 1), Vec(0, 0, -1)).apply(Vec(0, 0, 1)), Vec(0, 0, -1)),
            1e-12);
}

}  // namespace
}  // namespace shadow
