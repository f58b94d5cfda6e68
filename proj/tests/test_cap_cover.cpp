#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "shadow/cap_cover.hpp"
#include "shadow/constructions.hpp"

namespace shadow {
namespace {

using testing::Gen;

Vec planar(double theta) { return Vec(std::cos(theta), std::sin(theta)); }

// Ball at unit distance from the origin inducing the given cap.
Ball ball_for(const Cap& c, BallMode mode = BallMode::closed) {
  return Ball(Point(c.axis()), std::sin(c.half_angle()), mode);
}

std::vector<Ball> balls_for(const CapFamily& f) {
  std::vector<Ball> out;
  for (const Cap& c : f.caps) out.push_back(ball_for(c, f.mode));
  return out;
}

bool misses_all(const Point& x0, const Vec& u, const std::vector<Ball>& balls) {
  for (const Ball& b : balls) {
    if (line_hits_ball(x0, u, b)) return false;
  }
  return true;
}

CapFamily random_family(Gen& g, int n, double lo = 0.1, double hi = 1.4) {
  CapFamily f;
  for (int i = 0; i < n; ++i) f.caps.emplace_back(g.unit(3), g.uniform(lo, hi));
  return f;
}

TEST(CapArc, SameCapIsFullCircle) {
  const Cap c(Vec(0.3, -0.2, 0.9), 0.7);
  const auto arc = cap_arc_on_circle(c, c);
  ASSERT_TRUE(arc);
  EXPECT_NEAR(arc->length(), kTwoPi, 1e-15);
}

TEST(CapArc, AntipodalQuarterCapsAreEmpty) {
  EXPECT_FALSE(cap_arc_on_circle(Cap(Vec(0, 0, 1), kPi / 4), Cap(Vec(0, 0, -1), kPi / 4)));
}

TEST(CapArc, RejectsPlanarCaps) {
  EXPECT_THROW(cap_arc_on_circle(Cap(Vec(1, 0), 0.5), Cap(Vec(0, 1), 0.5)), Error);
}

// Endpoints against the sign changes of p(t).a' - cos(alpha') on a 1e6 grid.
TEST(CapArc, EndpointsMatchSignScan) {
  const Cap on(Vec(0, 0, 1), kPi / 3);
  const Cap other(Vec(1, 0, 0), kPi / 3);
  const auto arc = cap_arc_on_circle(on, other);
  ASSERT_TRUE(arc);
  const int n = 1000000;
  const double h = kTwoPi / n;
  std::vector<double> crossings;
  auto f = [&](double t) { return dot(point_on_cap_circle(on, t), other.axis()) - std::cos(other.half_angle()); };
  double prev = f(0);
  for (int i = 1; i <= n; ++i) {
    const double cur = f(i * h);
    if ((prev < 0) != (cur < 0)) crossings.push_back((i - 0.5) * h);
    prev = cur;
  }
  ASSERT_EQ(crossings.size(), 2u);
  auto near = [&](double t, double s) { return std::abs(std::remainder(t - s, kTwoPi)) <= h; };
  EXPECT_TRUE((near(arc->lo, crossings[0]) && near(arc->hi, crossings[1])) ||
              (near(arc->lo, crossings[1]) && near(arc->hi, crossings[0])));
  EXPECT_GT(f(arc->midpoint()), 0);
}

TEST(CapArc, RandomAgainstPointwiseMembership) {
  Gen g(21);
  for (int i = 0; i < 2000; ++i) {
    const Cap a(g.unit(3), g.uniform(0.05, 1.5)), b(g.unit(3), g.uniform(0.05, 1.5));
    const auto arc = cap_arc_on_circle(a, b);
    for (int s = 0; s < 64; ++s) {
      const double t = g.uniform(0, kTwoPi);
      const double slack = dot(point_on_cap_circle(a, t), b.axis()) - std::cos(b.half_angle());
      if (std::abs(slack) < 1e-9) continue;
      EXPECT_EQ(slack > 0, arc && arc->contains(t, 0.0));
    }
  }
}

TEST(Projective2d, QuarterTilingClosed) {
  const CapFamily f{{Cap(planar(0), kPi / 4), Cap(planar(kPi / 2), kPi / 4)}, BallMode::closed};
  const Verdict v = covers_projective_2d(f);
  EXPECT_TRUE(v.covered);
  EXPECT_NEAR(v.margin, 0.0, 1e-12);
}

TEST(Projective2d, QuarterTilingOpenEscapesAtJunction) {
  const CapFamily f{{Cap(planar(0), kPi / 4), Cap(planar(kPi / 2), kPi / 4)}, BallMode::open};
  const Verdict v = covers_projective_2d(f);
  EXPECT_FALSE(v.covered);
  ASSERT_TRUE(v.witness);
  const double w = std::fmod(std::atan2(v.witness->y(), v.witness->x()) + kTwoPi, kPi);
  EXPECT_TRUE(std::abs(w - kPi / 4) < 1e-9 || std::abs(w - 3 * kPi / 4) < 1e-9);
  EXPECT_TRUE(misses_all(Vec(0, 0), *v.witness, balls_for(f)));
}

TEST(Projective2d, ThreeCapsWithOverlap) {
  CapFamily f;
  for (int i = 0; i < 3; ++i) f.caps.emplace_back(planar(i * kPi / 3), kPi / 6 + 0.01);
  const Verdict v = covers_projective_2d(f);
  EXPECT_TRUE(v.covered);
  EXPECT_NEAR(v.margin, 0.02, 1e-12);
  const auto balls = balls_for(f);
  EXPECT_FALSE(find_escape_sampling(Vec(0, 0), balls, 1000000));
  for (int drop = 0; drop < 3; ++drop) {
    CapFamily g = f;
    g.caps.erase(g.caps.begin() + drop);
    const Verdict u = covers_projective_2d(g);
    EXPECT_FALSE(u.covered);
    ASSERT_TRUE(u.witness);
    EXPECT_TRUE(misses_all(Vec(0, 0), *u.witness, balls_for(g)));
    EXPECT_TRUE(find_escape_sampling(Vec(0, 0), balls_for(g), 1000000));
  }
}

TEST(SphereExact, SingleCapUncovered) {
  for (double a : {0.1, 0.8, 1.5}) {
    const CapFamily f{{Cap(Vec(0, 0, 1), a)}, BallMode::closed};
    const Verdict v = covers_sphere_exact(f);
    EXPECT_FALSE(v.covered);
    ASSERT_TRUE(v.witness);
    EXPECT_LT(std::abs(v.witness->z()), std::cos(a));
  }
}

TEST(SphereExact, EmptyFamilyThrowsInDispatcher) {
  EXPECT_THROW(covers(CapFamily{}), Error);
}

TEST(SphereExact, OctantCapsCoverWithKnownMargin) {
  // Three caps on the coordinate axes need half-angle acos(1/sqrt 3) to reach
  // the cube diagonals.
  const double need = std::acos(1 / std::sqrt(3.0));
  const CapFamily f{{Cap(Vec(1, 0, 0), need + 0.05), Cap(Vec(0, 1, 0), need + 0.05),
                     Cap(Vec(0, 0, 1), need + 0.05)},
                    BallMode::closed};
  const Verdict v = covers_sphere_exact(f);
  EXPECT_TRUE(v.covered);
  EXPECT_NEAR(v.margin, 0.05, 1e-9);
  CapFamily short_by = f;
  for (Cap& c : short_by.caps) c = Cap(c.axis(), need - 1e-4);
  const Verdict u = covers_sphere_exact(short_by);
  EXPECT_FALSE(u.covered);
  ASSERT_TRUE(u.witness);
  EXPECT_TRUE(misses_all(Vec(0, 0, 0), *u.witness, balls_for(short_by)));
}

TEST(SphereExact, ExactTouchOpenVersusClosed) {
  const double need = std::acos(1 / std::sqrt(3.0));
  CapFamily f{{Cap(Vec(1, 0, 0), need), Cap(Vec(0, 1, 0), need), Cap(Vec(0, 0, 1), need)},
              BallMode::closed};
  EXPECT_TRUE(covers_sphere_exact(f).covered);
  f.mode = BallMode::open;
  const Verdict v = covers_sphere_exact(f);
  EXPECT_FALSE(v.covered);
  ASSERT_TRUE(v.witness);
  // The escape is at a cube diagonal, on the common boundary.
  EXPECT_NEAR(std::abs(v.witness->x()), 1 / std::sqrt(3.0), 1e-6);
}

TEST(SphereExact, FourBallLayoutCoveredAndNeedsAllBalls) {
  const ShadowConfig cfg = lemma2_unit_sphere(Lemma2Params{});
  const Verdict v = covers_sphere_exact(caps_of(cfg.x0, cfg.balls));
  EXPECT_TRUE(v.covered);
  EXPECT_GT(v.margin, 0);
  EXPECT_FALSE(find_escape_sampling(cfg.x0, cfg.balls, 1000000));
  for (std::size_t drop = 0; drop < cfg.balls.size(); ++drop) {
    auto rest = cfg.balls;
    rest.erase(rest.begin() + static_cast<long>(drop));
    const Verdict u = covers_sphere_exact(caps_of(cfg.x0, rest));
    EXPECT_FALSE(u.covered);
    ASSERT_TRUE(u.witness);
    EXPECT_TRUE(misses_all(cfg.x0, *u.witness, rest));
  }
}

// One-sided agreement with sampling and witness validity.
TEST(SphereExact, AgreesWithSamplingOracle) {
  Gen g(22);
  int covered = 0;
  for (int i = 0; i < 200; ++i) {
    const CapFamily f = random_family(g, g.integer(2, 8));
    const auto balls = balls_for(f);
    const Verdict v = covers_sphere_exact(f);
    if (v.covered) {
      ++covered;
      if (v.margin >= 1e-6) {
        EXPECT_FALSE(find_escape_sampling(Vec(0, 0, 0), balls, 20000, i));
      }
    } else {
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(misses_all(Vec(0, 0, 0), *v.witness, balls));
      EXPECT_EQ(v.margin, 0.0);
    }
  }
  EXPECT_GT(covered, 10);
}

TEST(SphereExact, AntipodalSymmetry) {
  Gen g(23);
  for (int i = 0; i < 200; ++i) {
    CapFamily f = random_family(g, g.integer(2, 8));
    const Verdict a = covers_sphere_exact(f);
    for (Cap& c : f.caps) c = c.mirrored();
    const Verdict b = covers_sphere_exact(f);
    EXPECT_EQ(a.covered, b.covered);
    EXPECT_NEAR(a.margin, b.margin, 1e-9);
  }
}

TEST(SphereExact, RotationEquivariance) {
  Gen g(24);
  for (int i = 0; i < 200; ++i) {
    CapFamily f = random_family(g, g.integer(2, 8));
    const Verdict a = covers_sphere_exact(f);
    const Rotation3 r = g.rotation();
    for (Cap& c : f.caps) c = Cap(r.apply(c.axis()), c.half_angle());
    const Verdict b = covers_sphere_exact(f);
    EXPECT_EQ(a.covered, b.covered);
    EXPECT_NEAR(a.margin, b.margin, 1e-9);
    if (!b.covered) {
      ASSERT_TRUE(b.witness);
      EXPECT_TRUE(misses_all(Vec(0, 0, 0), *b.witness, balls_for(f)));
    }
  }
}

TEST(SphereExact, MonotoneInHalfAngle) {
  Gen g(25);
  for (int i = 0; i < 300; ++i) {
    CapFamily f = random_family(g, g.integer(2, 8));
    const bool before = covers_sphere_exact(f).covered;
    auto& c = f.caps[static_cast<std::size_t>(g.integer(0, static_cast<int>(f.caps.size()) - 1))];
    c = Cap(c.axis(), std::min(c.half_angle() + g.uniform(0, 0.3), 1.55));
    if (before) {
      EXPECT_TRUE(covers_sphere_exact(f).covered);
    }
  }
}

TEST(SphereExact, CoplanarAxesNeedProjectiveCoverage) {
  Gen g(26);
  for (int i = 0; i < 300; ++i) {
    CapFamily f3, f2;
    const int n = g.integer(2, 8);
    for (int j = 0; j < n; ++j) {
      const double th = g.uniform(0, kTwoPi), a = g.uniform(0.1, 1.5);
      f3.caps.emplace_back(Vec(std::cos(th), std::sin(th), 0.0), a);
      f2.caps.emplace_back(planar(th), a);
    }
    if (covers_sphere_exact(f3).covered) {
      EXPECT_TRUE(covers_projective_2d(f2).covered);
    }
  }
}

TEST(Sampling, EmptyListEscapesImmediately) {
  EXPECT_TRUE(find_escape_sampling(Vec(0, 0, 0), {}, 1000));
  EXPECT_TRUE(find_escape_sampling(Vec(0, 0), {}, 1000));
}

TEST(Sampling, DistantSmallBallEscapesQuickly) {
  const std::vector<Ball> balls{Ball(Vec(10, 0, 0), 0.1)};
  EXPECT_TRUE(find_escape_sampling(Vec(0, 0, 0), balls, 100));
}

TEST(Sampling, LayoutIsUnitAndSeeded) {
  const DirectionLayout a(3, 1000, 0), b(3, 1000, 7);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].norm(), 1.0, 1e-12);
    EXPECT_NEAR(b[i].norm(), 1.0, 1e-12);
  }
  EXPECT_FALSE(a[5] == b[5]);
}

}  // namespace
}  // namespace shadow
