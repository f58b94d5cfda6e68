#include "shadow/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace shadow {

namespace {

// Sphere center of the construction frame; the large ball sits at the origin.
const Vec kFrameCenter(0.0, -1.0, 0.0);

struct Frame {
  Vec ex, ey, ez;
};

Frame frame_for(const Vec& principal) {
  const Vec ey = principal.normalized();
  const Vec helper = std::abs(ey[0]) < 0.9 ? Vec(1.0, 0.0, 0.0) : Vec(0.0, 0.0, 1.0);
  const Vec ex = (helper - dot(helper, ey) * ey).normalized();
  return Frame{ex, ey, cross(ex, ey)};
}

void check_layout_params(const Lemma2Params& p) {
  if (p.sphere.dim() != 3) throw Error(Errc::invalid_params, "four-ball layout needs a 3D sphere");
  if (p.principal.dim() != 3) throw Error(Errc::invalid_params, "principal axis must be 3D");
  if (!(p.eps_level >= 0.0) || !std::isfinite(p.eps_level)) {
    throw Error(Errc::invalid_params, "eps_level must be non-negative");
  }
  if (!(p.delta >= 0.0) || !(p.delta < 1.0)) {
    throw Error(Errc::invalid_params, "delta must lie in [0, 1)");
  }
  const double level = Lemma2Constants::compute().y_prime - p.eps_level;
  if (!(level > -2.0)) {
    throw Error(Errc::invalid_params, "side-ball plane no longer cuts the sphere");
  }
}

}  // namespace

Lemma2Constants Lemma2Constants::compute() {
  Lemma2Constants c{};
  c.y_prime = solve_level_for_angle(kPi / 3);
  c.x_prime = std::sqrt(1.0 - (c.y_prime + 1.0) * (c.y_prime + 1.0));
  c.r_prime = std::hypot(c.x_prime, c.y_prime) - 1.0;
  c.side_a = std::sqrt(3.0) * c.x_prime;
  return c;
}

double sector_sin2_from_center_xy(double x, double y) {
  if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw Error(Errc::invalid_argument, "sector relation requires finite x > 0 and y");
  }
  return (x * x - 2.0 * y - 2.0 * std::hypot(x, y)) / (x * x);
}

double angle_from_center_xy(double x, double y) {
  double s2 = sector_sin2_from_center_xy(x, y);
  if (s2 < 0.0) {
    if (s2 < -1e-14 * (1.0 + (std::abs(y) + 1.0) / (x * x))) {
      throw Error(Errc::no_intersection_with_sigma,
                  "tangent ball centered at (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") does not reach the plane y = -1");
    }
    s2 = 0.0;
  }
  return 2.0 * std::asin(std::min(1.0, std::sqrt(s2)));
}

double sector_sin2_on_sphere(double y) {
  if (!(y > -2.0 && y < 0.0)) {
    throw Error(Errc::invalid_argument, "sector formula requires -2 < y < 0");
  }
  return (-y * y - 4.0 * y - 2.0 * std::sqrt(-2.0 * y)) / (-y * y - 2.0 * y);
}

double solve_level_for_angle(double phi) {
  if (!(phi >= 0.0 && phi < kPi)) {
    throw Error(Errc::invalid_argument, "sector angle must lie in [0, pi)");
  }
  const double c = std::cos(0.5 * phi);
  const double a = c * c;
  const double y = (-(a + 2.0) + std::sqrt(a * a + 4.0 * a)) / a;
  if (!(y > -2.0 && y < 0.0)) {
    throw Error(Errc::no_root_in_range, "level for sector angle leaves (-2, 0)");
  }
  // The quadratic comes from squaring; reject a root of the squared form only.
  const double s = std::sin(0.5 * phi);
  if (std::abs(sector_sin2_on_sphere(y) - s * s) > 1e-9) {
    throw Error(Errc::no_root_in_range, "quadratic root does not satisfy the sector relation");
  }
  return y;
}

ShadowConfig lemma2_layout(const Lemma2Params& p) {
  check_layout_params(p);
  const Lemma2Constants k = Lemma2Constants::compute();
  const double level = k.y_prime - p.eps_level;
  const double ring = std::sqrt(std::max(0.0, 1.0 - (level + 1.0) * (level + 1.0)));
  const double side_radius = std::hypot(ring, level) - 1.0;

  const Frame f = frame_for(p.principal);
  const double rho = p.sphere.radius();
  const Point& c = p.sphere.center();
  auto to_world = [&](const Vec& q) {
    const Vec d = q - kFrameCenter;
    return c + rho * (d[0] * f.ex + d[1] * f.ey + d[2] * f.ez);
  };

  ShadowConfig cfg{c, {}};
  const double big_radius = (1.0 - p.delta) * rho;
  cfg.balls.emplace_back(to_world(Vec(0.0, 0.0, 0.0)), big_radius, p.mode);
  for (int i = 0; i < 3; ++i) {
    const double theta = p.roll + 2.0 * kPi * i / 3.0;
    const Vec q(ring * std::cos(theta), level, ring * std::sin(theta));
    cfg.balls.emplace_back(to_world(q), side_radius * rho, p.mode);
  }
  return cfg;
}

ShadowConfig lemma2_unit_sphere(const Lemma2Params& p) {
  if (!(p.eps_level > 0.0)) throw Error(Errc::invalid_params, "eps_level must be positive");
  if (!(p.delta > 0.0 && p.delta < 1.0)) {
    throw Error(Errc::invalid_params, "delta must lie in (0, 1)");
  }
  ShadowConfig cfg = lemma2_layout(p);
  const double rho = p.sphere.radius();
  for (std::size_t i = 0; i < cfg.balls.size(); ++i) {
    const Ball& b = cfg.balls[i];
    if (!(b.radius() < rho) || !(dist(cfg.x0, b.center()) > b.radius())) {
      throw Error(Errc::invalid_params, "ball " + std::to_string(i) + " is too large");
    }
    for (std::size_t j = i + 1; j < cfg.balls.size(); ++j) {
      const Ball& o = cfg.balls[j];
      if (!(dist(b.center(), o.center()) > b.radius() + o.radius())) {
        throw Error(Errc::invalid_params, "balls " + std::to_string(i) + " and " +
                                              std::to_string(j) + " intersect");
      }
    }
  }
  CapFamily caps = caps_of(cfg.x0, cfg.balls);
  caps.mode = BallMode::closed;
  const Verdict v = covers_sphere_exact(caps);
  if (!v.covered || !(v.margin > 0.0)) {
    throw Error(Errc::invalid_params, "layout does not cover the direction sphere with a margin");
  }
  return cfg;
}

double lemma2_margin(const Lemma2Params& p) {
  try {
    const ShadowConfig cfg = lemma2_unit_sphere(p);
    CapFamily caps = caps_of(cfg.x0, cfg.balls);
    caps.mode = BallMode::closed;
    return covers_sphere_exact(caps).margin;
  } catch (const Error&) {
    return -1.0;
  }
}

Lemma2Tuning tune_lemma2_detailed() {
  // delta >= 0.01 keeps a visible gap between the large ball and the side
  // balls; smaller delta always scores higher and would drive it to zero.
  constexpr double kEpsLo = 0.005, kEpsHi = 0.5;
  constexpr double kDeltaLo = 0.01, kDeltaHi = 0.2;
  constexpr int kEpsSteps = 40, kDeltaSteps = 20;

  Lemma2Params best;
  double best_margin = -1.0;
  auto consider = [&](double eps, double delta) {
    Lemma2Params p;
    p.eps_level = eps;
    p.delta = delta;
    const double m = lemma2_margin(p);
    if (m > best_margin) {
      best_margin = m;
      best = p;
    }
    return m;
  };
  for (int i = 0; i <= kEpsSteps; ++i) {
    for (int j = 0; j <= kDeltaSteps; ++j) {
      consider(kEpsLo + (kEpsHi - kEpsLo) * i / kEpsSteps,
               kDeltaLo + (kDeltaHi - kDeltaLo) * j / kDeltaSteps);
    }
  }

  // Coordinate-wise golden-section refinement around the grid optimum.
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double eps_step = (kEpsHi - kEpsLo) / kEpsSteps;
  double delta_step = (kDeltaHi - kDeltaLo) / kDeltaSteps;
  for (int round = 0; round < 4; ++round) {
    for (int axis = 0; axis < 2; ++axis) {
      const double center = axis == 0 ? best.eps_level : best.delta;
      const double step = axis == 0 ? eps_step : delta_step;
      const double lo_bound = axis == 0 ? kEpsLo : kDeltaLo;
      const double hi_bound = axis == 0 ? kEpsHi : kDeltaHi;
      double lo = std::max(lo_bound, center - step);
      double hi = std::min(hi_bound, center + step);
      const double fixed_eps = best.eps_level, fixed_delta = best.delta;
      auto eval = [&](double t) {
        return axis == 0 ? consider(t, fixed_delta) : consider(fixed_eps, t);
      };
      double a = hi - golden * (hi - lo);
      double b = lo + golden * (hi - lo);
      double fa = eval(a), fb = eval(b);
      for (int it = 0; it < 30; ++it) {
        if (fa >= fb) {
          hi = b;
          b = a;
          fb = fa;
          a = hi - golden * (hi - lo);
          fa = eval(a);
        } else {
          lo = a;
          a = b;
          fa = fb;
          b = lo + golden * (hi - lo);
          fb = eval(b);
        }
      }
    }
    eps_step *= 0.5;
    delta_step *= 0.5;
  }

  if (best_margin < 1e-3) {
    throw Error(Errc::search_failed, "no four-ball layout reached margin 1e-3");
  }
  return Lemma2Tuning{best, best_margin};
}

Lemma2Params tune_lemma2() { return tune_lemma2_detailed().params; }

ShadowConfig two_balls_unit_circle(double margin_angle, BallMode mode) {
  if (!(margin_angle >= 0.0 && margin_angle < kPi / 8)) {
    throw Error(Errc::invalid_params, "margin angle must lie in [0, pi/8)");
  }
  const double big_half = 3.0 * kPi / 8.0 + 0.5 * margin_angle;
  const double small_half = kPi / 8.0 + 0.5 * margin_angle;
  const double r_big = std::sin(big_half);
  const double r_small = std::sin(small_half);
  if (!(r_big + r_small < std::sqrt(2.0))) {
    throw Error(Errc::invalid_params, "the two disks would overlap");
  }
  ShadowConfig cfg{Point(0.0, 0.0), {}};
  cfg.balls.emplace_back(Point(1.0, 0.0), r_big, mode);
  cfg.balls.emplace_back(Point(0.0, 1.0), r_small, mode);
  return cfg;
}

}  // namespace shadow
