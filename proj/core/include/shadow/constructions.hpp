#pragma once

// Explicit ball placements on a sphere (3D, four balls) and on a circle
// (2D, two balls) whose lines through the center are all blocked.

#include <vector>

#include "shadow/cap_cover.hpp"
#include "shadow/geometry.hpp"

namespace shadow {

struct ShadowConfig {
  Point x0;
  std::vector<Ball> balls;

  int dim() const noexcept { return x0.dim(); }
  BallMode mode() const noexcept {
    return !balls.empty() && balls.front().mode() == BallMode::open ? BallMode::open
                                                                     : BallMode::closed;
  }
};

/// The fixed numbers of the four-ball layout, all in the unit-sphere frame
/// where the sphere is centered at (0, -1, 0) and the large ball sits at the
/// origin.
struct Lemma2Constants {
  double y_prime;   ///< level of the side-ball centers giving a pi/3 sector
  double x_prime;   ///< radius of the circle of side-ball centers at that level
  double r_prime;   ///< side-ball radius (tangent to the unit ball)
  double side_a;    ///< side of the inscribed regular triangle

  static Lemma2Constants compute();
};

struct Lemma2Params {
  /// Offset of the side-ball plane below the pi/3 level.
  double eps_level = 0.05;
  /// Relative decrease of the large ball's radius.
  double delta = 0.01;
  Sphere sphere{Point(0.0, 0.0, 0.0), 1.0};
  /// Image of the construction +y axis (direction from the center to the
  /// large ball).
  Vec principal{0.0, 1.0, 0.0};
  /// Rotation of the side balls about `principal`.
  double roll = 0.0;
  BallMode mode = BallMode::closed;
};

/// sin^2(phi/2) of the sector relation for a tangent ball centered at
/// (x, y, 0), x > 0. Negative when the ball misses the plane y = -1 (no
/// real angle exists there).
double sector_sin2_from_center_xy(double x, double y);

/// Full sector angle subtended from (0, -1, 0) by the trace, on the plane
/// y = -1, of the ball centered at (x, y, 0) tangent to the unit ball at the
/// origin. Throws no_intersection_with_sigma when the ball misses the plane.
double angle_from_center_xy(double x, double y);

/// Right-hand side of the closed form of sin^2(phi/2) for ball centers on
/// the unit sphere about (0, -1, 0), valid for -2 < y < 0.
double sector_sin2_on_sphere(double y);

/// Level y in (-2, 0) at which a sphere-centered tangent ball covers the
/// sector angle phi on the tangent plane. Throws no_root_in_range.
double solve_level_for_angle(double phi);

/// The four balls without any validity or coverage checks; accepts
/// eps_level >= 0 and delta in [0, 1) so the limiting layouts can be
/// inspected.
ShadowConfig lemma2_layout(const Lemma2Params& p);

/// lemma2_layout with strict parameter checks, pairwise disjointness and a
/// closed-mode coverage certificate. Throws invalid_params on any failure.
ShadowConfig lemma2_unit_sphere(const Lemma2Params& p);

struct Lemma2Tuning {
  Lemma2Params params;
  double margin = 0.0;
};

/// Deterministic grid-plus-refinement search over (eps_level, delta) for the
/// largest verifier margin on the unit sphere. Throws search_failed if the
/// best margin is below 1e-3.
Lemma2Tuning tune_lemma2_detailed();
Lemma2Params tune_lemma2();

/// Verifier margin of a parameter pair, or a negative value if the layout
/// is invalid (overlapping balls) or uncovered.
double lemma2_margin(const Lemma2Params& p);

/// Two disks on the unit circle about the origin with perpendicular axes
/// and half-angles 3pi/8 + m/2 and pi/8 + m/2. The bigger disk comes first.
ShadowConfig two_balls_unit_circle(double margin_angle, BallMode mode = BallMode::closed);

}  // namespace shadow
