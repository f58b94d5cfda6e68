#pragma once

// Decision procedures for "does every line through x0 meet some ball?",
// phrased as coverage of the direction sphere by antipodally symmetrized
// caps, plus an independent sampling oracle.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shadow/arcset.hpp"
#include "shadow/geometry.hpp"

namespace shadow {

struct CapFamily {
  std::vector<Cap> caps;
  BallMode mode = BallMode::closed;

  int dim() const noexcept { return caps.empty() ? 0 : caps.front().dim(); }
};

/// Coverage of one cap's boundary circle by the other caps.
struct CircleCoverage {
  std::size_t cap = 0;       ///< index into the symmetrized family
  double uncovered = 0.0;    ///< uncovered parameter length on the circle
};

struct Verdict {
  bool covered = false;
  /// 3D: largest uniform half-angle shrink that keeps the closed family
  /// covering. 2D: smallest overlap depth at junctions of the projective
  /// intervals (twice the uniform shrink). Zero when uncovered.
  double margin = 0.0;
  /// A direction whose line misses every ball; present iff !covered.
  std::optional<Vec> witness;
  std::vector<CircleCoverage> circles;
};

/// Portion of the boundary circle of `boundary_of` that lies inside the
/// closed cap `other`, as an arc of the parameter t in
/// p(t) = cos(a) axis + sin(a) (cos t u + sin t v), where {axis, u, v} is the
/// frame returned by cap_frame. Returns nullopt for an empty or single-point
/// intersection. Both caps must be 3D.
std::optional<Arc> cap_arc_on_circle(const Cap& boundary_of, const Cap& other);

/// Orthonormal completion {u, v} of a 3D cap axis, used to parametrize the
/// cap's boundary circle.
std::pair<Vec, Vec> cap_frame(const Vec& axis);
Vec point_on_cap_circle(const Cap& cap, double t);

/// 2D verifier: each cap becomes the projective interval
/// [theta - alpha, theta + alpha] mod pi.
Verdict covers_projective_2d(const CapFamily& family);

/// 3D verifier. The family is symmetrized internally (each cap and its
/// mirror). Closed caps cover S^2 iff the family is nonempty and every
/// boundary circle is covered by the arcs cut out by the other caps.
/// Open mode counts as covered only with a strictly positive margin.
Verdict covers_sphere_exact(const CapFamily& family);

/// Dispatches on dimension.
Verdict covers(const CapFamily& family);

CapFamily caps_of(const Point& x0, std::span<const Ball> balls);

/// Quasi-uniform direction layout: uniform half-circle grid in 2D, Fibonacci
/// lattice in 3D. A nonzero seed applies a fixed pseudo-random rotation.
class DirectionLayout {
 public:
  DirectionLayout(int dim, std::size_t count, std::uint64_t seed = 0);

  std::size_t size() const noexcept { return count_; }
  Vec operator[](std::size_t i) const noexcept;

 private:
  int dim_;
  std::size_t count_;
  double angle_offset_ = 0.0;
  Rotation3 rotation_;
};

/// First sampled direction whose line through x0 misses every ball.
std::optional<Vec> find_escape_sampling(const Point& x0, std::span<const Ball> balls,
                                        std::size_t n_samples, std::uint64_t seed = 0);

/// min over caps of (angle between the line along u and the cap axis) minus
/// the half-angle. Positive iff the line misses every closed cap.
double escape_slack(const std::vector<Cap>& caps, const Vec& u) noexcept;

}  // namespace shadow
