#pragma once

// End-to-end drivers: place a blocking configuration with centers on the
// boundary of a user domain (two disks in 2D, four balls in 3D), and certify
// any configuration against a domain.

#include <cstdint>
#include <optional>
#include <vector>

#include "shadow/cap_cover.hpp"
#include "shadow/constructions.hpp"
#include "shadow/domain.hpp"

namespace shadow {

struct CertificateChecks {
  bool outside_point = false;
  bool pairwise_disjoint = false;
  /// Empty when no domain was supplied.
  std::optional<bool> centers_on_boundary;
};

struct Certificate {
  int dim = 0;
  BallMode mode = BallMode::closed;
  std::size_t n_balls = 0;
  bool covered = false;
  double margin = 0.0;
  CertificateChecks checks;
  std::optional<Vec> witness;
  /// Uncovered parameter length of each symmetrized cap's boundary circle
  /// (one entry for the projective circle in 2D).
  std::vector<double> boundary_gaps;
  std::size_t samples_used = 0;
  /// Escape found by the sampling oracle, if it ran and found one.
  std::optional<Vec> sampling_escape;

  /// Every structural check holds and the family covers.
  bool passed() const noexcept {
    return covered && checks.outside_point && checks.pairwise_disjoint &&
           checks.centers_on_boundary.value_or(true);
  }
};

inline constexpr double kBoundaryTolerance = 1e-6;

/// Checks (i) x0 strictly outside every ball, (ii) pairwise interiors
/// disjoint, (iii) centers on the boundary (|f| or distance below tol) when
/// a domain is given, and (iv) the coverage verdict with margin.
Certificate validate(const Domain& d, const ShadowConfig& cfg, double tol = kBoundaryTolerance);
Certificate validate(const ShadowConfig& cfg);

/// Runs find_escape_sampling and records the result in the certificate.
void run_sampling_oracle(Certificate& cert, const ShadowConfig& cfg, std::size_t n_samples,
                         std::uint64_t seed = 0);

struct SolveOptions {
  BallMode mode = BallMode::closed;
  /// Directions for the inradius estimate; 0 picks 1024 (2D) / 4096 (3D).
  std::size_t n_directions = 0;
  /// Overlap margin of the two-disk layout.
  double margin_angle = 0.02;
  /// Four-ball parameters; tune_lemma2() when empty.
  std::optional<Lemma2Params> lemma2;
  RayOptions rays;
  double tol = kBoundaryTolerance;
  /// Roll angles tried about the large ball's axis (3D).
  int max_rotations = 360;
};

struct Solution {
  ShadowConfig config;
  Certificate certificate;
  InradiusEstimate inradius;
  /// Homothety coefficient applied to each ball (same order as balls).
  std::vector<double> coefficients;
  /// The layout before the boundary homothety, on the inscribed sphere.
  ShadowConfig spherical;
};

/// Two disks: the bigger centered at the touch point of the inscribed
/// circle, the smaller pushed out along its own ray to the boundary.
Solution theorem1_construct(const Domain& d, const Point& x0, const SolveOptions& opts = {});

/// Four balls: the large ball at the touch point of the inscribed sphere,
/// the three side balls pushed out along their rays to the boundary.
Solution theorem2_construct(const Domain& d, const Point& x0, const SolveOptions& opts = {});

/// Dispatches on the domain dimension.
Solution solve(const Domain& d, const Point& x0, const SolveOptions& opts = {});

}  // namespace shadow
