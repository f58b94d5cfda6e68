#pragma once

#include <vector>

namespace shadow {

inline constexpr double kTwoPi = 6.28318530717958647692;
/// Arc endpoints closer than this are treated as coincident.
inline constexpr double kArcSnap = 1e-12;

/// Angular interval [lo, hi) on a circle parametrized by [0, 2pi). A canonical
/// arc has lo in [0, 2pi) and 0 < hi - lo <= 2pi; hi may exceed 2pi when the
/// arc wraps through zero.
struct Arc {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  /// Membership of an angle (any real) in the closed arc, modulo 2pi.
  bool contains(double t, double tol = kArcSnap) const noexcept;
};

/// Union of arcs on a circle, kept in canonical form: sorted, merged,
/// non-overlapping. Endpoints within kArcSnap are snapped together.
class ArcSet {
 public:
  ArcSet() = default;

  /// Adds [lo, hi) for any real lo. Non-positive lengths are ignored;
  /// lengths >= 2pi give the full circle.
  void add(double lo, double hi);
  void add(const Arc& a) { add(a.lo, a.hi); }

  const std::vector<Arc>& arcs() const;
  bool empty() const { return arcs().empty(); }
  bool covers_circle() const;
  /// Complement arcs with length > kArcSnap.
  std::vector<Arc> gaps() const;
  double covered_length() const;

 private:
  void canonicalize() const;

  mutable std::vector<Arc> arcs_;
  mutable bool dirty_ = false;
};

bool arcset_covers_circle(const ArcSet& a);

/// Reduces an angle to [0, 2pi).
double wrap_angle(double t) noexcept;

}  // namespace shadow
