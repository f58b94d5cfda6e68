#include "shadow/cap_cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace shadow {

namespace {

// Bisection resolution for margins. Kept well above kArcSnap so a shrink the
// arc snapping would hide is never probed.
constexpr double kMarginResolution = 1e-11;

struct WorkCap {
  Vec axis;
  Vec u;
  Vec v;
  double alpha;
};

WorkCap make_work(const Cap& c) {
  auto [u, v] = cap_frame(c.axis());
  return WorkCap{c.axis(), u, v, c.half_angle()};
}

Vec circle_point(const WorkCap& c, double alpha, double t) {
  return std::cos(alpha) * c.axis + std::sin(alpha) * (std::cos(t) * c.u + std::sin(t) * c.v);
}

std::optional<Arc> arc_inside(const WorkCap& on, double alpha_on, const WorkCap& other,
                              double alpha_other) {
  const double ca = dot(on.axis, other.axis);
  const double cu = dot(on.u, other.axis);
  const double cv = dot(on.v, other.axis);
  const double a = std::cos(alpha_on) * ca;
  const double b = std::sin(alpha_on) * std::hypot(cu, cv);
  const double threshold = std::cos(alpha_other);
  if (b < 1e-14) {
    if (a >= threshold - kUnitTolerance) return Arc{0.0, kTwoPi};
    return std::nullopt;
  }
  const double c = (threshold - a) / b;
  if (c <= -1.0) return Arc{0.0, kTwoPi};
  if (c >= 1.0) return std::nullopt;
  const double t0 = std::atan2(cv, cu);
  const double half = std::acos(c);
  return Arc{t0 - half, t0 + half};
}

std::vector<Cap> symmetrize(const std::vector<Cap>& caps) {
  std::vector<Cap> out;
  out.reserve(2 * caps.size());
  auto duplicate = [&](const Cap& c) {
    return std::any_of(out.begin(), out.end(), [&](const Cap& o) {
      return (o.axis() - c.axis()).norm() < kUnitTolerance &&
             std::abs(o.half_angle() - c.half_angle()) < kUnitTolerance;
    });
  };
  for (const Cap& c : caps) {
    for (const Cap& candidate : {c, c.mirrored()}) {
      if (!duplicate(candidate)) out.push_back(candidate);
    }
  }
  return out;
}

struct CircleState {
  ArcSet inside;           // parts of this circle inside other caps
  std::vector<Arc> raw;    // the individual arcs (for endpoint candidates)
};

// Boundary-circle arrangement of the family shrunk by eta. With stop_early,
// returns as soon as one circle is found uncovered.
std::vector<CircleState> arrangement(const std::vector<WorkCap>& caps, double eta,
                                     bool stop_early, bool* all_covered) {
  std::vector<CircleState> states(caps.size());
  *all_covered = !caps.empty();
  for (std::size_t i = 0; i < caps.size(); ++i) {
    const double ai = caps[i].alpha - eta;
    for (std::size_t j = 0; j < caps.size(); ++j) {
      if (j == i) continue;
      if (auto arc = arc_inside(caps[i], ai, caps[j], caps[j].alpha - eta)) {
        states[i].inside.add(*arc);
        states[i].raw.push_back(*arc);
      }
    }
    if (!states[i].inside.covers_circle()) {
      *all_covered = false;
      if (stop_early) return states;
    }
  }
  return states;
}

bool closed_covered_3d(const std::vector<WorkCap>& caps, double eta) {
  bool covered = false;
  arrangement(caps, eta, true, &covered);
  return covered;
}

template <class CoveredAt>
double bisect_margin(CoveredAt covered_at, double hi) {
  double lo = 0.0;
  while (hi - lo > kMarginResolution) {
    const double mid = 0.5 * (lo + hi);
    if (covered_at(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double min_half_angle(const std::vector<Cap>& caps) {
  double m = kPi / 2;
  for (const Cap& c : caps) m = std::min(m, c.half_angle());
  return m;
}

// Keeps the candidate direction with the largest escape slack.
struct BestWitness {
  const std::vector<Cap>* caps;
  std::optional<Vec> best;
  double best_slack = -std::numeric_limits<double>::infinity();

  void offer(const Vec& u) {
    const double s = escape_slack(*caps, u);
    if (s > best_slack) {
      best_slack = s;
      best = u;
    }
  }
};

}  // namespace

std::pair<Vec, Vec> cap_frame(const Vec& axis) {
  const Vec a = axis.normalized();
  const Vec helper = std::abs(a[0]) < 0.6 ? Vec(1.0, 0.0, 0.0)
                     : std::abs(a[1]) < 0.6 ? Vec(0.0, 1.0, 0.0)
                                            : Vec(0.0, 0.0, 1.0);
  const Vec u = (helper - dot(helper, a) * a).normalized();
  const Vec v = cross(a, u);
  return {u, v};
}

Vec point_on_cap_circle(const Cap& cap, double t) {
  const WorkCap w = make_work(cap);
  return circle_point(w, w.alpha, t);
}

std::optional<Arc> cap_arc_on_circle(const Cap& boundary_of, const Cap& other) {
  if (boundary_of.dim() != 3 || other.dim() != 3) {
    throw Error(Errc::dimension_mismatch, "cap_arc_on_circle requires 3D caps");
  }
  const WorkCap on = make_work(boundary_of);
  const WorkCap ot = make_work(other);
  return arc_inside(on, on.alpha, ot, ot.alpha);
}

double escape_slack(const std::vector<Cap>& caps, const Vec& u) noexcept {
  double slack = std::numeric_limits<double>::infinity();
  for (const Cap& c : caps) {
    const double theta = angle_between(u, c.axis());
    const double line_angle = std::min(theta, kPi - theta);
    slack = std::min(slack, line_angle - c.half_angle());
  }
  return slack;
}

Verdict covers_projective_2d(const CapFamily& family) {
  for (const Cap& c : family.caps) {
    if (c.dim() != 2) throw Error(Errc::dimension_mismatch, "covers_projective_2d requires 2D caps");
  }
  // Work on the doubled angle so the projective circle [0, pi) becomes a
  // full circle.
  std::vector<std::pair<double, double>> centers;  // (2 theta, 2 alpha)
  for (const Cap& c : family.caps) {
    centers.emplace_back(2.0 * std::atan2(c.axis().y(), c.axis().x()), 2.0 * c.half_angle());
  }
  auto arcs_at = [&](double eta) {
    ArcSet s;
    for (auto [center, width] : centers) {
      const double half = width - 2.0 * eta;
      s.add(center - half, center + half);
    }
    return s;
  };

  Verdict v;
  const ArcSet base = arcs_at(0.0);
  const bool closed_covered = !family.caps.empty() && base.covers_circle();
  v.circles.push_back(CircleCoverage{0, 0.5 * (kTwoPi - base.covered_length())});
  double eta = 0.0;
  if (closed_covered) {
    eta = bisect_margin([&](double e) { return arcs_at(e).covers_circle(); },
                        min_half_angle(family.caps));
  }
  v.margin = 2.0 * eta;
  if (eta > 0.0) {
    // The critical shrink closes some overlap between an interval's right end
    // and another's left end, so the exact margin is one of those overlaps.
    double snapped = v.margin, best_err = 4.0 * kMarginResolution;
    for (auto [ci, wi] : centers) {
      for (auto [cj, wj] : centers) {
        const double overlap = 0.5 * std::remainder((ci + wi) - (cj - wj), kTwoPi);
        if (overlap > 0.0 && std::abs(overlap - v.margin) < best_err) {
          best_err = std::abs(overlap - v.margin);
          snapped = overlap;
        }
      }
    }
    v.margin = snapped;
  }
  v.covered = family.mode == BallMode::closed ? closed_covered : closed_covered && v.margin > 0.0;
  if (v.covered) return v;

  if (family.caps.empty()) {
    v.witness = Vec(1.0, 0.0);
    return v;
  }
  BestWitness best{&family.caps, std::nullopt};
  auto lift = [](double doubled) {
    const double t = 0.5 * doubled;
    return Vec(std::cos(t), std::sin(t));
  };
  for (const Arc& g : base.gaps()) best.offer(lift(g.midpoint()));
  for (auto [center, width] : centers) {
    best.offer(lift(center - width));
    best.offer(lift(center + width));
  }
  v.margin = 0.0;
  v.witness = best.best;
  return v;
}

Verdict covers_sphere_exact(const CapFamily& family) {
  for (const Cap& c : family.caps) {
    if (c.dim() != 3) throw Error(Errc::dimension_mismatch, "covers_sphere_exact requires 3D caps");
  }
  Verdict v;
  if (family.caps.empty()) {
    v.witness = Vec(0.0, 0.0, 1.0);
    return v;
  }
  const std::vector<Cap> sym = symmetrize(family.caps);
  std::vector<WorkCap> work;
  work.reserve(sym.size());
  for (const Cap& c : sym) work.push_back(make_work(c));

  bool closed_covered = false;
  const std::vector<CircleState> base = arrangement(work, 0.0, false, &closed_covered);
  for (std::size_t i = 0; i < base.size(); ++i) {
    v.circles.push_back(CircleCoverage{i, kTwoPi - base[i].inside.covered_length()});
  }

  double eta = 0.0;
  if (closed_covered) {
    eta = bisect_margin([&](double e) { return closed_covered_3d(work, e); },
                        min_half_angle(sym));
  }
  v.margin = eta;
  v.covered = family.mode == BallMode::closed ? closed_covered : closed_covered && eta > 0.0;
  if (v.covered) return v;

  v.margin = 0.0;
  BestWitness best{&family.caps, std::nullopt};
  for (std::size_t i = 0; i < work.size(); ++i) {
    const WorkCap& c = work[i];
    for (const Arc& g : base[i].inside.gaps()) {
      const double t = g.midpoint();
      // Push off the circle, away from the axis, into the uncovered region.
      const double nudge = 0.5 * g.length() * std::sin(c.alpha);
      for (double step = nudge; step > 1e-15; step *= 0.5) {
        best.offer(circle_point(c, c.alpha + step, t));
      }
      best.offer(circle_point(c, c.alpha, t));
    }
    // Single-point gaps where neighbouring arcs abut (open mode, zero margin).
    for (const Arc& a : base[i].raw) {
      best.offer(circle_point(c, c.alpha, a.lo));
      best.offer(circle_point(c, c.alpha, a.hi));
    }
  }
  if (!best.best) best.offer(circle_point(work.front(), work.front().alpha, 0.0));
  v.witness = best.best;
  return v;
}

Verdict covers(const CapFamily& family) {
  if (family.caps.empty()) {
    throw Error(Errc::invalid_argument, "cannot infer dimension of an empty cap family");
  }
  return family.dim() == 2 ? covers_projective_2d(family) : covers_sphere_exact(family);
}

CapFamily caps_of(const Point& x0, std::span<const Ball> balls) {
  CapFamily f;
  for (const Ball& b : balls) {
    f.caps.push_back(cap_of_ball(x0, b));
    if (b.mode() == BallMode::open) f.mode = BallMode::open;
  }
  return f;
}

DirectionLayout::DirectionLayout(int dim, std::size_t count, std::uint64_t seed)
    : dim_(dim), count_(count) {
  if (dim != 2 && dim != 3) throw Error(Errc::invalid_argument, "dimension must be 2 or 3");
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    angle_offset_ = unit(rng) * kPi;
    // Uniform random rotation from a uniform unit quaternion.
    const double u1 = unit(rng), u2 = unit(rng), u3 = unit(rng);
    const double qw = std::sqrt(1 - u1) * std::sin(2 * kPi * u2);
    const double qx = std::sqrt(1 - u1) * std::cos(2 * kPi * u2);
    const double qy = std::sqrt(u1) * std::sin(2 * kPi * u3);
    const double qz = std::sqrt(u1) * std::cos(2 * kPi * u3);
    const Vec ex(1 - 2 * (qy * qy + qz * qz), 2 * (qx * qy + qz * qw), 2 * (qx * qz - qy * qw));
    const Vec ey(2 * (qx * qy - qz * qw), 1 - 2 * (qx * qx + qz * qz), 2 * (qy * qz + qx * qw));
    const Vec ez(2 * (qx * qz + qy * qw), 2 * (qy * qz - qx * qw), 1 - 2 * (qx * qx + qy * qy));
    rotation_ = Rotation3::from_columns(ex, ey, ez);
  }
}

Vec DirectionLayout::operator[](std::size_t i) const noexcept {
  const double fi = static_cast<double>(i) + 0.5;
  const double n = static_cast<double>(count_);
  if (dim_ == 2) {
    // Lines only need half the circle.
    const double t = angle_offset_ + kPi * fi / n;
    return Vec(std::cos(t), std::sin(t));
  }
  static const double golden = kPi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - 2.0 * fi / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden * static_cast<double>(i);
  return rotation_.apply(Vec(r * std::cos(phi), r * std::sin(phi), z));
}

std::optional<Vec> find_escape_sampling(const Point& x0, std::span<const Ball> balls,
                                        std::size_t n_samples, std::uint64_t seed) {
  const DirectionLayout layout(x0.dim(), n_samples, seed);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const Vec u = layout[i];
    bool hit = false;
    for (const Ball& b : balls) {
      const double h = line_point_distance(x0, u, b.center());
      if (b.mode() == BallMode::open ? h < b.radius() : h <= b.radius()) {
        hit = true;
        break;
      }
    }
    if (!hit) return u;
  }
  return std::nullopt;
}

}  // namespace shadow
