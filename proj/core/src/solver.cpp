#include "shadow/solver.hpp"

#include <cmath>
#include <mutex>

namespace shadow {

Certificate validate(const ShadowConfig& cfg) {
  Certificate cert;
  cert.dim = cfg.dim();
  cert.mode = cfg.mode();
  cert.n_balls = cfg.balls.size();

  cert.checks.outside_point = true;
  for (const Ball& b : cfg.balls) {
    if (!(dist(cfg.x0, b.center()) > b.radius())) cert.checks.outside_point = false;
  }
  cert.checks.pairwise_disjoint = true;
  for (std::size_t i = 0; i < cfg.balls.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.balls.size(); ++j) {
      if (!interiors_disjoint(cfg.balls[i], cfg.balls[j])) cert.checks.pairwise_disjoint = false;
    }
  }

  if (cfg.balls.empty()) {
    cert.witness = cfg.dim() == 2 ? Vec(1.0, 0.0) : Vec(1.0, 0.0, 0.0);
    return cert;
  }
  // A ball holding x0 blocks every line, but the configuration is invalid
  // and has no cap family; leave it uncovered.
  if (!cert.checks.outside_point) return cert;

  CapFamily caps = caps_of(cfg.x0, cfg.balls);
  caps.mode = cfg.mode();
  const Verdict v = covers(caps);
  cert.covered = v.covered;
  cert.margin = v.margin;
  cert.witness = v.witness;
  for (const CircleCoverage& c : v.circles) cert.boundary_gaps.push_back(c.uncovered);
  return cert;
}

Certificate validate(const Domain& d, const ShadowConfig& cfg, double tol) {
  if (d.dim() != cfg.dim()) {
    throw Error(Errc::dimension_mismatch, "configuration and domain dimensions differ");
  }
  Certificate cert = validate(cfg);
  bool on_boundary = true;
  for (const Ball& b : cfg.balls) {
    if (!(d.boundary_residual(b.center()) < tol)) on_boundary = false;
  }
  cert.checks.centers_on_boundary = on_boundary;
  return cert;
}

void run_sampling_oracle(Certificate& cert, const ShadowConfig& cfg, std::size_t n_samples,
                         std::uint64_t seed) {
  cert.samples_used = n_samples;
  cert.sampling_escape = find_escape_sampling(cfg.x0, cfg.balls, n_samples, seed);
}

namespace {

std::size_t default_directions(int dim, std::size_t requested) {
  if (requested != 0) return requested;
  return dim == 2 ? 1024 : 4096;
}

enum class PushResult { ok, ray_missed };

// Scales every ball of a layout on the inscribed sphere about x0 so that its
// center lands on the boundary along its own ray.
PushResult push_to_boundary(const Domain& d, const ShadowConfig& spherical, double rho,
                            const RayOptions& rays, ShadowConfig& out,
                            std::vector<double>& coefficients) {
  out = ShadowConfig{spherical.x0, {}};
  coefficients.clear();
  for (const Ball& b : spherical.balls) {
    const Vec axis = (b.center() - spherical.x0).normalized();
    const auto hit = d.first_hit(spherical.x0, axis, rays);
    if (!hit) return PushResult::ray_missed;
    const double k = hit->t / rho;
    coefficients.push_back(k);
    // Place the center on the computed hit itself so the boundary residual
    // is that of the ray search, not of the rescaling arithmetic.
    out.balls.emplace_back(hit->point, k * b.radius(), b.mode());
  }
  return PushResult::ok;
}

void require_inside(const Domain& d, const Point& x0, int dim) {
  if (d.dim() != dim || x0.dim() != dim) {
    throw Error(Errc::dimension_mismatch,
                "expected a " + std::to_string(dim) + "D domain and point");
  }
  if (!d.contains(x0)) throw Error(Errc::invalid_argument, "point not in domain");
}

Lemma2Params default_lemma2() {
  static std::once_flag once;
  static Lemma2Params tuned;
  std::call_once(once, [] { tuned = tune_lemma2(); });
  return tuned;
}

}  // namespace

Solution theorem1_construct(const Domain& d, const Point& x0, const SolveOptions& opts) {
  require_inside(d, x0, 2);
  Solution sol;
  sol.inradius = estimate_inradius(d, x0, default_directions(2, opts.n_directions), opts.rays);
  const double rho = sol.inradius.rho;
  const Vec touch = sol.inradius.touch_direction;
  const ShadowConfig unit = two_balls_unit_circle(opts.margin_angle, opts.mode);

  bool any_push = false;
  for (const double side : {1.0, -1.0}) {
    // Bigger disk along the touch direction, smaller one perpendicular.
    const Vec perp = side * Vec(-touch.y(), touch.x());
    ShadowConfig spherical{x0, {}};
    spherical.balls.emplace_back(x0 + rho * touch, rho * unit.balls[0].radius(), opts.mode);
    spherical.balls.emplace_back(x0 + rho * perp, rho * unit.balls[1].radius(), opts.mode);

    ShadowConfig placed;
    std::vector<double> ks;
    if (push_to_boundary(d, spherical, rho, opts.rays, placed, ks) != PushResult::ok) continue;
    any_push = true;
    Certificate cert = validate(d, placed, opts.tol);
    if (cert.passed()) {
      sol.config = std::move(placed);
      sol.certificate = std::move(cert);
      sol.coefficients = std::move(ks);
      sol.spherical = std::move(spherical);
      return sol;
    }
  }
  if (!any_push) throw Error(Errc::ray_misses_boundary, "a disk ray never meets the boundary");
  throw Error(Errc::validation_failed, "two-disk configuration failed validation");
}

Solution theorem2_construct(const Domain& d, const Point& x0, const SolveOptions& opts) {
  require_inside(d, x0, 3);
  Solution sol;
  sol.inradius = estimate_inradius(d, x0, default_directions(3, opts.n_directions), opts.rays);
  const double rho = sol.inradius.rho;

  Lemma2Params params = opts.lemma2 ? *opts.lemma2 : default_lemma2();
  params.mode = opts.mode;
  // Certify the unit layout once; rolls and scaling preserve it.
  {
    Lemma2Params unit = params;
    unit.sphere = Sphere(Point(0.0, 0.0, 0.0), 1.0);
    unit.principal = Vec(0.0, 1.0, 0.0);
    unit.roll = 0.0;
    lemma2_unit_sphere(unit);
  }
  params.sphere = Sphere(x0, rho);
  params.principal = sol.inradius.touch_direction;

  bool any_push = false;
  const int rotations = std::max(1, opts.max_rotations);
  for (int j = 0; j < rotations; ++j) {
    // The side balls are threefold symmetric, so a third of a turn suffices.
    params.roll = (2.0 * kPi / 3.0) * j / rotations;
    const ShadowConfig spherical = lemma2_layout(params);
    ShadowConfig placed;
    std::vector<double> ks;
    if (push_to_boundary(d, spherical, rho, opts.rays, placed, ks) != PushResult::ok) continue;
    any_push = true;
    Certificate cert = validate(d, placed, opts.tol);
    if (cert.passed()) {
      sol.config = std::move(placed);
      sol.certificate = std::move(cert);
      sol.coefficients = std::move(ks);
      sol.spherical = spherical;
      return sol;
    }
  }
  if (!any_push) {
    throw Error(Errc::construction_failed,
                "no rotation found where every side-ball ray meets the boundary");
  }
  throw Error(Errc::validation_failed, "four-ball configuration failed validation at every rotation");
}

Solution solve(const Domain& d, const Point& x0, const SolveOptions& opts) {
  return d.dim() == 2 ? theorem1_construct(d, x0, opts) : theorem2_construct(d, x0, opts);
}

}  // namespace shadow
