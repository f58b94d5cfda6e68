#include "shadow/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "shadow/cap_cover.hpp"

namespace shadow {

namespace {

constexpr double kBisectionTolerance = 1e-12;
constexpr int kMarchSteps = 1024;
constexpr double kInradiusSafety = 1e-6;

// Fixed, deliberately irrational-looking direction for mesh parity tests so
// rays rarely graze edges or vertices.
const Vec kParityDirection = Vec(0.5773502691896258, 0.4115226337448560, 0.7054673721340388).normalized();

double cross2(const Vec& a, const Vec& b) noexcept { return a[0] * b[1] - a[1] * b[0]; }

double signed_area(const std::vector<Point>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a += cross2(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a;
}

}  // namespace

const char* to_string(DomainKind kind) noexcept {
  switch (kind) {
    case DomainKind::implicit: return "implicit";
    case DomainKind::polygon: return "polygon";
    case DomainKind::mesh: return "mesh";
  }
  return "?";
}

Domain Domain::implicit(Expression f) {
  const int dim = f.dim();
  return Domain(Implicit{std::move(f)}, dim);
}

Domain Domain::polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw Error(Errc::invalid_argument, "polygon needs at least 3 vertices");
  for (const Point& p : vertices) {
    if (p.dim() != 2) throw Error(Errc::invalid_argument, "polygon vertices must be 2D");
    if (!p.is_finite()) throw Error(Errc::invalid_argument, "non-finite polygon vertex");
  }
  const double area = signed_area(vertices);
  if (!(std::abs(area) > 0.0)) throw Error(Errc::invalid_argument, "polygon has zero area");
  if (area < 0.0) std::reverse(vertices.begin(), vertices.end());
  return Domain(Polygon{std::move(vertices)}, 2);
}

Domain Domain::mesh(std::vector<Point> vertices, std::vector<Triangle> triangles) {
  if (triangles.size() < 4) throw Error(Errc::invalid_argument, "mesh needs at least 4 triangles");
  for (const Point& p : vertices) {
    if (p.dim() != 3) throw Error(Errc::invalid_argument, "mesh vertices must be 3D");
    if (!p.is_finite()) throw Error(Errc::invalid_argument, "non-finite mesh vertex");
  }
  std::map<std::pair<std::size_t, std::size_t>, int> directed;
  for (const Triangle& t : triangles) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (t[k] >= vertices.size()) throw Error(Errc::invalid_argument, "triangle index out of range");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(Errc::invalid_argument, "degenerate triangle");
    }
    for (std::size_t k = 0; k < 3; ++k) ++directed[{t[k], t[(k + 1) % 3]}];
  }
  for (const auto& [edge, count] : directed) {
    const auto rev = directed.find({edge.second, edge.first});
    if (count != 1 || rev == directed.end() || rev->second != 1) {
      throw Error(Errc::invalid_argument, "mesh is not a closed consistently oriented surface");
    }
  }
  double volume = 0.0;
  for (const Triangle& t : triangles) {
    volume += dot(vertices[t[0]], cross(vertices[t[1]], vertices[t[2]])) / 6.0;
  }
  if (!(std::abs(volume) > 0.0)) throw Error(Errc::invalid_argument, "mesh encloses no volume");
  if (volume < 0.0) {
    for (Triangle& t : triangles) std::swap(t[1], t[2]);
  }
  return Domain(Mesh{std::move(vertices), std::move(triangles)}, 3);
}

DomainKind Domain::kind() const noexcept {
  return static_cast<DomainKind>(rep_.index());
}

const Expression* Domain::expression() const noexcept {
  const auto* d = std::get_if<Implicit>(&rep_);
  return d ? &d->f : nullptr;
}

const std::vector<Point>& Domain::vertices() const noexcept {
  static const std::vector<Point> none;
  if (const auto* p = std::get_if<Polygon>(&rep_)) return p->vertices;
  if (const auto* m = std::get_if<Mesh>(&rep_)) return m->vertices;
  return none;
}

const std::vector<Triangle>& Domain::triangles() const noexcept {
  static const std::vector<Triangle> none;
  if (const auto* m = std::get_if<Mesh>(&rep_)) return m->triangles;
  return none;
}

bool Domain::contains(const Point& p) const {
  if (p.dim() != dim_) throw Error(Errc::dimension_mismatch, "point dimension differs from domain");
  if (const auto* d = std::get_if<Implicit>(&rep_)) return d->f(p.coords()) < 0.0;
  if (const auto* d = std::get_if<Polygon>(&rep_)) {
    bool inside = false;
    const auto& v = d->vertices;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
      if ((v[i].y() > p.y()) != (v[j].y() > p.y())) {
        const double xc = v[j].x() + (p.y() - v[j].y()) * (v[i].x() - v[j].x()) / (v[i].y() - v[j].y());
        if (p.x() < xc) inside = !inside;
      }
    }
    return inside;
  }
  const auto& m = std::get<Mesh>(rep_);
  bool inside = false;
  for (const Triangle& t : m.triangles) {
    if (ray_triangle(p, kParityDirection, m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]])) {
      inside = !inside;
    }
  }
  return inside;
}

std::optional<RayHit> Domain::march(const Implicit& d, const Point& origin, const Vec& u,
                                    double t_from, double t_to, double step) const {
  auto f = [&](double t) {
    const Point q = origin + t * u;
    return d.f(q.coords());
  };
  double prev = t_from;
  for (int k = 1;; ++k) {
    const double t = std::min(t_to, t_from + k * step);
    if (f(t) >= 0.0) {
      double lo = prev, hi = t;
      while (hi - lo > kBisectionTolerance * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= 0.0) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const double th = 0.5 * (lo + hi);
      return RayHit{th, origin + th * u};
    }
    prev = t;
    if (t >= t_to) return std::nullopt;
  }
}

std::optional<RayHit> Domain::ray_first_hit(const Point& origin, const Vec& direction,
                                            double t_max) const {
  if (origin.dim() != dim_ || direction.dim() != dim_) {
    throw Error(Errc::dimension_mismatch, "ray dimension differs from domain");
  }
  const Vec u = direction.normalized();
  if (const auto* d = std::get_if<Implicit>(&rep_)) {
    return march(*d, origin, u, 0.0, t_max, t_max / kMarchSteps);
  }
  double best = std::numeric_limits<double>::infinity();
  if (const auto* d = std::get_if<Polygon>(&rep_)) {
    const auto& v = d->vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& a = v[i];
      const Vec e = v[(i + 1) % v.size()] - a;
      const double denom = cross2(u, e);
      if (denom == 0.0) continue;
      const Vec w = a - origin;
      const double t = cross2(w, e) / denom;
      const double s = cross2(w, u) / denom;
      if (t > 0.0 && s >= 0.0 && s <= 1.0) best = std::min(best, t);
    }
  } else {
    const auto& m = std::get<Mesh>(rep_);
    for (const Triangle& tri : m.triangles) {
      if (auto t = ray_triangle(origin, u, m.vertices[tri[0]], m.vertices[tri[1]], m.vertices[tri[2]])) {
        best = std::min(best, *t);
      }
    }
  }
  if (!(best <= t_max)) return std::nullopt;
  return RayHit{best, origin + best * u};
}

std::optional<RayHit> Domain::first_hit(const Point& origin, const Vec& direction,
                                        const RayOptions& opts) const {
  const auto* d = std::get_if<Implicit>(&rep_);
  if (!d) return ray_first_hit(origin, direction, opts.t_limit);
  if (origin.dim() != dim_ || direction.dim() != dim_) {
    throw Error(Errc::dimension_mismatch, "ray dimension differs from domain");
  }
  const Vec u = direction.normalized();
  // Each window (t/2, t] is marched with step t/1024, so the resolution is
  // proportional to the distance travelled.
  double from = 0.0;
  for (double to = opts.t_start; from < opts.t_limit; to *= 2.0) {
    to = std::min(to, opts.t_limit);
    const double step = to / kMarchSteps;
    if (auto hit = march(*d, origin, u, from, to, step)) return hit;
    from = to;
  }
  return std::nullopt;
}

double Domain::boundary_residual(const Point& p) const {
  if (p.dim() != dim_) throw Error(Errc::dimension_mismatch, "point dimension differs from domain");
  if (const auto* d = std::get_if<Implicit>(&rep_)) return std::abs(d->f(p.coords()));
  double best = std::numeric_limits<double>::infinity();
  if (const auto* d = std::get_if<Polygon>(&rep_)) {
    const auto& v = d->vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      best = std::min(best, (p - closest_point_on_segment(p, v[i], v[(i + 1) % v.size()])).norm());
    }
    return best;
  }
  const auto& m = std::get<Mesh>(rep_);
  for (const Triangle& t : m.triangles) {
    const Point q = closest_point_on_triangle(p, m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]]);
    best = std::min(best, (p - q).norm());
  }
  return best;
}

bool contains(const Domain& d, const Point& p) { return d.contains(p); }

std::optional<RayHit> ray_first_hit(const Domain& d, const Point& origin, const Vec& direction,
                                    double t_max) {
  return d.ray_first_hit(origin, direction, t_max);
}

namespace {

std::vector<Vec> inradius_directions(int dim, std::size_t n) {
  std::vector<Vec> dirs;
  dirs.reserve(n);
  if (dim == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
      dirs.emplace_back(std::cos(t), std::sin(t));
    }
    return dirs;
  }
  const DirectionLayout layout(3, n);
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(layout[i]);
  return dirs;
}

}  // namespace

InradiusEstimate estimate_inradius(const Domain& d, const Point& x0, std::size_t n_directions,
                                   const RayOptions& opts) {
  if (n_directions < 64) throw Error(Errc::invalid_argument, "need at least 64 directions");
  if (!d.contains(x0)) throw Error(Errc::invalid_argument, "point not in domain");

  auto distance_along = [&](const Vec& u) {
    const auto hit = d.first_hit(x0, u, opts);
    if (!hit) {
      throw Error(Errc::unbounded_domain, "ray from " + x0.str() + " along " + u.str() +
                                              " never meets the boundary");
    }
    return hit->t;
  };

  const std::vector<Vec> dirs = inradius_directions(d.dim(), n_directions);
  std::size_t best_index = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const double t = distance_along(dirs[i]);
    if (t < best) {  // strict: ties keep the lowest index
      best = t;
      best_index = i;
    }
  }

  // Pattern search on the direction sphere around the sampled minimum.
  Vec u = dirs[best_index];
  double step = d.dim() == 2 ? kTwoPi / static_cast<double>(n_directions)
                             : std::sqrt(4.0 * kPi / static_cast<double>(n_directions));
  while (step > 1e-10) {
    std::vector<Vec> tangents;
    if (d.dim() == 2) {
      tangents = {Vec(-u.y(), u.x()), Vec(u.y(), -u.x())};
    } else {
      auto [e1, e2] = cap_frame(u);
      tangents = {e1, -e1, e2, -e2};
    }
    bool improved = false;
    for (const Vec& tangent : tangents) {
      const Vec cand = (std::cos(step) * u + std::sin(step) * tangent).normalized();
      const double t = distance_along(cand);
      if (t < best) {
        best = t;
        u = cand;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }

  InradiusEstimate est;
  est.touch_distance = best;
  est.rho = best * (1.0 - kInradiusSafety);
  est.touch_direction = u;
  est.n_directions = n_directions;
  return est;
}

Point closest_point_on_segment(const Point& p, const Point& a, const Point& b) noexcept {
  const Vec ab = b - a;
  const double len2 = ab.norm2();
  if (len2 == 0.0) return a;
  const double s = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + s * ab;
}

// Region-based closest point (Ericson, Real-Time Collision Detection 5.1.5).
Point closest_point_on_triangle(const Point& p, const Point& a, const Point& b,
                                const Point& c) noexcept {
  const Vec ab = b - a, ac = c - a, ap = p - a;
  const double d1 = dot(ab, ap), d2 = dot(ac, ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;
  const Vec bp = p - b;
  const double d3 = dot(ab, bp), d4 = dot(ac, bp);
  if (d3 >= 0.0 && d4 <= d3) return b;
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + (d1 / (d1 - d3)) * ab;
  const Vec cp = p - c;
  const double d5 = dot(ab, cp), d6 = dot(ac, cp);
  if (d6 >= 0.0 && d5 <= d6) return c;
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + (d2 / (d2 - d6)) * ac;
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);
  }
  const double denom = 1.0 / (va + vb + vc);
  return a + (vb * denom) * ab + (vc * denom) * ac;
}

std::optional<double> ray_triangle(const Point& origin, const Vec& dir, const Point& a,
                                   const Point& b, const Point& c) noexcept {
  constexpr double kParallel = 1e-14;
  const Vec e1 = b - a, e2 = c - a;
  const Vec pvec = cross(dir, e2);
  const double det = dot(e1, pvec);
  if (std::abs(det) < kParallel * e1.norm() * e2.norm()) return std::nullopt;
  const double inv = 1.0 / det;
  const Vec tvec = origin - a;
  const double u = dot(tvec, pvec) * inv;
  if (u < 0.0 || u > 1.0) return std::nullopt;
  const Vec qvec = cross(tvec, e1);
  const double v = dot(dir, qvec) * inv;
  if (v < 0.0 || u + v > 1.0) return std::nullopt;
  const double t = dot(e2, qvec) * inv;
  if (!(t > 0.0)) return std::nullopt;
  return t;
}

}  // namespace shadow
