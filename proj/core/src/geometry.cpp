#include "shadow/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace shadow {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::point_inside_ball: return "point inside ball";
    case Errc::no_intersection_with_sigma: return "no intersection with tangent plane";
    case Errc::no_root_in_range: return "no root in range";
    case Errc::invalid_params: return "invalid parameters";
    case Errc::search_failed: return "search failed";
    case Errc::ray_misses_boundary: return "ray misses boundary";
    case Errc::construction_failed: return "construction failed";
    case Errc::validation_failed: return "validation failed";
    case Errc::unbounded_domain: return "unbounded domain";
    case Errc::parse_error: return "parse error";
    case Errc::unknown_identifier: return "unknown identifier";
    case Errc::evaluation_error: return "evaluation error";
    case Errc::io_error: return "i/o error";
  }
  return "unknown error";
}

Vec Vec::zero(int dim) {
  if (dim == 2) return Vec(0.0, 0.0);
  if (dim == 3) return Vec(0.0, 0.0, 0.0);
  throw Error(Errc::invalid_argument, "dimension must be 2 or 3");
}

Vec Vec::from(std::span<const double> coords) {
  Vec v;
  if (coords.size() == 2) {
    v = Vec(coords[0], coords[1]);
  } else if (coords.size() == 3) {
    v = Vec(coords[0], coords[1], coords[2]);
  } else {
    throw Error(Errc::invalid_argument,
                "expected 2 or 3 coordinates, got " + std::to_string(coords.size()));
  }
  if (!v.is_finite()) throw Error(Errc::invalid_argument, "non-finite coordinate");
  return v;
}

Vec Vec::from(std::initializer_list<double> coords) {
  return from(std::span<const double>(coords.begin(), coords.size()));
}

bool Vec::is_finite() const noexcept {
  return std::isfinite(c_[0]) && std::isfinite(c_[1]) && std::isfinite(c_[2]);
}

Vec Vec::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(Errc::invalid_argument, "cannot normalize a zero vector");
  }
  return *this / n;
}

Vec& Vec::operator+=(const Vec& o) noexcept {
  c_[0] += o.c_[0];
  c_[1] += o.c_[1];
  c_[2] += o.c_[2];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) noexcept {
  c_[0] -= o.c_[0];
  c_[1] -= o.c_[1];
  c_[2] -= o.c_[2];
  return *this;
}

Vec& Vec::operator*=(double s) noexcept {
  c_[0] *= s;
  c_[1] *= s;
  c_[2] *= s;
  return *this;
}

std::string Vec::str() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? ", " : "") << c_[static_cast<std::size_t>(i)];
  os << ')';
  return os.str();
}

double dot(const Vec& a, const Vec& b) noexcept {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec cross(const Vec& a, const Vec& b) noexcept {
  return Vec(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

double angle_between(const Vec& a, const Vec& b) noexcept {
  // atan2 form stays accurate near 0 and pi, where acos loses digits.
  const double s = a.dim() == 2 ? std::abs(a[0] * b[1] - a[1] * b[0]) : cross(a, b).norm();
  return std::atan2(s, dot(a, b));
}

const char* to_string(BallMode mode) noexcept {
  return mode == BallMode::open ? "open" : "closed";
}

BallMode ball_mode_from_string(const std::string& s) {
  if (s == "open") return BallMode::open;
  if (s == "closed") return BallMode::closed;
  throw Error(Errc::invalid_argument, "mode must be 'open' or 'closed', got '" + s + "'");
}

Ball::Ball(Point center, double radius, BallMode mode)
    : center_(center), radius_(radius), mode_(mode) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(Errc::invalid_argument, "ball radius must be positive and finite");
  }
  if (!center.is_finite()) throw Error(Errc::invalid_argument, "ball center not finite");
}

Sphere::Sphere(Point center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(Errc::invalid_argument, "sphere radius must be positive and finite");
  }
  if (!center.is_finite()) throw Error(Errc::invalid_argument, "sphere center not finite");
}

Cap::Cap(Vec axis, double half_angle) : axis_(axis.normalized()), half_angle_(half_angle) {
  if (!(half_angle > 0.0) || !(half_angle < kPi / 2)) {
    throw Error(Errc::invalid_argument, "cap half-angle must lie in (0, pi/2)");
  }
}

bool Cap::contains(const Vec& u) const noexcept {
  return angle_between(axis_, u) <= half_angle_;
}

HomothetyCoeff::HomothetyCoeff(double k) : k_(k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(Errc::invalid_argument, "homothety coefficient must be positive");
  }
}

Rotation3 Rotation3::from_columns(const Vec& ex, const Vec& ey, const Vec& ez) {
  Rotation3 r;
  for (int i = 0; i < 3; ++i) {
    r.m_[static_cast<std::size_t>(3 * i + 0)] = ex[i];
    r.m_[static_cast<std::size_t>(3 * i + 1)] = ey[i];
    r.m_[static_cast<std::size_t>(3 * i + 2)] = ez[i];
  }
  return r;
}

Rotation3 Rotation3::about(const Vec& axis, double angle) {
  const Vec k = axis.normalized();
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  Rotation3 r;
  r.m_ = {t * k[0] * k[0] + c,        t * k[0] * k[1] - s * k[2], t * k[0] * k[2] + s * k[1],
          t * k[0] * k[1] + s * k[2], t * k[1] * k[1] + c,        t * k[1] * k[2] - s * k[0],
          t * k[0] * k[2] - s * k[1], t * k[1] * k[2] + s * k[0], t * k[2] * k[2] + c};
  return r;
}

Rotation3 Rotation3::taking(const Vec& from, const Vec& to) {
  const Vec a = from.normalized();
  const Vec b = to.normalized();
  const Vec axis = cross(a, b);
  const double s = axis.norm();
  const double c = dot(a, b);
  if (s < 1e-15) {
    if (c > 0.0) return Rotation3{};
    // Half turn about any axis perpendicular to a.
    Vec helper = std::abs(a[0]) < 0.9 ? Vec(1.0, 0.0, 0.0) : Vec(0.0, 1.0, 0.0);
    return about(cross(a, helper), kPi);
  }
  return about(axis, std::atan2(s, c));
}

Vec Rotation3::apply(const Vec& v) const noexcept {
  return Vec(m_[0] * v[0] + m_[1] * v[1] + m_[2] * v[2],
             m_[3] * v[0] + m_[4] * v[1] + m_[5] * v[2],
             m_[6] * v[0] + m_[7] * v[1] + m_[8] * v[2]);
}

Rotation3 Rotation3::operator*(const Rotation3& o) const noexcept {
  Rotation3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 3; ++k) acc += m_[3 * i + k] * o.m_[3 * k + j];
      r.m_[3 * i + j] = acc;
    }
  }
  return r;
}

Rotation3 Rotation3::transposed() const noexcept {
  Rotation3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.m_[3 * i + j] = m_[3 * j + i];
  return r;
}

namespace {

void require_same_dim(int a, int b) {
  if (a != b) {
    throw Error(Errc::dimension_mismatch, "dimension mismatch: " + std::to_string(a) +
                                              " vs " + std::to_string(b));
  }
}

}  // namespace

double dist(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim());
  return (a - b).norm();
}

bool interiors_disjoint(const Ball& b1, const Ball& b2) {
  return dist(b1.center(), b2.center()) >= b1.radius() + b2.radius();
}

bool sets_disjoint(const Ball& b1, const Ball& b2) {
  const double d = dist(b1.center(), b2.center());
  const double sum = b1.radius() + b2.radius();
  if (b1.mode() == BallMode::closed && b2.mode() == BallMode::closed) return d > sum;
  return d >= sum;
}

Ball homothety_ball(const Ball& b, const Point& center, HomothetyCoeff k) {
  require_same_dim(b.dim(), center.dim());
  if (k.value() == 1.0) return b;
  return Ball(center + k.value() * (b.center() - center), k.value() * b.radius(), b.mode());
}

Cap cap_of_ball(const Point& x0, const Ball& b) {
  const double d = dist(x0, b.center());
  if (!(d > b.radius())) {
    throw Error(Errc::point_inside_ball,
                "point " + x0.str() + " is not strictly outside ball at " + b.center().str());
  }
  return Cap((b.center() - x0) / d, std::asin(b.radius() / d));
}

double line_point_distance(const Point& x0, const Vec& u, const Point& p) noexcept {
  const Vec w = p - x0;
  const Vec perp = w - dot(w, u) * u;
  return perp.norm();
}

bool line_hits_ball(const Point& x0, const Vec& direction, const Ball& b) {
  require_same_dim(x0.dim(), b.dim());
  require_same_dim(direction.dim(), b.dim());
  const Vec u = direction.normalized();
  const double h = line_point_distance(x0, u, b.center());
  return b.mode() == BallMode::open ? h < b.radius() : h <= b.radius();
}

}  // namespace shadow
