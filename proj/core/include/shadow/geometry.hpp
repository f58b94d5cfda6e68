#pragma once

// Dimension-generic (2D / 3D) primitives: points, balls, caps on the
// direction sphere, homothety, and line-ball incidence.

#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <string>

#include "shadow/error.hpp"

namespace shadow {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kUnitTolerance = 1e-12;

/// Fixed-capacity vector of 2 or 3 coordinates. Used both for points and for
/// directions; arithmetic does not check dimensions (callers that mix
/// dimensions go through the checked free functions below).
class Vec {
 public:
  Vec() = default;
  Vec(double x, double y) : c_{x, y, 0.0}, dim_(2) {}
  Vec(double x, double y, double z) : c_{x, y, z}, dim_(3) {}

  static Vec zero(int dim);
  /// Throws invalid_argument unless coords has 2 or 3 finite entries.
  static Vec from(std::span<const double> coords);
  static Vec from(std::initializer_list<double> coords);

  int dim() const noexcept { return dim_; }
  double operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const noexcept {
    return {c_.data(), static_cast<std::size_t>(dim_)};
  }

  double x() const noexcept { return c_[0]; }
  double y() const noexcept { return c_[1]; }
  double z() const noexcept { return c_[2]; }

  bool is_finite() const noexcept;
  double norm() const noexcept { return std::sqrt(norm2()); }
  double norm2() const noexcept { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2]; }
  /// Throws invalid_argument for a zero (or non-finite) vector.
  Vec normalized() const;

  Vec& operator+=(const Vec& o) noexcept;
  Vec& operator-=(const Vec& o) noexcept;
  Vec& operator*=(double s) noexcept;

  friend Vec operator+(Vec a, const Vec& b) noexcept { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) noexcept { return a -= b; }
  friend Vec operator*(Vec a, double s) noexcept { return a *= s; }
  friend Vec operator*(double s, Vec a) noexcept { return a *= s; }
  friend Vec operator/(Vec a, double s) noexcept { return a *= 1.0 / s; }
  friend Vec operator-(Vec a) noexcept { return a *= -1.0; }
  friend bool operator==(const Vec& a, const Vec& b) noexcept = default;

  std::string str() const;

 private:
  std::array<double, 3> c_{};
  int dim_ = 3;
};

using Point = Vec;

double dot(const Vec& a, const Vec& b) noexcept;
Vec cross(const Vec& a, const Vec& b) noexcept;
/// Angle in [0, pi] between two non-zero vectors.
double angle_between(const Vec& a, const Vec& b) noexcept;

enum class BallMode { open, closed };

const char* to_string(BallMode mode) noexcept;
BallMode ball_mode_from_string(const std::string& s);

class Ball {
 public:
  /// Throws invalid_argument if radius is not positive and finite or the
  /// center has non-finite coordinates.
  Ball(Point center, double radius, BallMode mode = BallMode::closed);

  const Point& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  BallMode mode() const noexcept { return mode_; }
  int dim() const noexcept { return center_.dim(); }

  friend bool operator==(const Ball&, const Ball&) = default;

 private:
  Point center_;
  double radius_;
  BallMode mode_;
};

class Sphere {
 public:
  Sphere(Point center, double radius);

  const Point& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  int dim() const noexcept { return center_.dim(); }

 private:
  Point center_;
  double radius_;
};

/// Directions within `half_angle` of `axis`: the directions from an
/// observation point that hit one ball. Line blocking uses the cap together
/// with its antipode.
class Cap {
 public:
  /// The axis is renormalized; throws invalid_argument for a zero axis or a
  /// half-angle outside (0, pi/2).
  Cap(Vec axis, double half_angle);

  const Vec& axis() const noexcept { return axis_; }
  double half_angle() const noexcept { return half_angle_; }
  int dim() const noexcept { return axis_.dim(); }

  Cap mirrored() const { return Cap(-axis_, half_angle_); }
  /// Closed-cap membership of a unit direction (no antipode).
  bool contains(const Vec& u) const noexcept;

 private:
  Vec axis_;
  double half_angle_;
};

class HomothetyCoeff {
 public:
  explicit HomothetyCoeff(double k);
  double value() const noexcept { return k_; }

 private:
  double k_;
};

/// Proper rotation of R^3 stored as a row-major 3x3 matrix.
class Rotation3 {
 public:
  Rotation3() = default;
  /// Columns are the images of e_x, e_y, e_z.
  static Rotation3 from_columns(const Vec& ex, const Vec& ey, const Vec& ez);
  /// Right-hand rotation about a unit axis.
  static Rotation3 about(const Vec& axis, double angle);
  /// Some rotation taking unit vector `from` to unit vector `to`.
  static Rotation3 taking(const Vec& from, const Vec& to);

  Vec apply(const Vec& v) const noexcept;
  Rotation3 operator*(const Rotation3& o) const noexcept;
  Rotation3 transposed() const noexcept;

 private:
  std::array<double, 9> m_{1, 0, 0, 0, 1, 0, 0, 0, 1};
};

/// Throws dimension_mismatch when a and b differ in dimension.
double dist(const Point& a, const Point& b);

/// Non-overlap in the sense r1 + r2 <= d: open interiors are disjoint,
/// tangency allowed.
bool interiors_disjoint(const Ball& b1, const Ball& b2);

/// Like interiors_disjoint, but two closed balls must be strictly separated.
bool sets_disjoint(const Ball& b1, const Ball& b2);

Ball homothety_ball(const Ball& b, const Point& center, HomothetyCoeff k);

/// Cap of directions from x0 along which a line meets the closed ball.
/// Throws point_inside_ball when x0 is not strictly outside the closed ball.
Cap cap_of_ball(const Point& x0, const Ball& b);

/// Whether the full line {x0 + t * direction} meets the ball (strict distance
/// test for open balls). The direction is renormalized; throws
/// invalid_argument for a zero direction.
bool line_hits_ball(const Point& x0, const Vec& direction, const Ball& b);

/// Distance from `p` to the line {x0 + t u}, u unit.
double line_point_distance(const Point& x0, const Vec& u, const Point& p) noexcept;

}  // namespace shadow
