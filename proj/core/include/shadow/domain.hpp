#pragma once

// Domain boundaries (implicit expression, polygon, triangle mesh) with
// membership, ray-boundary and distance oracles, and directional inradius
// estimation.

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "shadow/expression.hpp"
#include "shadow/geometry.hpp"

namespace shadow {

enum class DomainKind { implicit, polygon, mesh };

const char* to_string(DomainKind kind) noexcept;

struct RayHit {
  double t = 0.0;
  Point point;
};

struct RayOptions {
  /// First window of the expanding search for implicit domains.
  double t_start = 1.0 / 64.0;
  /// The search gives up beyond this distance (the domain is then treated
  /// as unbounded in that direction).
  double t_limit = 1e6;
};

using Triangle = std::array<std::size_t, 3>;

/// {p : f(p) < 0}, the interior of a simple counterclockwise polygon, or the
/// interior of a closed orientable triangle mesh.
class Domain {
 public:
  static Domain implicit(Expression f);
  /// Clockwise input is reversed. Throws invalid_argument for fewer than 3
  /// vertices or zero area.
  static Domain polygon(std::vector<Point> vertices);
  /// Throws invalid_argument unless every edge is shared by exactly two
  /// consistently oriented triangles. Inward-facing meshes are flipped.
  static Domain mesh(std::vector<Point> vertices, std::vector<Triangle> triangles);

  DomainKind kind() const noexcept;
  int dim() const noexcept { return dim_; }

  const Expression* expression() const noexcept;
  const std::vector<Point>& vertices() const noexcept;
  const std::vector<Triangle>& triangles() const noexcept;

  /// Throws evaluation_error if the implicit function cannot be evaluated.
  bool contains(const Point& p) const;

  /// First boundary crossing on (0, t_max]. Polygon and mesh are exact;
  /// implicit marches with step t_max / 1024 and then bisects the sign
  /// change to 1e-12.
  std::optional<RayHit> ray_first_hit(const Point& origin, const Vec& direction,
                                      double t_max) const;

  /// First crossing with no fixed horizon: exact for polygon and mesh;
  /// implicit domains double the window from opts.t_start up to
  /// opts.t_limit.
  std::optional<RayHit> first_hit(const Point& origin, const Vec& direction,
                                  const RayOptions& opts = {}) const;

  /// How far p is from lying on the boundary: |f(p)| for implicit domains,
  /// Euclidean distance to the boundary otherwise.
  double boundary_residual(const Point& p) const;

 private:
  struct Implicit {
    Expression f;
  };
  struct Polygon {
    std::vector<Point> vertices;
  };
  struct Mesh {
    std::vector<Point> vertices;
    std::vector<Triangle> triangles;
  };

  explicit Domain(std::variant<Implicit, Polygon, Mesh> rep, int dim)
      : rep_(std::move(rep)), dim_(dim) {}

  std::optional<RayHit> march(const Implicit& d, const Point& origin, const Vec& u,
                              double t_from, double t_to, double step) const;

  std::variant<Implicit, Polygon, Mesh> rep_;
  int dim_;
};

bool contains(const Domain& d, const Point& p);
std::optional<RayHit> ray_first_hit(const Domain& d, const Point& origin, const Vec& direction,
                                    double t_max);

struct InradiusEstimate {
  double rho = 0.0;             ///< min first-hit distance, shrunk by (1 - 1e-6)
  Vec touch_direction;          ///< direction attaining the minimum
  double touch_distance = 0.0;  ///< unshrunk first-hit distance along it
  std::size_t n_directions = 0;
};

/// Minimum first-hit distance over quasi-uniform directions about x0, then
/// locally refined around the best sampled direction. Throws
/// invalid_argument if x0 is outside, and unbounded_domain if some sampled
/// ray never meets the boundary.
InradiusEstimate estimate_inradius(const Domain& d, const Point& x0, std::size_t n_directions,
                                   const RayOptions& opts = {});

/// Closest point on segment [a, b] / triangle (a, b, c) to p.
Point closest_point_on_segment(const Point& p, const Point& a, const Point& b) noexcept;
Point closest_point_on_triangle(const Point& p, const Point& a, const Point& b,
                                const Point& c) noexcept;

/// Moller-Trumbore; returns the ray parameter of the hit.
std::optional<double> ray_triangle(const Point& origin, const Vec& dir, const Point& a,
                                   const Point& b, const Point& c) noexcept;

}  // namespace shadow
