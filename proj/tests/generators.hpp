#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "shadow/geometry.hpp"

namespace shadow::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Vec unit(int dim) {
    std::normal_distribution<double> n;
    for (;;) {
      const Vec v = dim == 2 ? Vec(n(rng_), n(rng_)) : Vec(n(rng_), n(rng_), n(rng_));
      if (v.norm() > 1e-6) return v.normalized();
    }
  }

  Point point(int dim, double box) {
    return dim == 2 ? Vec(uniform(-box, box), uniform(-box, box))
                    : Vec(uniform(-box, box), uniform(-box, box), uniform(-box, box));
  }

  Rotation3 rotation() { return Rotation3::about(unit(3), uniform(0.0, 2 * kPi)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Two balls centered on a sphere about `o` with radius rho: radii below rho,
/// the second no bigger than the first, interiors disjoint.
struct SpherePair {
  Point o;
  double rho;
  Ball bigger;
  Ball smaller;
};

inline SpherePair sphere_pair(Gen& g, int dim) {
  const Point o = g.point(dim, 5.0);
  const double rho = g.uniform(0.1, 10.0);
  for (;;) {
    const Point c1 = o + rho * g.unit(dim);
    const Point c2 = o + rho * g.unit(dim);
    const double d = dist(c1, c2);
    if (d < 1e-3 * rho) continue;
    // R + r <= d with r <= R < rho.
    const double sum = g.uniform(0.0, 1.0) * d;
    const double big = std::min(g.uniform(0.5, 1.0) * sum, rho * (1.0 - 1e-9));
    const double small = std::min(sum - big, big);
    if (small <= 1e-9 * rho) continue;
    return {o, rho, Ball(c1, big), Ball(c2, small)};
  }
}

}  // namespace shadow::testing
