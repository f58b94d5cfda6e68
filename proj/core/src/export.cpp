#include "shadow/export.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace shadow {

namespace {

constexpr int kOutlineSamples = 512;
constexpr int kSlices = 32;
constexpr int kStacks = 16;

std::vector<Point> outline(const Domain* d, const Point& x0) {
  std::vector<Point> pts;
  if (!d) return pts;
  if (d->kind() == DomainKind::polygon) return d->vertices();
  for (int i = 0; i < kOutlineSamples; ++i) {
    const double t = kTwoPi * i / kOutlineSamples;
    if (auto hit = d->first_hit(x0, Vec(std::cos(t), std::sin(t)))) pts.push_back(hit->point);
  }
  return pts;
}

}  // namespace

void write_svg(std::ostream& os, const Domain* domain, const ShadowConfig& cfg,
               std::optional<double> inradius) {
  const std::vector<Point> poly = outline(domain, cfg.x0);
  double lo_x = cfg.x0.x(), hi_x = cfg.x0.x(), lo_y = cfg.x0.y(), hi_y = cfg.x0.y();
  auto grow = [&](const Point& p, double r) {
    lo_x = std::min(lo_x, p.x() - r);
    hi_x = std::max(hi_x, p.x() + r);
    lo_y = std::min(lo_y, p.y() - r);
    hi_y = std::max(hi_y, p.y() + r);
  };
  for (const Point& p : poly) grow(p, 0.0);
  for (const Ball& b : cfg.balls) grow(b.center(), b.radius());
  const double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y) + 1e-9;
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;
  const double stroke = (hi_x - lo_x) / 400.0;

  os.precision(10);
  // SVG y grows downward; flip with a transform.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_x << ' ' << -hi_y << ' '
     << (hi_x - lo_x) << ' ' << (hi_y - lo_y) << "\">\n";
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << stroke << "\">\n";
  if (!poly.empty()) {
    os << "<polygon stroke=\"black\" points=\"";
    for (const Point& p : poly) os << p.x() << ',' << p.y() << ' ';
    os << "\"/>\n";
  }
  if (inradius) {
    os << "<circle stroke=\"gray\" stroke-dasharray=\"" << 4 * stroke << "\" cx=\"" << cfg.x0.x()
       << "\" cy=\"" << cfg.x0.y() << "\" r=\"" << *inradius << "\"/>\n";
  }
  for (const Ball& b : cfg.balls) {
    os << "<circle stroke=\"steelblue\" fill=\"steelblue\" fill-opacity=\"0.3\" cx=\""
       << b.center().x() << "\" cy=\"" << b.center().y() << "\" r=\"" << b.radius() << "\"/>\n";
  }
  os << "<circle fill=\"red\" cx=\"" << cfg.x0.x() << "\" cy=\"" << cfg.x0.y() << "\" r=\""
     << 2 * stroke << "\"/>\n";
  os << "</g>\n</svg>\n";
}

void write_obj(std::ostream& os, const Domain* domain, const ShadowConfig& cfg) {
  os.precision(10);
  std::size_t base = 1;  // OBJ indices are 1-based
  for (std::size_t bi = 0; bi < cfg.balls.size(); ++bi) {
    const Ball& b = cfg.balls[bi];
    os << "o ball" << bi << '\n';
    // Poles plus (kStacks - 1) rings of kSlices vertices.
    const Point& c = b.center();
    os << "v " << c.x() << ' ' << c.y() << ' ' << c.z() + b.radius() << '\n';
    for (int i = 1; i < kStacks; ++i) {
      const double phi = kPi * i / kStacks;
      for (int j = 0; j < kSlices; ++j) {
        const double th = kTwoPi * j / kSlices;
        os << "v " << c.x() + b.radius() * std::sin(phi) * std::cos(th) << ' '
           << c.y() + b.radius() * std::sin(phi) * std::sin(th) << ' '
           << c.z() + b.radius() * std::cos(phi) << '\n';
      }
    }
    os << "v " << c.x() << ' ' << c.y() << ' ' << c.z() - b.radius() << '\n';
    const std::size_t top = base;
    const std::size_t bottom = base + 1 + static_cast<std::size_t>((kStacks - 1) * kSlices);
    auto ring = [&](int i, int j) {
      return base + 1 + static_cast<std::size_t>((i - 1) * kSlices + (j % kSlices));
    };
    for (int j = 0; j < kSlices; ++j) os << "f " << top << ' ' << ring(1, j) << ' ' << ring(1, j + 1) << '\n';
    for (int i = 1; i < kStacks - 1; ++i) {
      for (int j = 0; j < kSlices; ++j) {
        os << "f " << ring(i, j) << ' ' << ring(i + 1, j) << ' ' << ring(i + 1, j + 1) << ' '
           << ring(i, j + 1) << '\n';
      }
    }
    for (int j = 0; j < kSlices; ++j) {
      os << "f " << ring(kStacks - 1, j) << ' ' << bottom << ' ' << ring(kStacks - 1, j + 1) << '\n';
    }
    base = bottom + 1;
  }
  if (domain && domain->kind() == DomainKind::mesh) {
    os << "o domain\n";
    for (const Point& p : domain->vertices()) os << "v " << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
    for (const Triangle& t : domain->triangles()) {
      os << "f " << base + t[0] << ' ' << base + t[1] << ' ' << base + t[2] << '\n';
    }
  }
}

}  // namespace shadow
