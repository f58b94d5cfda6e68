#include "shadow/arcset.hpp"

#include <algorithm>
#include <cmath>

namespace shadow {

double wrap_angle(double t) noexcept {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool Arc::contains(double t, double tol) const noexcept {
  if (length() >= kTwoPi - tol) return true;
  double s = wrap_angle(t - lo);
  // Angles just below lo wrap to nearly 2pi.
  if (s > kTwoPi - tol) s -= kTwoPi;
  return s >= -tol && s <= length() + tol;
}

void ArcSet::add(double lo, double hi) {
  const double len = hi - lo;
  if (!(len > 0.0)) return;
  if (len >= kTwoPi) {
    arcs_.assign(1, Arc{0.0, kTwoPi});
    dirty_ = false;
    return;
  }
  const double start = wrap_angle(lo);
  const double end = start + len;
  // Split wrapping arcs so raw pieces all lie in [0, 2pi].
  if (end > kTwoPi) {
    arcs_.push_back(Arc{start, kTwoPi});
    arcs_.push_back(Arc{0.0, end - kTwoPi});
  } else {
    arcs_.push_back(Arc{start, end});
  }
  dirty_ = true;
}

void ArcSet::canonicalize() const {
  if (!dirty_) return;
  dirty_ = false;
  if (arcs_.empty()) return;
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
  std::vector<Arc> merged;
  merged.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    if (!merged.empty() && a.lo <= merged.back().hi + kArcSnap) {
      merged.back().hi = std::max(merged.back().hi, a.hi);
    } else {
      merged.push_back(a);
    }
  }
  // Join the last arc with the first across the zero angle.
  if (merged.size() > 1 && merged.front().lo <= kArcSnap &&
      merged.back().hi >= kTwoPi - kArcSnap) {
    merged.front().lo = merged.back().lo;
    merged.front().hi += kTwoPi;
    merged.pop_back();
    // Rotate so the wrapping arc goes last, keeping lo-sorted order.
    std::rotate(merged.begin(), merged.begin() + 1, merged.end());
  }
  for (Arc& a : merged) {
    if (a.hi - a.lo >= kTwoPi - kArcSnap) {
      merged.assign(1, Arc{0.0, kTwoPi});
      break;
    }
  }
  arcs_ = std::move(merged);
}

const std::vector<Arc>& ArcSet::arcs() const {
  canonicalize();
  return arcs_;
}

bool ArcSet::covers_circle() const {
  const auto& a = arcs();
  return a.size() == 1 && a.front().length() >= kTwoPi - kArcSnap;
}

std::vector<Arc> ArcSet::gaps() const {
  const auto& a = arcs();
  std::vector<Arc> out;
  if (a.empty()) {
    out.push_back(Arc{0.0, kTwoPi});
    return out;
  }
  if (covers_circle()) return out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Arc& cur = a[i];
    const Arc& next = a[(i + 1) % a.size()];
    double lo = cur.hi;
    double hi = next.lo;
    if (i + 1 == a.size()) hi += kTwoPi;
    if (hi - lo > kArcSnap) {
      const double start = wrap_angle(lo);
      out.push_back(Arc{start, start + (hi - lo)});
    }
  }
  return out;
}

double ArcSet::covered_length() const {
  double total = 0.0;
  for (const Arc& a : arcs()) total += a.length();
  return std::min(total, kTwoPi);
}

bool arcset_covers_circle(const ArcSet& a) { return a.covers_circle(); }

}  // namespace shadow
