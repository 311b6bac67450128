#include "irs/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "irs/errors.hpp"

namespace irs {

namespace {

double cross(RatePair o, RatePair a, RatePair b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

double segment_distance(RatePair p, RatePair a, RatePair b) {
  const double dx = b.r1 - a.r1;
  const double dy = b.r2 - a.r2;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.r1 - a.r1) * dx + (p.r2 - a.r2) * dy) / len2, 0.0, 1.0);
  return std::hypot(p.r1 - (a.r1 + t * dx), p.r2 - (a.r2 + t * dy));
}

bool near(RatePair a, RatePair b) {
  return std::abs(a.r1 - b.r1) <= kHullTolerance && std::abs(a.r2 - b.r2) <= kHullTolerance;
}

}  // namespace

void PentagonRegion::validate() const {
  const double eps = 1e-12 * std::max({1.0, std::abs(r1_cap), std::abs(r2_cap), std::abs(sum_cap)});
  if (!std::isfinite(r1_cap) || !std::isfinite(r2_cap) || !std::isfinite(sum_cap)) {
    throw ValidationError("pentagon caps must be finite");
  }
  if (r1_cap < -eps || r2_cap < -eps) {
    throw ValidationError(fmt::format("pentagon caps must be >= 0 (r1={}, r2={})", r1_cap, r2_cap));
  }
  if (std::max(r1_cap, r2_cap) > sum_cap + eps || sum_cap > r1_cap + r2_cap + eps) {
    throw ValidationError(fmt::format(
        "pentagon needs max(r1, r2) <= sum <= r1 + r2 (r1={}, r2={}, sum={})", r1_cap, r2_cap, sum_cap));
  }
}

RatePolygon::RatePolygon() : vertices_{RatePair{}} {}

double RatePolygon::max_r1() const {
  double best = 0.0;
  for (const auto& v : vertices_) best = std::max(best, v.r1);
  return best;
}

double RatePolygon::max_r2() const {
  double best = 0.0;
  for (const auto& v : vertices_) best = std::max(best, v.r2);
  return best;
}

double RatePolygon::max_sum() const {
  double best = 0.0;
  for (const auto& v : vertices_) best = std::max(best, v.r1 + v.r2);
  return best;
}

double RatePolygon::distance_to(RatePair p) const {
  const std::size_t n = vertices_.size();
  if (n == 1) return std::hypot(p.r1 - vertices_[0].r1, p.r2 - vertices_[0].r2);
  if (n == 2) return segment_distance(p, vertices_[0], vertices_[1]);
  bool inside = true;
  for (std::size_t i = 0; i < n && inside; ++i) {
    inside = cross(vertices_[i], vertices_[(i + 1) % n], p) >= 0.0;
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, segment_distance(p, vertices_[i], vertices_[(i + 1) % n]));
  }
  return best;
}

std::string RatePolygon::to_csv() const {
  std::string out = "r1,r2\n";
  for (const auto& v : vertices_) out += fmt::format("{:.9g},{:.9g}\n", v.r1, v.r2);
  return out;
}

RatePolygon convex_hull(std::span<const RatePair> points) {
  if (points.empty()) throw DomainError("convex_hull: no points");
  std::vector<RatePair> pts(points.begin(), points.end());
  pts.push_back(RatePair{});
  for (const auto& p : pts) {
    if (!std::isfinite(p.r1) || !std::isfinite(p.r2)) throw DomainError("convex_hull: non-finite point");
  }
  std::sort(pts.begin(), pts.end(), [](RatePair a, RatePair b) {
    return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
  });
  std::vector<RatePair> unique;
  unique.reserve(pts.size());
  for (const auto& p : pts) {
    if (unique.empty() || !near(unique.back(), p)) unique.push_back(p);
  }

  RatePolygon result;
  if (unique.size() == 1) {
    result.vertices_ = unique;
    return result;
  }

  std::vector<RatePair> hull(2 * unique.size());
  std::size_t k = 0;
  for (const auto& p : unique) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= kHullTolerance) --k;
    hull[k++] = p;
  }
  for (std::size_t i = unique.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], unique[i]) <= kHullTolerance) --k;
    hull[k++] = unique[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && near(hull[0], hull[1])) hull.pop_back();
  result.vertices_ = std::move(hull);
  return result;
}

RatePolygon pentagon_vertices(const PentagonRegion& p) {
  p.validate();
  const double r1 = std::max(0.0, p.r1_cap);
  const double r2 = std::max(0.0, p.r2_cap);
  const double sum = std::max(p.sum_cap, std::max(r1, r2));
  const RatePair pts[] = {
      {0.0, 0.0}, {r1, 0.0}, {r1, std::max(0.0, sum - r1)}, {std::max(0.0, sum - r2), r2}, {0.0, r2}};
  return convex_hull(pts);
}

RatePolygon union_hull(std::span<const RatePolygon> regions) {
  if (regions.empty()) throw DomainError("union_hull: no regions");
  std::vector<RatePair> pts;
  for (const auto& r : regions) pts.insert(pts.end(), r.vertices().begin(), r.vertices().end());
  return convex_hull(pts);
}

bool contains(const RatePolygon& outer, const RatePolygon& inner, double tol) {
  return containment_excess(outer, inner) <= tol;
}

double containment_excess(const RatePolygon& outer, const RatePolygon& inner) {
  double worst = 0.0;
  for (const auto& v : inner.vertices()) worst = std::max(worst, outer.distance_to(v));
  return worst;
}

double max_common_rate(const RatePolygon& region) {
  const auto& v = region.vertices();
  if (v.size() == 1) return 0.0;
  if (v.size() == 2) {
    // Segment from the origin: only a diagonal segment reaches (c, c), c > 0.
    const RatePair far = v[0] == RatePair{} ? v[1] : v[0];
    const double scale = std::max(far.r1, far.r2);
    return std::abs(far.r1 - far.r2) <= kHullTolerance * std::max(1.0, scale) ? std::min(far.r1, far.r2)
                                                                               : 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatePair a = v[i];
    const RatePair b = v[(i + 1) % v.size()];
    // Outward normal of a counterclockwise edge.
    const double nx = b.r2 - a.r2;
    const double ny = -(b.r1 - a.r1);
    const double along = nx + ny;
    if (along > 0.0) best = std::min(best, (nx * a.r1 + ny * a.r2) / along);
  }
  return std::isfinite(best) ? std::max(0.0, best) : 0.0;
}

}  // namespace irs
