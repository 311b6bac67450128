#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace irs {

/// (R_1, R_2) in bps/Hz.
struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;

  friend bool operator==(const RatePair&, const RatePair&) = default;
};

/// MAC capacity region for fixed channels: R1 <= r1_cap, R2 <= r2_cap,
/// R1 + R2 <= sum_cap.
struct PentagonRegion {
  double r1_cap = 0.0;
  double r2_cap = 0.0;
  double sum_cap = 0.0;

  /// Throws ValidationError unless 0 <= r_k and max(r1, r2) <= sum <= r1 + r2
  /// (relative slack 1e-12).
  void validate() const;
};

/// Collinearity tolerance for hull construction, in cross-product units.
inline constexpr double kHullTolerance = 1e-12;

/// Convex region stored as its counterclockwise vertex list. The origin is
/// always a member. Degenerate regions keep fewer than three vertices: {(0,0)}
/// for the zero region, two vertices for a segment.
class RatePolygon {
 public:
  RatePolygon();

  const std::vector<RatePair>& vertices() const& noexcept { return vertices_; }
  // By value on temporaries so range-for over a returned polygon stays valid.
  std::vector<RatePair> vertices() && noexcept { return std::move(vertices_); }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Largest R1 / R2 / R1+R2 attained on the region.
  double max_r1() const;
  double max_r2() const;
  double max_sum() const;

  /// Euclidean distance from `p` to the region (0 when inside or on the boundary).
  double distance_to(RatePair p) const;

  std::string to_csv() const;

 private:
  friend RatePolygon convex_hull(std::span<const RatePair> points);
  std::vector<RatePair> vertices_;
};

/// Vertices (0,0), (r1,0), (r1, sum-r1), (sum-r2, r2), (0,r2) with
/// duplicates removed.
RatePolygon pentagon_vertices(const PentagonRegion& p);

/// Monotone-chain hull of `points` plus the origin. Throws DomainError when
/// `points` is empty. Collinear points are dropped.
RatePolygon convex_hull(std::span<const RatePair> points);

/// Hull of the union of several regions. Throws DomainError when empty.
RatePolygon union_hull(std::span<const RatePolygon> regions);

/// True iff every vertex of `inner` lies within distance `tol` of `outer`.
bool contains(const RatePolygon& outer, const RatePolygon& inner, double tol);

/// Largest c with (c, c) in the region.
double max_common_rate(const RatePolygon& region);

/// Largest distance from an `inner` vertex to `outer` (0 when contained).
double containment_excess(const RatePolygon& outer, const RatePolygon& inner);

}  // namespace irs
