#pragma once

#include <cstdint>
#include <vector>

namespace logpcf {

// Closed forms for the pair correlation statistic of the dyadic log
// sequence. The neighbor-count formulas are meaningful in the regime
// s <= n (window below the full circle); they are implemented verbatim,
// without clamping.

/// Gap-ratio form of the window condition: 2^(s/n) - 1.
double window_ratio(std::int64_t n, double s);

/// Most right-neighbors any point has inside the window:
/// floor(2 n c / (1 + c)) with c = window_ratio(n, s).
std::int64_t max_neighbor_count(std::int64_t n, double s);

/// Fewest right-neighbors (complete windows): floor(n c / (1 + c)).
std::int64_t min_neighbor_count(std::int64_t n, double s);

/// Large-n limits: floor(log(4) s) and floor(log(2) s).
std::int64_t max_neighbor_count_limit(double s);
std::int64_t min_neighbor_count_limit(double s);

/// K(K+1) difference of the two neighbor counts; controls the width of the
/// finite-n bounds.
std::int64_t neighbor_count_spread(std::int64_t n, double s);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Bounds on the number of indices whose k-th neighbor (either direction,
/// cyclic) lies inside the window:
/// min(n, 2n - k(c+1)/c) <= J <= min(n, 2n - k/c).
/// Requires 1 <= k <= max_neighbor_count(n, s) and s > 0.
Interval kth_neighbor_coverage_bounds(std::int64_t n, double s, std::int64_t k);

struct NeighborCounts {
  std::int64_t n = 0;
  double s = 0.0;
  double c = 0.0;  // window_ratio(n, s)
  std::int64_t k_max = 0;
  std::int64_t k_min = 0;
};

NeighborCounts neighbor_counts(std::int64_t n, double s);

/// Finite-n sandwich for F_n(s):
///   lower = 4 K_max - (2 + 1/n) K_min - ((c+1)/(c n)) K~
///   upper = lower + 2 K~ / n.
struct BoundsCertificate {
  double lower = 0.0;
  double upper = 0.0;
  std::int64_t k_tilde = 0;
  NeighborCounts counts;
};

BoundsCertificate pcf_bounds(std::int64_t n, double s);

/// The limiting pair correlation function F(s), piecewise in
/// k = floor(log(4) s):
///   even k: F(s) = 3k - (3k^2 + 2k) / (4 log(2) s)
///   odd  k: F(s) = 3k + 1 - (3k^2 + 4k + 1) / (4 log(2) s)
double pcf_limit(double s);

/// Alternate floor-based route to the same function:
///   F(s) = 4 floor(log(4)s) - 2 floor(log(2)s) - K~ / (log(2) s)
/// with K~ built from the two floors. Agrees with pcf_limit off
/// breakpoints to 1e-12.
double pcf_limit_floor_form(double s);

/// One piece of the limit: F(s) = affine - coeff / (4 log(2) s) on
/// [s_lo, s_hi) with s_lo = k / log(4).
struct LimitPiece {
  std::int64_t k = 0;
  double s_lo = 0.0;
  double s_hi = 0.0;
  double affine = 0.0;
  double coeff = 0.0;
};

/// Symbolic form of F(s) covering pieces k = 0..max_k.
struct PiecewiseLimit {
  std::vector<LimitPiece> pieces;

  /// Evaluates the covered piece containing s; throws past coverage.
  double eval(double s) const;
};

PiecewiseLimit pcf_limit_pieces(std::int64_t max_k);

/// All s >= 0 with F(s) = 2s, found by solving the per-piece quadratic
/// 8 log(2) s^2 - 4 log(2) affine s + coeff = 0 on every piece up to
/// s = 100 and keeping roots inside their piece. Returns {0, s_1}.
std::vector<double> fixed_points();

/// The nonzero fixed point in closed form:
/// (52 log(2) - sqrt(2704 log(2)^2 - 1872 log(2))) / (4 log(2)).
double fixed_point_closed_form();

/// Weak-scaled window ratio: 2^(s / n^alpha) - 1.
double weak_window_ratio(std::int64_t n, double s, double alpha);

std::int64_t weak_max_neighbor_count(std::int64_t n, double s, double alpha);
std::int64_t weak_min_neighbor_count(std::int64_t n, double s, double alpha);
std::int64_t weak_neighbor_count_spread(std::int64_t n, double s, double alpha);

/// Finite-n lower bound for the weak statistic, alpha in [0, 1):
///   4 K_max/n^(1-a) - 2 K_min/n^(1-a) - 2/n^(2-a) - K~ (C+1)/(C n^(2-a)).
double weak_lower_bound(std::int64_t n, double s, double alpha);

/// Limit of the weak statistic for every alpha < 1:
/// 2s * (3/4) log(4) = 3 log(2) s.
double weak_limit(double s);

}  // namespace logpcf
