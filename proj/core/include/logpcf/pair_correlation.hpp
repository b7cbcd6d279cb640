#pragma once

#include <cstdint>
#include <span>

#include "logpcf/curve_table.hpp"
#include "logpcf/point_set.hpp"

namespace logpcf {

/// Query for the pair correlation statistic: counting window s / n^alpha,
/// normalization 1 / n^(2-alpha). alpha = 1 is the classical statistic.
struct PcfQuery {
  double s = 0.0;
  double alpha = 1.0;
};

/// Distance of a - b from the nearest integer: min(|a-b|, 1-|a-b|).
/// Expects a, b in [0, 1); the result is in [0, 0.5].
double torus_distance(double a, double b);

/// Ordered pairs (k, l), k != l, with torus_distance(x_k, x_l) <= s/n^alpha.
/// Exhaustive O(n^2) count; this is the oracle the window kernel is
/// checked against.
std::uint64_t pair_count_naive(const PointSet& ps, const PcfQuery& q);

/// Same count as pair_count_naive, bit for bit, via monotone window sweeps
/// over the sorted circular arrangement. O(n) per query.
std::uint64_t pair_count_fast(const PointSet& ps, const PcfQuery& q);

/// F_n(s) (or the weak variant for alpha < 1) from the exhaustive count.
double pcf_naive(const PointSet& ps, const PcfQuery& q);

/// F_n(s) (or the weak variant) from the window kernel.
double pcf_fast(const PointSet& ps, const PcfQuery& q);

/// Evaluates pcf_fast on every grid point; column "F_N".
CurveTable pcf_curve(const PointSet& ps, std::span<const double> s_grid,
                     double alpha = 1.0);

}  // namespace logpcf
