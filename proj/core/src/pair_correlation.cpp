#include "logpcf/pair_correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logpcf {

namespace {

void validate_query(const PointSet& ps, const PcfQuery& q) {
  if (ps.size() < 2) {
    throw std::invalid_argument("pcf: at least two points required");
  }
  if (!std::isfinite(q.s) || q.s < 0.0) {
    throw std::invalid_argument("pcf: s must be finite and >= 0");
  }
  if (!std::isfinite(q.alpha) || q.alpha < 0.0 || q.alpha > 1.0) {
    throw std::invalid_argument("pcf: alpha must be in [0, 1]");
  }
}

double window_width(std::size_t n, const PcfQuery& q) {
  return q.s / std::pow(static_cast<double>(n), q.alpha);
}

double scale_count(std::uint64_t count, std::size_t n, double alpha) {
  return static_cast<double>(count) /
         std::pow(static_cast<double>(n), 2.0 - alpha);
}

}  // namespace

double torus_distance(double a, double b) {
  const double u = std::fabs(a - b);
  return std::min(u, 1.0 - u);
}

std::uint64_t pair_count_naive(const PointSet& ps, const PcfQuery& q) {
  validate_query(ps, q);
  const double d = window_width(ps.size(), q);
  const auto pts = ps.points();
  std::uint64_t count = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (std::size_t l = 0; l < pts.size(); ++l) {
      if (l != k && torus_distance(pts[k], pts[l]) <= d) {
        ++count;
      }
    }
  }
  return count;
}

std::uint64_t pair_count_fast(const PointSet& ps, const PcfQuery& q) {
  validate_query(ps, q);
  const std::size_t n = ps.size();
  const double d = window_width(n, q);
  if (d >= 0.5) {
    // Torus distances never exceed 0.5, so every ordered pair counts.
    return static_cast<std::uint64_t>(n) * (n - 1);
  }
  const auto pts = ps.points();
  std::uint64_t unordered = 0;

  // Near pairs: x_j - x_i <= d for j > i. The predicate matches the
  // |a - b| branch of torus_distance exactly, and both frontiers move
  // monotonically with i.
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r < i + 1) r = i + 1;
    while (r < n && pts[r] - pts[i] <= d) ++r;
    unordered += r - i - 1;
  }

  // Wrap pairs: 1 - (x_j - x_i) <= d, the 1 - |a - b| branch. For d < 0.5
  // a pair can satisfy at most one branch, so the two sweeps never count
  // the same pair twice.
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p < i + 1) p = i + 1;
    while (p < n && 1.0 - (pts[p] - pts[i]) > d) ++p;
    unordered += n - p;
  }

  return 2 * unordered;
}

double pcf_naive(const PointSet& ps, const PcfQuery& q) {
  return scale_count(pair_count_naive(ps, q), ps.size(), q.alpha);
}

double pcf_fast(const PointSet& ps, const PcfQuery& q) {
  return scale_count(pair_count_fast(ps, q), ps.size(), q.alpha);
}

CurveTable pcf_curve(const PointSet& ps, std::span<const double> s_grid,
                     double alpha) {
  if (s_grid.empty()) {
    throw std::invalid_argument("pcf_curve: empty s grid");
  }
  std::vector<double> values(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    values[i] = pcf_fast(ps, PcfQuery{s_grid[i], alpha});
  }
  CurveTable table(std::vector<double>(s_grid.begin(), s_grid.end()));
  table.add_column("F_N", std::move(values));
  table.meta().n = static_cast<std::int64_t>(ps.size());
  table.meta().alpha = alpha;
  table.meta().generator = to_string(ps.source());
  return table;
}

}  // namespace logpcf
