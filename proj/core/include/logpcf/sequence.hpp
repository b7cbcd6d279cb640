#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "logpcf/point_set.hpp"

namespace logpcf {

/// The N circular gaps of an N-point set on the torus, in position order.
/// Every gap is positive and the gaps sum to 1 (checked to 1e-12).
class GapProfile {
public:
  explicit GapProfile(std::vector<double> gaps);

  std::size_t size() const noexcept { return gaps_.size(); }
  std::span<const double> gaps() const noexcept { return gaps_; }
  double operator[](std::size_t i) const noexcept { return gaps_[i]; }
  double max_gap() const;

private:
  std::vector<double> gaps_;
};

/// Binary expansion n = sum a_l 2^l with a_L = 1, plus the split index
/// n0 = 2 * (n - 2^L) that separates the two gap families.
struct DyadicExpansion {
  std::vector<bool> bits;  // bits[l] = a_l for l = 0..top_index
  int top_index = 0;       // L
  std::int64_t n0 = 0;     // 2 * (n - 2^L), in [0, 2^(L+1))
};

DyadicExpansion dyadic_expansion(std::int64_t n);

/// First n terms of x_k = {log2(2k - 1)}, sorted ascending.
PointSet generate(std::int64_t n);

/// Shift-equivalent arrangement with ascending gaps:
/// y_1 = 0, y_{i+1} = y_i + (log2(2n - i + 1) - log2(2n - i)).
PointSet generate_shifted(std::int64_t n);

/// n pseudorandom uniform points (fixed-seed reproducible), sorted.
PointSet generate_uniform(std::int64_t n, std::uint64_t seed);

/// Circular gaps of a sorted point set; requires at least two points.
GapProfile empirical_gaps(const PointSet& ps);

/// Closed-form gap profile of generate(n), in the two-family index order:
/// gaps log2((2^(L+1) + i) / (2^(L+1) + i - 1)) for i <= n0, then
/// log2((n - n0 + i) / (n - n0 + i - 1)) for i > n0.
GapProfile theoretical_gaps(std::int64_t n);

/// Largest circular gap. For generate(n) this equals
/// (log(n+1) - log(n)) / log(2).
double dispersion(const PointSet& ps);

}  // namespace logpcf
