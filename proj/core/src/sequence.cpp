#include "logpcf/sequence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace logpcf {

GapProfile::GapProfile(std::vector<double> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) {
    throw std::invalid_argument("GapProfile: empty profile is forbidden");
  }
  double sum = 0.0;
  for (double g : gaps_) {
    if (!(g > 0.0)) {
      throw std::invalid_argument("GapProfile: every gap must be positive");
    }
    sum += g;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("GapProfile: gaps must sum to 1 on the torus");
  }
}

double GapProfile::max_gap() const {
  return *std::max_element(gaps_.begin(), gaps_.end());
}

DyadicExpansion dyadic_expansion(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("dyadic_expansion: n must be >= 1");
  }
  const auto u = static_cast<std::uint64_t>(n);
  const int top = std::bit_width(u) - 1;
  DyadicExpansion out;
  out.top_index = top;
  out.bits.resize(static_cast<std::size_t>(top) + 1);
  for (int l = 0; l <= top; ++l) {
    out.bits[static_cast<std::size_t>(l)] = ((u >> l) & 1u) != 0;
  }
  out.n0 = 2 * (n - (std::int64_t{1} << top));
  return out;
}

PointSet generate(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("generate: n must be >= 1");
  }
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    const double v = std::log2(static_cast<double>(2 * k - 1));
    pts[static_cast<std::size_t>(k - 1)] = v - std::floor(v);
  }
  std::sort(pts.begin(), pts.end());
  return PointSet(std::move(pts), PointSource::LogSequence);
}

PointSet generate_shifted(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("generate_shifted: n must be >= 2");
  }
  // y_i = log2(2n) - log2(2n - i + 1), evaluated directly so no rounding
  // accumulates across the partial sums.
  std::vector<double> pts(static_cast<std::size_t>(n));
  const double top = std::log2(static_cast<double>(2 * n));
  pts[0] = 0.0;
  for (std::int64_t i = 2; i <= n; ++i) {
    pts[static_cast<std::size_t>(i - 1)] =
        top - std::log2(static_cast<double>(2 * n - i + 1));
  }
  return PointSet(std::move(pts), PointSource::ShiftedAscending);
}

PointSet generate_uniform(std::int64_t n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("generate_uniform: n must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (auto& x : pts) {
    // 53 high bits -> [0, 1); avoids the implementation-defined
    // distribution adaptors so output is identical across platforms.
    x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }
  std::sort(pts.begin(), pts.end());
  return PointSet(std::move(pts), PointSource::Custom);
}

GapProfile empirical_gaps(const PointSet& ps) {
  if (ps.size() < 2) {
    throw std::invalid_argument("empirical_gaps: at least two points required");
  }
  const auto pts = ps.points();
  std::vector<double> gaps(ps.size());
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    gaps[i] = pts[i + 1] - pts[i];
  }
  gaps[ps.size() - 1] = pts[0] + 1.0 - pts[ps.size() - 1];
  return GapProfile(std::move(gaps));
}

GapProfile theoretical_gaps(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("theoretical_gaps: n must be >= 1");
  }
  const DyadicExpansion de = dyadic_expansion(n);
  const std::int64_t pow_next = std::int64_t{1} << (de.top_index + 1);
  std::vector<double> gaps(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= de.n0; ++i) {
    gaps[static_cast<std::size_t>(i - 1)] =
        std::log2(static_cast<double>(pow_next + i)) -
        std::log2(static_cast<double>(pow_next + i - 1));
  }
  for (std::int64_t i = de.n0 + 1; i <= n; ++i) {
    gaps[static_cast<std::size_t>(i - 1)] =
        std::log2(static_cast<double>(n - de.n0 + i)) -
        std::log2(static_cast<double>(n - de.n0 + i - 1));
  }
  return GapProfile(std::move(gaps));
}

double dispersion(const PointSet& ps) {
  if (ps.size() < 2) {
    throw std::invalid_argument("dispersion: at least two points required");
  }
  const auto pts = ps.points();
  double widest = pts[0] + 1.0 - pts[ps.size() - 1];
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    widest = std::max(widest, pts[i + 1] - pts[i]);
  }
  return widest;
}

}  // namespace logpcf
