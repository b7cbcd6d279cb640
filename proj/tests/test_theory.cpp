#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "logpcf/pair_correlation.hpp"
#include "logpcf/sequence.hpp"
#include "logpcf/theory.hpp"

using namespace logpcf;

namespace {

constexpr double kLog2 = std::numbers::ln2;
constexpr double kLog4 = 2.0 * std::numbers::ln2;

// Right-neighbors of y_m within s/n, walking the sorted array (no wrap).
std::int64_t rightward_count(const PointSet& ps, std::size_t m, double threshold) {
  std::int64_t count = 0;
  for (std::size_t j = m + 1; j < ps.size(); ++j) {
    if (ps[j] - ps[m] <= threshold) {
      ++count;
    } else {
      break;
    }
  }
  return count;
}

// Minimum rightward count over reference points whose window is complete,
// i.e. the count was ended by distance rather than by the array boundary.
std::int64_t min_complete_rightward_count(const PointSet& ps, double threshold) {
  std::int64_t best = -1;
  for (std::size_t m = 0; m < ps.size(); ++m) {
    const std::int64_t count = rightward_count(ps, m, threshold);
    const bool complete = m + static_cast<std::size_t>(count) + 1 < ps.size();
    if (complete && (best < 0 || count < best)) {
      best = count;
    }
  }
  return best;
}

// J count per the cyclic definition: indices i whose k-th neighbor in
// either direction lies within the window.
std::int64_t coverage_count(const PointSet& ps, double threshold, std::int64_t k) {
  const std::int64_t n = static_cast<std::int64_t>(ps.size());
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t up = static_cast<std::size_t>((i + k) % n);
    const std::size_t down = static_cast<std::size_t>(((i - k) % n + n) % n);
    const double d_up = torus_distance(ps[static_cast<std::size_t>(i)], ps[up]);
    const double d_down = torus_distance(ps[static_cast<std::size_t>(i)], ps[down]);
    if (std::min(d_up, d_down) <= threshold) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("window_ratio: base cases") {
  CHECK(window_ratio(1, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(window_ratio(123, 0.0) == 0.0);
  CHECK(window_ratio(1000, 1.0) ==
        doctest::Approx(0.0006933874625806326).epsilon(1e-12));
  CHECK_THROWS_AS(window_ratio(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(window_ratio(10, -1.0), std::invalid_argument);
}

TEST_CASE("neighbor counts: formulas") {
  CHECK(max_neighbor_count(1, 1.0) == 1);
  CHECK(max_neighbor_count(777, 0.0) == 0);
  CHECK(min_neighbor_count(777, 0.0) == 0);
  CHECK(max_neighbor_count(1000, 2.0) == 2);
  CHECK(min_neighbor_count(1000, 2.0) == 1);
}

TEST_CASE("neighbor counts: brute force within one index step") {
  // The floor formulas measure the k-th neighbor distance one index off
  // from the cumulative-gap telescoping, so empirical counts may differ
  // by 1.
  for (const std::int64_t n : {100, 1000, 10000}) {
    const PointSet y = generate_shifted(n);
    for (const double s : {0.8, 2.0, 5.0, 9.7}) {
      const double threshold = s / static_cast<double>(n);
      const std::int64_t at_first = rightward_count(y, 0, threshold);
      CHECK(std::llabs(at_first - max_neighbor_count(n, s)) <= 1);
      const std::int64_t min_complete = min_complete_rightward_count(y, threshold);
      REQUIRE(min_complete >= 0);
      CHECK(std::llabs(min_complete - min_neighbor_count(n, s)) <= 1);
    }
  }
}

TEST_CASE("neighbor count limits") {
  CHECK(max_neighbor_count_limit(0.0) == 0);
  CHECK(min_neighbor_count_limit(0.0) == 0);
  CHECK(max_neighbor_count_limit(1.0) == 1);
  CHECK(max_neighbor_count_limit(5.0) == 6);
  CHECK(min_neighbor_count_limit(5.0) == 3);
  // Finite-n counts stabilize at the limit for large n (off breakpoints).
  for (const std::int64_t n : {10000, 100000, 1000000}) {
    CHECK(max_neighbor_count(n, 5.0) == 6);
    CHECK(min_neighbor_count(n, 5.0) == 3);
  }
}

TEST_CASE("neighbor counts stay within n for s <= n") {
  for (const std::int64_t n : {2, 10, 1000}) {
    for (const double s : {0.5, 1.0, static_cast<double>(n) / 2.0,
                           static_cast<double>(n)}) {
      const std::int64_t kmax = max_neighbor_count(n, s);
      const std::int64_t kmin = min_neighbor_count(n, s);
      CHECK(kmin <= kmax);
      CHECK(kmax <= n);
    }
  }
}

TEST_CASE("kth_neighbor_coverage_bounds: containment and width") {
  const std::int64_t n = 1000;
  const double s = 2.0;
  const PointSet y = generate_shifted(n);
  const double threshold = s / static_cast<double>(n);
  const std::int64_t kmax = max_neighbor_count(n, s);
  REQUIRE(kmax == 2);

  for (std::int64_t k = 1; k <= kmax; ++k) {
    const Interval bounds = kth_neighbor_coverage_bounds(n, s, k);
    const std::int64_t observed = coverage_count(y, threshold, k);
    // The bound formulas measure distances one index step off the
    // cumulative-gap telescoping, so the honest cyclic count can land one
    // outside either end (same convention slack as the neighbor counts).
    CHECK(bounds.lower - 1.0 <= static_cast<double>(observed));
    CHECK(static_cast<double>(observed) <= bounds.upper + 1.0);
    if (bounds.upper < static_cast<double>(n)) {
      // Unsaturated: upper - lower = k(c+1)/c - k/c = k.
      CHECK(bounds.upper - bounds.lower ==
            doctest::Approx(static_cast<double>(k)).epsilon(1e-9));
    }
  }

  // k below the minimum count covers every index.
  const std::int64_t kmin = min_neighbor_count(n, s);
  REQUIRE(kmin >= 1);
  const Interval bounds = kth_neighbor_coverage_bounds(n, s, kmin);
  CHECK(coverage_count(y, threshold, kmin) == n);
  CHECK(bounds.lower <= static_cast<double>(n));
  CHECK(static_cast<double>(n) <= bounds.upper);

  CHECK_THROWS_AS(kth_neighbor_coverage_bounds(n, s, 0), std::invalid_argument);
  CHECK_THROWS_AS(kth_neighbor_coverage_bounds(n, s, kmax + 1), std::invalid_argument);
  CHECK_THROWS_AS(kth_neighbor_coverage_bounds(n, 0.0, 1), std::invalid_argument);
}

TEST_CASE("neighbor_count_spread: arithmetic and boundedness") {
  CHECK(neighbor_count_spread(1000, 0.0) == 0);
  // (1000, 2): k_max = 2, k_min = 1 -> 6 - 2 = 4.
  CHECK(neighbor_count_spread(1000, 2.0) == 4);
  const std::int64_t reference = neighbor_count_spread(10000, 5.0);
  for (const std::int64_t n : {100000, 1000000, 10000000}) {
    CHECK(neighbor_count_spread(n, 5.0) == reference);
  }
}

TEST_CASE("pcf_bounds: structure and degenerate cases") {
  CHECK_THROWS_AS(pcf_bounds(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pcf_bounds(100, -2.0), std::invalid_argument);

  const BoundsCertificate zero = pcf_bounds(1000, 0.0);
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper == 0.0);
  CHECK(zero.k_tilde == 0);

  const BoundsCertificate small = pcf_bounds(10000, 0.5);
  CHECK(small.counts.k_max == 0);
  CHECK(small.counts.k_min == 0);
  CHECK(small.lower == 0.0);
  CHECK(small.upper == 0.0);
  CHECK(pcf_naive(generate(10000), {0.5, 1.0}) == 0.0);

  for (const double s : {0.3, 1.0, 2.5, 7.77}) {
    const BoundsCertificate cert = pcf_bounds(1000, s);
    CHECK(cert.lower <= cert.upper);
    CHECK(cert.k_tilde ==
          cert.counts.k_max * (cert.counts.k_max + 1) -
              cert.counts.k_min * (cert.counts.k_min + 1));
    CHECK(cert.upper - cert.lower ==
          doctest::Approx(2.0 * static_cast<double>(cert.k_tilde) / 1000.0)
              .epsilon(1e-12));
  }
}

TEST_CASE("pcf_bounds: sandwich contains the empirical statistic") {
  const PointSet ps = generate(1000);
  for (const double s : {1.0, 1.8, 3.3, 6.1}) {
    const double observed = pcf_fast(ps, {s, 1.0});
    const BoundsCertificate cert = pcf_bounds(1000, s);
    CHECK(cert.lower <= observed);
    CHECK(observed <= cert.upper);
  }
}

TEST_CASE("pcf_bounds: both bounds approach the limit") {
  for (const double s : {1.0, 2.5, 7.77}) {
    const double limit = pcf_limit(s);
    double prev_worst = 1e300;
    for (const std::int64_t n : {1000, 10000, 100000, 1000000}) {
      const BoundsCertificate cert = pcf_bounds(n, s);
      const double worst =
          std::max(std::fabs(cert.lower - limit), std::fabs(cert.upper - limit));
      CHECK(worst < prev_worst);
      prev_worst = worst;
    }
    const BoundsCertificate cert = pcf_bounds(10000000, s);
    CHECK(std::fabs(cert.lower - limit) <= 1e-3);
    CHECK(std::fabs(cert.upper - limit) <= 1e-3);
  }
}

TEST_CASE("pcf_limit: explicit values") {
  CHECK_THROWS_AS(pcf_limit(-0.1), std::invalid_argument);
  CHECK(pcf_limit(0.0) == 0.0);
  CHECK(pcf_limit(0.5) == 0.0);
  CHECK(pcf_limit(0.72) == 0.0);  // still below 1/log 4 = 0.72134...
  CHECK(pcf_limit(1.0) == doctest::Approx(1.1146099182220732).epsilon(1e-14));
  CHECK(pcf_limit(1.0) ==
        doctest::Approx(4.0 * (1.0 - 1.0 / (kLog4 * 1.0))).epsilon(1e-14));
}

TEST_CASE("pcf_limit: first four pieces in reduced form") {
  // k = 0: 0; k = 1: 4(1 - 1/(log4 s)); k = 2: 2(3 - 4/(log4 s));
  // k = 3: 10(1 - 2/(log4 s)). Only these coefficients join continuously.
  for (const double t : {0.1, 0.5, 0.9}) {
    const double s0 = (0.0 + t) / kLog4;
    CHECK(pcf_limit(s0) == 0.0);
    const double s1 = (1.0 + t) / kLog4;
    CHECK(pcf_limit(s1) ==
          doctest::Approx(4.0 * (1.0 - 1.0 / (kLog4 * s1))).epsilon(1e-13));
    const double s2 = (2.0 + t) / kLog4;
    CHECK(pcf_limit(s2) ==
          doctest::Approx(2.0 * (3.0 - 4.0 / (kLog4 * s2))).epsilon(1e-13));
    const double s3 = (3.0 + t) / kLog4;
    CHECK(pcf_limit(s3) ==
          doctest::Approx(10.0 * (1.0 - 2.0 / (kLog4 * s3))).epsilon(1e-13));
  }
}

TEST_CASE("pcf_limit: pieces join continuously") {
  const double s_break = 2.0 / kLog4;
  // Piece k=1 gives 4(1 - 1/(log4 s)) = 2, piece k=2 gives 2(3 - 2/(log4 s)) = 2.
  CHECK(4.0 * (1.0 - 1.0 / (kLog4 * s_break)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(pcf_limit(s_break) == doctest::Approx(2.0).epsilon(1e-12));

  const PiecewiseLimit pieces = pcf_limit_pieces(51);
  REQUIRE(pieces.pieces.size() == 52);
  for (std::int64_t k = 0; k <= 50; ++k) {
    const LimitPiece& left = pieces.pieces[static_cast<std::size_t>(k)];
    const LimitPiece& right = pieces.pieces[static_cast<std::size_t>(k + 1)];
    CHECK(left.s_hi == right.s_lo);
    const double s = left.s_hi;
    const double from_left = left.affine - left.coeff / (4.0 * kLog2 * s);
    const double from_right = right.affine - right.coeff / (4.0 * kLog2 * s);
    CHECK(std::fabs(from_left - from_right) <= 1e-12);
  }
}

TEST_CASE("pcf_limit_pieces: coefficients follow the parity pattern") {
  const PiecewiseLimit pieces = pcf_limit_pieces(10);
  for (const LimitPiece& piece : pieces.pieces) {
    const double kd = static_cast<double>(piece.k);
    CHECK(piece.s_lo == doctest::Approx(kd / kLog4));
    CHECK(piece.s_hi == doctest::Approx((kd + 1.0) / kLog4));
    if (piece.k % 2 == 0) {
      CHECK(piece.affine == 3.0 * kd);
      CHECK(piece.coeff == 3.0 * kd * kd + 2.0 * kd);
    } else {
      CHECK(piece.affine == 3.0 * kd + 1.0);
      CHECK(piece.coeff == 3.0 * kd * kd + 4.0 * kd + 1.0);
    }
  }
  // eval agrees with the direct evaluation inside coverage.
  CHECK(pieces.eval(1.0) == doctest::Approx(pcf_limit(1.0)).epsilon(1e-15));
  CHECK(pieces.eval(5.5) == doctest::Approx(pcf_limit(5.5)).epsilon(1e-15));
  CHECK_THROWS_AS(pieces.eval(100.0), std::invalid_argument);
}

TEST_CASE("pcf_limit_floor_form: agrees with the piecewise form") {
  CHECK(pcf_limit_floor_form(0.0) == 0.0);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(1e-9, 40.0);
  for (int i = 0; i < 100000; ++i) {
    const double s = dist(rng);
    CHECK(std::fabs(pcf_limit(s) - pcf_limit_floor_form(s)) <= 1e-12);
  }
}

TEST_CASE("parity reduction inside each piece") {
  // For s in piece k, floor(log(2) s) is k/2 for even k, (k-1)/2 for odd k.
  for (std::int64_t k = 0; k <= 100; ++k) {
    for (const double t : {0.02, 0.5, 0.98}) {
      const double s = (static_cast<double>(k) + t) / kLog4;
      REQUIRE(max_neighbor_count_limit(s) == k);
      const std::int64_t expected = (k % 2 == 0) ? k / 2 : (k - 1) / 2;
      CHECK(min_neighbor_count_limit(s) == expected);
    }
  }
}

TEST_CASE("fixed_points: exactly the two known roots") {
  const std::vector<double> roots = fixed_points();
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == 0.0);

  const double s1 = fixed_point_closed_form();
  CHECK(s1 == doctest::Approx(12.54758402328024).epsilon(1e-13));
  CHECK(roots[1] == doctest::Approx(s1).epsilon(1e-12));

  // Root lives on piece 17 and solves F(s) = 2s to high accuracy.
  CHECK(s1 >= 17.0 / kLog4);
  CHECK(s1 < 18.0 / kLog4);
  CHECK(std::fabs(pcf_limit(s1) - 2.0 * s1) <= 1e-9);

  // Closed form matches the simplified radical 13 - sqrt(169 - 117/log 2).
  CHECK(s1 == doctest::Approx(13.0 - std::sqrt(169.0 - 117.0 / kLog2)).epsilon(1e-12));

  // The closed form lands on 12.54758... to five decimals.
  CHECK(std::fabs(s1 - 12.54758) <= 1e-3);

  // The second quadratic root on piece 17 (~13.45) falls outside the piece
  // and must be rejected; piece 16 contributes nothing at all.
  for (const double r : roots) {
    CHECK(std::fabs(r - 13.452415976719754) > 0.4);
    CHECK((r < 16.0 / kLog4 || r >= 17.0 / kLog4));
  }
}

TEST_CASE("fixed_points: F - 2s changes sign only at s1") {
  const double s1 = fixed_point_closed_form();
  int sign_changes = 0;
  double prev = pcf_limit(0.001) - 0.002;
  for (double s = 0.002; s <= 100.0; s += 0.001) {
    const double cur = pcf_limit(s) - 2.0 * s;
    if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) {
      ++sign_changes;
      CHECK(std::fabs(s - s1) <= 2e-3);
    }
    prev = cur;
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("weak correlations: limits and formula level") {
  CHECK(weak_limit(1.0) == doctest::Approx(2.0794415416798357).epsilon(1e-14));
  CHECK(weak_limit(1.0) == doctest::Approx(3.0 * kLog2).epsilon(1e-15));
  CHECK(weak_limit(0.0) == 0.0);

  // The weak limit never meets the Poissonian line 2s for s > 0.
  for (const double s : {0.5, 1.0, 7.0}) {
    CHECK(std::fabs(weak_limit(s) - 2.0 * s) > 0.03 * s);
  }

  CHECK_THROWS_AS(weak_lower_bound(1000, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(weak_lower_bound(1000, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(weak_lower_bound(1000, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(weak_lower_bound(1, 1.0, 0.5), std::invalid_argument);

  CHECK(std::fabs(weak_lower_bound(100000000, 1.0, 0.5) - weak_limit(1.0)) <= 1e-2);

  CHECK(weak_window_ratio(1000, 1.0, 1.0) ==
        doctest::Approx(window_ratio(1000, 1.0)).epsilon(1e-15));
  CHECK(weak_window_ratio(16, 1.0, 0.5) ==
        doctest::Approx(std::exp2(0.25) - 1.0).epsilon(1e-14));
}

TEST_CASE("weak correlations: empirical statistic near the limit") {
  const PointSet ps = generate(10000);
  const double value = pcf_fast(ps, {1.0, 0.5});
  CHECK(std::fabs(value - weak_limit(1.0)) <= 0.05);
}
