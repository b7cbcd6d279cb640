#include "logpcf/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logpcf {

namespace {

constexpr double kLog2 = std::numbers::ln2;
constexpr double kLog4 = 2.0 * std::numbers::ln2;

void require_n(std::int64_t n, std::int64_t least, const char* who) {
  if (n < least) {
    throw std::invalid_argument(std::string(who) + ": n too small");
  }
}

void require_s(double s, const char* who) {
  if (!std::isfinite(s) || s < 0.0) {
    throw std::invalid_argument(std::string(who) + ": s must be finite and >= 0");
  }
}

std::int64_t floor_i64(double v) {
  return static_cast<std::int64_t>(std::floor(v));
}

// Piece parameters of the limit: F(s) = affine - coeff / (4 log(2) s).
void piece_params(std::int64_t k, double& affine, double& coeff) {
  const auto kd = static_cast<double>(k);
  if (k % 2 == 0) {
    affine = 3.0 * kd;
    coeff = 3.0 * kd * kd + 2.0 * kd;
  } else {
    affine = 3.0 * kd + 1.0;
    coeff = 3.0 * kd * kd + 4.0 * kd + 1.0;
  }
}

// Real roots of a x^2 + b x + c = 0, stable form; both slots may coincide.
int quadratic_roots(double a, double b, double c, double roots[2]) {
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return 0;
  if (disc == 0.0) {
    roots[0] = -b / (2.0 * a);
    return 1;
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(sq, b));
  if (q == 0.0) {
    roots[0] = 0.0;
    roots[1] = -b / a;
    return 2;
  }
  roots[0] = q / a;
  roots[1] = c / q;
  return 2;
}

}  // namespace

double window_ratio(std::int64_t n, double s) {
  require_n(n, 1, "window_ratio");
  require_s(s, "window_ratio");
  return std::expm1(kLog2 * s / static_cast<double>(n));
}

std::int64_t max_neighbor_count(std::int64_t n, double s) {
  const double c = window_ratio(n, s);
  if (c == 0.0) return 0;
  return floor_i64(2.0 * static_cast<double>(n) * c / (1.0 + c));
}

std::int64_t min_neighbor_count(std::int64_t n, double s) {
  const double c = window_ratio(n, s);
  if (c == 0.0) return 0;
  return floor_i64(static_cast<double>(n) * c / (1.0 + c));
}

std::int64_t max_neighbor_count_limit(double s) {
  require_s(s, "max_neighbor_count_limit");
  return floor_i64(kLog4 * s);
}

std::int64_t min_neighbor_count_limit(double s) {
  require_s(s, "min_neighbor_count_limit");
  return floor_i64(kLog2 * s);
}

std::int64_t neighbor_count_spread(std::int64_t n, double s) {
  const std::int64_t kmax = max_neighbor_count(n, s);
  const std::int64_t kmin = min_neighbor_count(n, s);
  return kmax * (kmax + 1) - kmin * (kmin + 1);
}

Interval kth_neighbor_coverage_bounds(std::int64_t n, double s, std::int64_t k) {
  require_n(n, 2, "kth_neighbor_coverage_bounds");
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("kth_neighbor_coverage_bounds: s must be > 0");
  }
  if (k < 1 || k > max_neighbor_count(n, s)) {
    throw std::invalid_argument(
        "kth_neighbor_coverage_bounds: k must be in [1, max_neighbor_count]");
  }
  const double c = window_ratio(n, s);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  Interval out;
  out.lower = std::min(nd, 2.0 * nd - kd * (c + 1.0) / c);
  out.upper = std::min(nd, 2.0 * nd - kd / c);
  return out;
}

NeighborCounts neighbor_counts(std::int64_t n, double s) {
  NeighborCounts out;
  out.n = n;
  out.s = s;
  out.c = window_ratio(n, s);
  out.k_max = max_neighbor_count(n, s);
  out.k_min = min_neighbor_count(n, s);
  return out;
}

BoundsCertificate pcf_bounds(std::int64_t n, double s) {
  require_n(n, 2, "pcf_bounds");
  require_s(s, "pcf_bounds");
  BoundsCertificate cert;
  cert.counts = neighbor_counts(n, s);
  if (s == 0.0) {
    return cert;  // lower = upper = 0
  }
  const double nd = static_cast<double>(n);
  const double c = cert.counts.c;
  cert.k_tilde = neighbor_count_spread(n, s);
  cert.lower = 4.0 * static_cast<double>(cert.counts.k_max) -
               (2.0 + 1.0 / nd) * static_cast<double>(cert.counts.k_min) -
               (c + 1.0) / (c * nd) * static_cast<double>(cert.k_tilde);
  cert.upper = cert.lower + 2.0 * static_cast<double>(cert.k_tilde) / nd;
  return cert;
}

double pcf_limit(double s) {
  require_s(s, "pcf_limit");
  if (s == 0.0) return 0.0;
  const std::int64_t k = floor_i64(kLog4 * s);
  double affine = 0.0;
  double coeff = 0.0;
  piece_params(k, affine, coeff);
  return affine - coeff / (4.0 * kLog2 * s);
}

double pcf_limit_floor_form(double s) {
  require_s(s, "pcf_limit_floor_form");
  if (s == 0.0) return 0.0;
  const double kh = std::floor(kLog4 * s);
  const double kl = std::floor(kLog2 * s);
  const double spread = kh * (kh + 1.0) - kl * (kl + 1.0);
  return 4.0 * kh - 2.0 * kl - spread / (kLog2 * s);
}

double PiecewiseLimit::eval(double s) const {
  require_s(s, "PiecewiseLimit::eval");
  const std::size_t k = static_cast<std::size_t>(floor_i64(kLog4 * s));
  if (k >= pieces.size()) {
    throw std::invalid_argument("PiecewiseLimit::eval: s beyond covered pieces");
  }
  const LimitPiece& piece = pieces[k];
  if (s == 0.0) return 0.0;
  return piece.affine - piece.coeff / (4.0 * kLog2 * s);
}

PiecewiseLimit pcf_limit_pieces(std::int64_t max_k) {
  if (max_k < 0) {
    throw std::invalid_argument("pcf_limit_pieces: max_k must be >= 0");
  }
  PiecewiseLimit out;
  out.pieces.reserve(static_cast<std::size_t>(max_k) + 1);
  for (std::int64_t k = 0; k <= max_k; ++k) {
    LimitPiece piece;
    piece.k = k;
    piece.s_lo = static_cast<double>(k) / kLog4;
    piece.s_hi = static_cast<double>(k + 1) / kLog4;
    piece_params(k, piece.affine, piece.coeff);
    out.pieces.push_back(piece);
  }
  return out;
}

std::vector<double> fixed_points() {
  // F(s) = 2s on piece k becomes 8 log(2) s^2 - 4 log(2) affine s + coeff = 0.
  constexpr double kScanLimit = 100.0;
  const std::int64_t last_k = floor_i64(kLog4 * kScanLimit);
  std::vector<double> roots;
  for (std::int64_t k = 0; k <= last_k; ++k) {
    double affine = 0.0;
    double coeff = 0.0;
    piece_params(k, affine, coeff);
    const double s_lo = static_cast<double>(k) / kLog4;
    const double s_hi = static_cast<double>(k + 1) / kLog4;
    double cand[2];
    const int found = quadratic_roots(8.0 * kLog2, -4.0 * kLog2 * affine, coeff, cand);
    for (int i = 0; i < found; ++i) {
      if (cand[i] >= s_lo && cand[i] < s_hi) {
        roots.push_back(cand[i]);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::fabs(a - b) < 1e-9; }),
              roots.end());
  return roots;
}

double fixed_point_closed_form() {
  const double l = kLog2;
  return (52.0 * l - std::sqrt(2704.0 * l * l - 1872.0 * l)) / (4.0 * l);
}

double weak_window_ratio(std::int64_t n, double s, double alpha) {
  require_n(n, 1, "weak_window_ratio");
  require_s(s, "weak_window_ratio");
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("weak_window_ratio: alpha must be in [0, 1]");
  }
  return std::expm1(kLog2 * s / std::pow(static_cast<double>(n), alpha));
}

std::int64_t weak_max_neighbor_count(std::int64_t n, double s, double alpha) {
  const double c = weak_window_ratio(n, s, alpha);
  if (c == 0.0) return 0;
  return floor_i64(2.0 * static_cast<double>(n) * c / (1.0 + c));
}

std::int64_t weak_min_neighbor_count(std::int64_t n, double s, double alpha) {
  const double c = weak_window_ratio(n, s, alpha);
  if (c == 0.0) return 0;
  return floor_i64(static_cast<double>(n) * c / (1.0 + c));
}

std::int64_t weak_neighbor_count_spread(std::int64_t n, double s, double alpha) {
  const std::int64_t kmax = weak_max_neighbor_count(n, s, alpha);
  const std::int64_t kmin = weak_min_neighbor_count(n, s, alpha);
  return kmax * (kmax + 1) - kmin * (kmin + 1);
}

double weak_lower_bound(std::int64_t n, double s, double alpha) {
  require_n(n, 2, "weak_lower_bound");
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("weak_lower_bound: s must be > 0");
  }
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= 1.0) {
    throw std::invalid_argument("weak_lower_bound: alpha must be in [0, 1)");
  }
  const double nd = static_cast<double>(n);
  const double c = weak_window_ratio(n, s, alpha);
  const auto kmax = static_cast<double>(weak_max_neighbor_count(n, s, alpha));
  const auto kmin = static_cast<double>(weak_min_neighbor_count(n, s, alpha));
  const auto spread = static_cast<double>(weak_neighbor_count_spread(n, s, alpha));
  const double n_1a = std::pow(nd, 1.0 - alpha);
  const double n_2a = std::pow(nd, 2.0 - alpha);
  return 4.0 * kmax / n_1a - 2.0 * kmin / n_1a - 2.0 / n_2a -
         spread * (c + 1.0) / (c * n_2a);
}

double weak_limit(double s) {
  require_s(s, "weak_limit");
  return 2.0 * s * 0.75 * kLog4;  // = 3 log(2) s
}

}  // namespace logpcf
