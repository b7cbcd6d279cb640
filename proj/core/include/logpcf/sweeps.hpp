#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "logpcf/curve_table.hpp"

namespace logpcf {

/// One checked case of a sweep: named inputs, the observed value, and the
/// accepted interval (degenerate for exact expectations).
struct SweepCase {
  std::map<std::string, double> inputs;
  double observed = 0.0;
  double expected_lo = 0.0;
  double expected_hi = 0.0;
  bool pass = false;

  friend bool operator==(const SweepCase&, const SweepCase&) = default;
};

/// Outcome of a verification sweep. Serializes losslessly to JSON and CSV
/// (shortest round-trip decimals); notes carry non-asserted findings.
class SweepReport {
public:
  explicit SweepReport(std::string name) : name_(std::move(name)) {}

  /// Adds a case; pass is computed as expected_lo <= observed <= expected_hi.
  void add_case(std::map<std::string, double> inputs, double observed,
                double expected_lo, double expected_hi);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  const std::string& name() const noexcept { return name_; }
  const std::vector<SweepCase>& cases() const noexcept { return cases_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  std::int64_t pass_count() const noexcept { return pass_count_; }
  std::int64_t fail_count() const noexcept { return fail_count_; }
  bool all_pass() const noexcept { return fail_count_ == 0; }

  std::string to_json() const;
  static SweepReport from_json(const std::string& text);
  std::string to_csv() const;
  static SweepReport from_csv(const std::string& text);

  friend bool operator==(const SweepReport& a, const SweepReport& b);

private:
  std::string name_;
  std::vector<SweepCase> cases_;
  std::vector<std::string> notes_;
  std::int64_t pass_count_ = 0;
  std::int64_t fail_count_ = 0;
};

/// Step grid over [lo, hi] with values near breakpoints of F removed:
/// s is dropped when |s log(4) - round(s log(4))| <= radius.
std::vector<double> breakpoint_filtered_grid(double lo, double hi, double step,
                                             double radius = 0.02);

/// Checks pcf_fast(generate(n), s) against the pcf_bounds interval for
/// every (n, s). Violations are recorded as failing cases.
SweepReport run_sandwich_sweep(std::span<const std::int64_t> n_list,
                               std::span<const double> s_grid);

/// Columns F_<n> for each n plus the limit column "F" on the given grid.
CurveTable run_convergence_study(std::span<const std::int64_t> n_list,
                                 std::span<const double> s_grid);

/// For every n in 2..n_max: theoretical vs empirical gap multiset,
/// the refinement split of the longest gap, and the dispersion formula,
/// all to 1e-12. Positional agreement is reported in the notes.
SweepReport run_gap_validation(std::int64_t n_max);

/// Empirical weak statistic columns F_a<alpha> for each alpha, plus the
/// columns "weak_limit" (2s (3/4) log 4) and "two_s" (2s).
CurveTable run_weak_study(std::int64_t n, std::span<const double> alphas,
                          std::span<const double> s_grid);

namespace suites {

/// Default-configuration verification suites used by the CLI.
SweepReport sandwich();     // n in {100,500,1000,5000,10000} x 40 s-values
SweepReport gaps();         // n_max = 2048
SweepReport convergence();  // n in {1000, 10000, 100000} on the figure grid
SweepReport weak();         // n = 10^6 empirical plus n = 10^8 formula level

std::vector<std::int64_t> sandwich_n_list();
std::vector<double> sandwich_s_grid();
std::vector<double> figure_s_grid();  // [0, 5] step 0.25, off breakpoints

}  // namespace suites

}  // namespace logpcf
