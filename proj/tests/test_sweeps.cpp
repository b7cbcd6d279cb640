#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "logpcf/sweeps.hpp"
#include "logpcf/theory.hpp"

using namespace logpcf;

TEST_CASE("breakpoint_filtered_grid: drops neighborhoods of k/log4") {
  const std::vector<double> grid = breakpoint_filtered_grid(0.0, 5.0, 0.25);
  // Only s = 0 sits within 0.02 (in s*log4 units) of a breakpoint here.
  CHECK(grid.size() == 20);
  CHECK(grid.front() == 0.25);
  CHECK(grid.back() == doctest::Approx(5.0));
  for (const double s : grid) {
    const double scaled = s * 2.0 * std::numbers::ln2;
    CHECK(std::fabs(scaled - std::round(scaled)) > 0.02);
  }
  CHECK_THROWS_AS(breakpoint_filtered_grid(1.0, 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(breakpoint_filtered_grid(0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("run_sandwich_sweep: single case and empty grid") {
  const std::vector<std::int64_t> n_list = {1000};
  const std::vector<double> one = {1.0};
  const SweepReport single = run_sandwich_sweep(n_list, one);
  CHECK(single.cases().size() == 1);
  CHECK(single.pass_count() == 1);
  CHECK(single.fail_count() == 0);
  CHECK(single.cases()[0].inputs.at("n") == 1000.0);
  CHECK(single.cases()[0].inputs.at("s") == 1.0);

  const std::vector<double> empty;
  const SweepReport none = run_sandwich_sweep(n_list, empty);
  CHECK(none.cases().empty());
  CHECK(none.pass_count() + none.fail_count() == 0);
}

TEST_CASE("run_sandwich_sweep: no violations on a small grid") {
  const std::vector<std::int64_t> n_list = {100, 500, 1000};
  const std::vector<double> grid = breakpoint_filtered_grid(0.25, 6.0, 0.4);
  const SweepReport report = run_sandwich_sweep(n_list, grid);
  CHECK(report.fail_count() == 0);
  CHECK(report.pass_count() ==
        static_cast<std::int64_t>(n_list.size() * grid.size()));
}

TEST_CASE("run_gap_validation: all checks hold to 1e-12") {
  const SweepReport report = run_gap_validation(64);
  CHECK(report.cases().size() == 63);  // n = 2..64
  CHECK(report.fail_count() == 0);
  CHECK(report.cases().front().inputs.at("n") == 2.0);
  REQUIRE(!report.notes().empty());
  CHECK(report.notes().front().find("positional") != std::string::npos);
}

TEST_CASE("run_convergence_study: limit column matches pcf_limit") {
  const std::vector<std::int64_t> n_list = {1000};
  const std::vector<double> grid = suites::figure_s_grid();
  const CurveTable table = run_convergence_study(n_list, grid);
  REQUIRE(table.has_column("F"));
  REQUIRE(table.has_column("F_1000"));
  const auto limit = table.column("F");
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(limit[i] == pcf_limit(grid[i]));
    worst = std::max(worst, std::fabs(table.column("F_1000")[i] - limit[i]));
  }
  CHECK(worst <= 0.2);
}

TEST_CASE("run_weak_study: columns and reference lines") {
  const std::vector<double> alphas = {0.5};
  const std::vector<double> grid = {0.5, 1.0, 2.0};
  const CurveTable table = run_weak_study(10000, alphas, grid);
  REQUIRE(table.has_column("F_a0.5"));
  REQUIRE(table.has_column("weak_limit"));
  REQUIRE(table.has_column("two_s"));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(table.column("weak_limit")[i] == weak_limit(grid[i]));
    CHECK(table.column("two_s")[i] == 2.0 * grid[i]);
  }
  CHECK(table.meta().n == 10000);

  const std::vector<double> bad_alpha = {1.0};
  CHECK_THROWS_AS(run_weak_study(100, bad_alpha, grid), std::invalid_argument);
}

TEST_CASE("run_weak_study: deviation shrinks as alpha decreases") {
  const std::vector<double> alphas = {0.25, 0.75};
  const std::vector<double> grid = {0.5, 1.0, 2.0};
  const CurveTable table = run_weak_study(100000, alphas, grid);
  double dev_low = 0.0;
  double dev_high = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double limit = weak_limit(grid[i]);
    dev_low = std::max(dev_low, std::fabs(table.column("F_a0.25")[i] - limit));
    dev_high = std::max(dev_high, std::fabs(table.column("F_a0.75")[i] - limit));
  }
  CHECK(dev_low <= dev_high);
}

TEST_CASE("SweepReport: json round trip is lossless") {
  SweepReport report("demo");
  report.add_note("first note");
  report.add_case({{"n", 100.0}, {"s", 0.3141592653589793}}, 1.0 / 3.0, 0.0, 0.5);
  report.add_case({{"n", 200.0}, {"s", 2.718281828459045}}, 7.25, 0.0, 1.0);
  CHECK(report.pass_count() == 1);
  CHECK(report.fail_count() == 1);

  const std::string json = report.to_json();
  const SweepReport parsed = SweepReport::from_json(json);
  CHECK(parsed == report);
  CHECK(parsed.to_json() == json);
}

TEST_CASE("SweepReport: csv round trip is lossless") {
  SweepReport report("csv-demo");
  report.add_note("a note");
  report.add_case({{"n", 3.0}, {"s", 0.1}}, 0.30000000000000004, 0.0, 1e-12);
  report.add_case({{"n", 5.0}, {"s", 1e-300}}, -0.0, -1.0, 1.0);

  const std::string csv = report.to_csv();
  const SweepReport parsed = SweepReport::from_csv(csv);
  CHECK(parsed == report);
  CHECK(parsed.to_csv() == csv);
}

TEST_CASE("sweeps are deterministic") {
  const std::vector<std::int64_t> n_list = {100};
  const std::vector<double> grid = {0.5, 1.0};
  CHECK(run_sandwich_sweep(n_list, grid).to_json() ==
        run_sandwich_sweep(n_list, grid).to_json());
  CHECK(run_gap_validation(16).to_csv() == run_gap_validation(16).to_csv());
}

TEST_CASE("suites: default grids honour their contracts") {
  const auto n_list = suites::sandwich_n_list();
  CHECK(n_list == std::vector<std::int64_t>{100, 500, 1000, 5000, 10000});
  const auto grid = suites::sandwich_s_grid();
  CHECK(grid.size() == 40);
  for (const double s : grid) {
    CHECK(s > 0.0);
    CHECK(s <= 10.0);
    const double scaled = s * 2.0 * std::numbers::ln2;
    CHECK(std::fabs(scaled - std::round(scaled)) > 0.02);
  }
}
