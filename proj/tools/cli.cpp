#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logpcf/pair_correlation.hpp"
#include "logpcf/sequence.hpp"
#include "logpcf/sweeps.hpp"
#include "logpcf/theory.hpp"

namespace logpcf::cli {

namespace {

struct CommonOpts {
  std::string output;        // empty = stdout
  std::string format = "csv";
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--output", opts.output,
                  "Write data to this file instead of stdout. Relative paths "
                  "are resolved against $LOGPCF_OUTPUT_DIR when it is set.");
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

std::vector<double> parse_range(const std::string& text) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("range must have the form lo:hi:step");
  }
  try {
    lo = std::stod(text.substr(0, first));
    hi = std::stod(text.substr(first + 1, second - first - 1));
    step = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("range must have the form lo:hi:step");
  }
  if (!(step > 0.0) || lo > hi) {
    throw std::invalid_argument("range requires lo <= hi and step > 0");
  }
  std::vector<double> grid;
  for (std::int64_t i = 0;; ++i) {
    const double s = lo + step * static_cast<double>(i);
    if (s > hi + step * 1e-9) break;
    grid.push_back(s);
  }
  return grid;
}

int emit(const std::string& data, const CommonOpts& opts, std::ostream& out,
         std::ostream& err) {
  if (opts.output.empty()) {
    out << data;
    return 0;
  }
  std::filesystem::path path(opts.output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("LOGPCF_OUTPUT_DIR")) {
      path = std::filesystem::path(dir) / path;
    }
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open output file: " << path.string() << "\n";
    return 2;
  }
  file << data;
  return 0;
}

int cmd_generate(std::int64_t n, const CommonOpts& opts, std::ostream& out,
                 std::ostream& err) {
  const PointSet ps = generate(n);
  std::string data;
  if (opts.json()) {
    nlohmann::json j;
    j["n"] = static_cast<std::int64_t>(ps.size());
    j["generator"] = to_string(ps.source());
    j["points"] = std::vector<double>(ps.points().begin(), ps.points().end());
    data = j.dump(2) + "\n";
  } else {
    data = "i,x\n";
    for (std::size_t i = 0; i < ps.size(); ++i) {
      data += std::to_string(i + 1) + "," + format_double(ps[i], 12) + "\n";
    }
  }
  return emit(data, opts, out, err);
}

int cmd_gaps(std::int64_t n, bool theoretical, const CommonOpts& opts,
             std::ostream& out, std::ostream& err) {
  const GapProfile profile =
      theoretical ? theoretical_gaps(n) : empirical_gaps(generate(n));
  std::string data;
  if (opts.json()) {
    nlohmann::json j;
    j["n"] = n;
    j["kind"] = theoretical ? "theoretical" : "empirical";
    j["gaps"] = std::vector<double>(profile.gaps().begin(), profile.gaps().end());
    data = j.dump(2) + "\n";
  } else {
    data = "i,gap\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
      data += std::to_string(i + 1) + "," + format_double(profile[i], 12) + "\n";
    }
  }
  return emit(data, opts, out, err);
}

int cmd_pcf(std::int64_t n, const std::vector<double>& grid, double alpha,
            const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  const CurveTable table = pcf_curve(generate(n), grid, alpha);
  return emit(opts.json() ? table.to_json() : table.to_csv(), opts, out, err);
}

int cmd_limit(const std::vector<double>& grid, const CommonOpts& opts,
              std::ostream& out, std::ostream& err) {
  CurveTable table{std::vector<double>(grid)};
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = pcf_limit(grid[i]);
  }
  table.add_column("F", std::move(values));
  table.meta().generator = "limit";
  return emit(opts.json() ? table.to_json() : table.to_csv(), opts, out, err);
}

int cmd_bounds(std::int64_t n, double s, const CommonOpts& opts,
               std::ostream& out, std::ostream& err) {
  const BoundsCertificate cert = pcf_bounds(n, s);
  std::string data;
  if (opts.json()) {
    nlohmann::json j;
    j["n"] = n;
    j["s"] = s;
    j["lower"] = cert.lower;
    j["upper"] = cert.upper;
    j["k_max"] = cert.counts.k_max;
    j["k_min"] = cert.counts.k_min;
    j["k_tilde"] = cert.k_tilde;
    j["c"] = cert.counts.c;
    data = j.dump(2) + "\n";
  } else {
    data = "n,s,lower,upper,k_max,k_min,k_tilde,c\n";
    data += std::to_string(n) + "," + format_double(s, 12) + "," +
            format_double(cert.lower, 12) + "," + format_double(cert.upper, 12) +
            "," + std::to_string(cert.counts.k_max) + "," +
            std::to_string(cert.counts.k_min) + "," +
            std::to_string(cert.k_tilde) + "," + format_double(cert.counts.c, 12) +
            "\n";
  }
  return emit(data, opts, out, err);
}

int cmd_weak(std::int64_t n, const std::vector<double>& alphas,
             const std::vector<double>& grid, const CommonOpts& opts,
             std::ostream& out, std::ostream& err) {
  const CurveTable table = run_weak_study(n, alphas, grid);
  return emit(opts.json() ? table.to_json() : table.to_csv(), opts, out, err);
}

int cmd_fixed_points(const CommonOpts& opts, std::ostream& out,
                     std::ostream& err) {
  const std::vector<double> roots = fixed_points();
  std::string data;
  if (opts.json()) {
    nlohmann::json j;
    nlohmann::json arr = nlohmann::json::array();
    for (const double r : roots) {
      arr.push_back({{"s", r}, {"residual", std::fabs(pcf_limit(r) - 2.0 * r)}});
    }
    j["roots"] = std::move(arr);
    j["closed_form"] = fixed_point_closed_form();
    data = j.dump(2) + "\n";
  } else {
    data = "s,residual\n";
    for (const double r : roots) {
      data += format_double(r, 12) + "," +
              format_double(std::fabs(pcf_limit(r) - 2.0 * r), 12) + "\n";
    }
  }
  return emit(data, opts, out, err);
}

int cmd_verify(const std::vector<std::string>& which, const CommonOpts& opts,
               std::ostream& out, std::ostream& err) {
  std::vector<std::string> selected = which;
  if (selected.empty()) {
    selected = {"sandwich", "gaps", "convergence", "weak"};
  }
  std::vector<SweepReport> reports;
  for (const std::string& name : selected) {
    if (name == "sandwich") {
      reports.push_back(suites::sandwich());
    } else if (name == "gaps") {
      reports.push_back(suites::gaps());
    } else if (name == "convergence") {
      reports.push_back(suites::convergence());
    } else if (name == "weak") {
      reports.push_back(suites::weak());
    }
  }
  std::string data;
  if (opts.json()) {
    std::string joined = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string one = reports[i].to_json();
      if (!one.empty() && one.back() == '\n') one.pop_back();
      joined += (i ? ",\n" : "\n") + one;
    }
    joined += "\n]\n";
    data = joined;
  } else {
    data = "suite,cases,passed,failed\n";
    for (const SweepReport& r : reports) {
      data += r.name() + "," + std::to_string(r.cases().size()) + "," +
              std::to_string(r.pass_count()) + "," +
              std::to_string(r.fail_count()) + "\n";
    }
  }
  const int rc = emit(data, opts, out, err);
  if (rc != 0) return rc;
  for (const SweepReport& r : reports) {
    if (!r.all_pass()) return 1;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pair correlation statistics for the dyadic log sequence "
               "x_n = {log2(2n-1)}"};
  app.require_subcommand(1);

  std::int64_t n = 1000;
  double s = -1.0;
  std::string s_range;
  double alpha = 1.0;
  std::vector<double> weak_alphas;
  bool theoretical = false;
  std::vector<std::string> suites_selected;
  CommonOpts generate_opts, gaps_opts, pcf_opts, limit_opts, bounds_opts,
      weak_opts, fixed_opts, verify_opts;

  auto* sub_generate = app.add_subcommand("generate", "Print the first n sequence points");
  sub_generate->add_option("--n", n, "Number of points")->capture_default_str();
  add_common(sub_generate, generate_opts);

  auto* sub_gaps = app.add_subcommand("gaps", "Print the circular gap profile");
  sub_gaps->add_option("--n", n, "Number of points")->capture_default_str();
  sub_gaps->add_flag("--theoretical", theoretical,
                     "Use the closed-form profile instead of measured gaps");
  add_common(sub_gaps, gaps_opts);

  auto* sub_pcf = app.add_subcommand("pcf", "Empirical pair correlation curve");
  sub_pcf->add_option("--n", n, "Number of points")->capture_default_str();
  auto* pcf_s = sub_pcf->add_option("--s", s, "Single correlation scale");
  auto* pcf_range = sub_pcf->add_option("--s-range", s_range, "Scale grid lo:hi:step");
  pcf_s->excludes(pcf_range);
  sub_pcf->add_option("--alpha", alpha, "Scaling exponent in [0, 1]")
      ->capture_default_str();
  add_common(sub_pcf, pcf_opts);

  auto* sub_limit = app.add_subcommand("limit", "Evaluate the limiting function F(s)");
  auto* limit_s = sub_limit->add_option("--s", s, "Single scale");
  auto* limit_range = sub_limit->add_option("--s-range", s_range, "Scale grid lo:hi:step");
  limit_s->excludes(limit_range);
  add_common(sub_limit, limit_opts);

  auto* sub_bounds = app.add_subcommand("bounds", "Finite-n sandwich bounds for F_n(s)");
  sub_bounds->add_option("--n", n, "Number of points")->capture_default_str();
  sub_bounds->add_option("--s", s, "Correlation scale")->required();
  add_common(sub_bounds, bounds_opts);

  auto* sub_weak = app.add_subcommand("weak", "Weak (alpha-scaled) correlation study");
  sub_weak->add_option("--n", n, "Number of points")->capture_default_str();
  sub_weak->add_option("--alpha", weak_alphas, "Scaling exponents in [0, 1)");
  sub_weak->add_option("--s-range", s_range, "Scale grid lo:hi:step");
  add_common(sub_weak, weak_opts);

  auto* sub_fixed = app.add_subcommand("fixed-points", "Roots of F(s) = 2s");
  add_common(sub_fixed, fixed_opts);

  auto* sub_verify = app.add_subcommand("verify", "Run verification sweeps");
  sub_verify
      ->add_option("--suite", suites_selected,
                   "Suites to run (default: all)")
      ->check(CLI::IsMember({"sandwich", "gaps", "convergence", "weak"}));
  add_common(sub_verify, verify_opts);

  try {
    app.parse(argc, argv);

    const std::string default_range = "0:5:0.05";
    auto grid_from_flags = [&](const CLI::Option* s_opt) {
      if (s_opt->count() > 0 && s_range.empty()) return std::vector<double>{s};
      return parse_range(s_range.empty() ? default_range : s_range);
    };

    if (sub_generate->parsed()) {
      return cmd_generate(n, generate_opts, out, err);
    }
    if (sub_gaps->parsed()) {
      return cmd_gaps(n, theoretical, gaps_opts, out, err);
    }
    if (sub_pcf->parsed()) {
      return cmd_pcf(n, grid_from_flags(pcf_s), alpha, pcf_opts, out, err);
    }
    if (sub_limit->parsed()) {
      return cmd_limit(grid_from_flags(limit_s), limit_opts, out, err);
    }
    if (sub_bounds->parsed()) {
      return cmd_bounds(n, s, bounds_opts, out, err);
    }
    if (sub_weak->parsed()) {
      const std::vector<double> alphas =
          weak_alphas.empty() ? std::vector<double>{0.5} : weak_alphas;
      const std::vector<double> grid =
          parse_range(s_range.empty() ? default_range : s_range);
      return cmd_weak(n, alphas, grid, weak_opts, out, err);
    }
    if (sub_fixed->parsed()) {
      return cmd_fixed_points(fixed_opts, out, err);
    }
    if (sub_verify->parsed()) {
      return cmd_verify(suites_selected, verify_opts, out, err);
    }
    err << "no subcommand given\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace logpcf::cli
