#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace logpcf {

/// A grid of s values with one or more named statistic columns.
///
/// Serializes to CSV with header "s,<column names>", one row per grid
/// point, 12 significant digits, locale-independent. The JSON form carries
/// the same data plus the meta block at full precision.
class CurveTable {
public:
  struct Meta {
    std::int64_t n = 0;       // point count, 0 when not tied to one set
    double alpha = 1.0;       // scaling exponent, -1 when mixed
    std::string generator;    // name of the producing generator
  };

  explicit CurveTable(std::vector<double> s_grid);

  void add_column(std::string name, std::vector<double> values);

  std::span<const double> s_grid() const noexcept { return s_grid_; }
  std::size_t column_count() const noexcept { return columns_.size(); }
  const std::string& column_name(std::size_t i) const { return columns_[i].first; }
  std::span<const double> column(std::size_t i) const { return columns_[i].second; }
  std::span<const double> column(const std::string& name) const;
  bool has_column(const std::string& name) const;

  Meta& meta() noexcept { return meta_; }
  const Meta& meta() const noexcept { return meta_; }

  std::string to_csv() const;
  std::string to_json() const;

private:
  std::vector<double> s_grid_;
  std::vector<std::pair<std::string, std::vector<double>>> columns_;
  Meta meta_;
};

/// Shortest round-trip decimal form of v (locale-independent).
std::string format_double(double v);

/// v with the given number of significant digits (locale-independent).
std::string format_double(double v, int significant_digits);

}  // namespace logpcf
