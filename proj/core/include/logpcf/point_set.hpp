#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace logpcf {

enum class PointSource { LogSequence, ShiftedAscending, Custom };

const char* to_string(PointSource source);

/// A finite set of points on the unit torus [0, 1), kept sorted ascending.
///
/// Construction validates the torus invariants: every coordinate is finite
/// and in [0, 1), and the array is sorted. Generator-produced sets
/// (LogSequence, ShiftedAscending) must be strictly ascending; Custom sets
/// may contain duplicates, which is needed for distance edge cases.
class PointSet {
public:
  PointSet(std::vector<double> points, PointSource source);

  /// Builds a Custom point set from unsorted input; sorts before validating.
  static PointSet custom(std::vector<double> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const double> points() const noexcept { return points_; }
  double operator[](std::size_t i) const noexcept { return points_[i]; }
  PointSource source() const noexcept { return source_; }

private:
  std::vector<double> points_;
  PointSource source_;
};

}  // namespace logpcf
