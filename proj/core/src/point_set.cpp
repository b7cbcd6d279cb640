#include "logpcf/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logpcf {

const char* to_string(PointSource source) {
  switch (source) {
    case PointSource::LogSequence: return "log_sequence";
    case PointSource::ShiftedAscending: return "shifted_ascending";
    case PointSource::Custom: return "custom";
  }
  return "unknown";
}

PointSet::PointSet(std::vector<double> points, PointSource source)
    : points_(std::move(points)), source_(source) {
  if (points_.empty()) {
    throw std::invalid_argument("PointSet: at least one point required");
  }
  for (double x : points_) {
    if (!std::isfinite(x) || x < 0.0 || x >= 1.0) {
      throw std::invalid_argument("PointSet: points must be finite and in [0, 1)");
    }
  }
  const bool allow_ties = (source_ == PointSource::Custom);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i] < points_[i - 1]) {
      throw std::invalid_argument("PointSet: points must be sorted ascending");
    }
    if (!allow_ties && points_[i] == points_[i - 1]) {
      throw std::invalid_argument("PointSet: duplicate points are only allowed for Custom sets");
    }
  }
}

PointSet PointSet::custom(std::vector<double> points) {
  std::sort(points.begin(), points.end());
  return PointSet(std::move(points), PointSource::Custom);
}

}  // namespace logpcf
