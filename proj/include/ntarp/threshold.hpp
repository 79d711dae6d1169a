#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ntarp/dataset.hpp"

namespace ntarp {

// Optimal 1-D rule  x -> orientation * sign(z - threshold), sign(0) = +1.
struct ThresholdFit {
  double threshold = 0.0;
  int orientation = 1;
  std::size_t error_count = 0;
};

// Exact empirical risk minimizer over all real thresholds and both
// orientations, by sorting the projected values and sweeping the N+1 cells
// between consecutive distinct values. Ties between equally good cells go to
// the leftmost cell, then to orientation +1. The threshold is the midpoint of
// the winning gap, or min(z) - 1 / max(z) + 1 for the two unbounded cells.
ThresholdFit best_threshold(std::span<const double> z, std::span<const Label> y);

// Same search with caller-owned scratch storage, for hot loops.
class ThresholdSearch {
 public:
  ThresholdFit operator()(std::span<const double> z, std::span<const Label> y);

 private:
  std::vector<std::pair<double, Label>> sorted_;
};

}  // namespace ntarp
