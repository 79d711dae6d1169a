#include "ntarp/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ntarp/error.hpp"

namespace ntarp {

namespace {

// Threshold strictly between lo and hi (lo < hi) such that lo < t <= hi.
double gap_midpoint(double lo, double hi) {
  const double mid = lo + (hi - lo) / 2.0;
  return mid > lo ? mid : hi;
}

}  // namespace

ThresholdFit ThresholdSearch::operator()(std::span<const double> z, std::span<const Label> y) {
  if (z.empty()) throw ConfigError("threshold search needs at least one point");
  if (z.size() != y.size()) throw ConfigError("projection and label lengths differ");

  const std::size_t n = z.size();
  sorted_.resize(n);
  std::size_t total_pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sorted_[i] = {z[i], y[i]};
    total_pos += y[i] > 0;
  }
  std::sort(sorted_.begin(), sorted_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const std::size_t total_neg = n - total_pos;

  // Cell 0: every point lies right of the threshold and gets the orientation.
  ThresholdFit best;
  std::size_t best_cell_end = 0;
  {
    const std::size_t err_pos = total_neg;
    const std::size_t err_neg = total_pos;
    best.orientation = err_pos <= err_neg ? 1 : -1;
    best.error_count = std::min(err_pos, err_neg);
  }

  std::size_t left_pos = 0;
  std::size_t left_neg = 0;
  std::size_t i = 0;
  while (i < n && best.error_count > 0) {
    const double v = sorted_[i].first;
    while (i < n && sorted_[i].first == v) {
      (sorted_[i].second > 0 ? left_pos : left_neg) += 1;
      ++i;
    }
    // Orientation +1 labels the left part -1 and the right part +1.
    const std::size_t err_pos = left_pos + (total_neg - left_neg);
    const std::size_t err_neg = n - err_pos;
    if (err_pos < best.error_count) {
      best.error_count = err_pos;
      best.orientation = 1;
      best_cell_end = i;
    }
    if (err_neg < best.error_count) {
      best.error_count = err_neg;
      best.orientation = -1;
      best_cell_end = i;
    }
  }

  if (best_cell_end == 0) {
    best.threshold = sorted_.front().first - 1.0;
  } else if (best_cell_end == n) {
    const double top = sorted_.back().first;
    best.threshold = top + 1.0;
    if (!(best.threshold > top)) best.threshold = std::nextafter(top, std::numeric_limits<double>::infinity());
  } else {
    best.threshold = gap_midpoint(sorted_[best_cell_end - 1].first, sorted_[best_cell_end].first);
  }
  return best;
}

ThresholdFit best_threshold(std::span<const double> z, std::span<const Label> y) {
  ThresholdSearch search;
  return search(z, y);
}

}  // namespace ntarp
