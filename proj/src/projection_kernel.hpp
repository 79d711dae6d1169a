#pragma once

#include <cstddef>
#include <span>

namespace ntarp::detail {

// z = X a for a row-major rows x width matrix. Shared by the serial and the
// parallel fit so both produce identical floating-point values.
inline void project_rows(std::span<const double> matrix, std::size_t width,
                         std::span<const double> direction, std::span<double> z) {
  const std::size_t rows = z.size();
  for (std::size_t i = 0; i < rows; ++i) {
    const double* r = matrix.data() + i * width;
    double acc = 0.0;
    for (std::size_t j = 0; j < width; ++j) acc += r[j] * direction[j];
    z[i] = acc;
  }
}

}  // namespace ntarp::detail
