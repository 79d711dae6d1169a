#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ntarp/dataset.hpp"

namespace ntarp {

// Two-class model: coordinate i of a class-c point is Bernoulli(p_c[i]) plus
// N(0, sigma^2) noise, all coordinates independent.
struct SyntheticModel {
  std::vector<double> p_plus;
  std::vector<double> p_minus;
  double sigma = 0.0;

  std::size_t dim() const noexcept { return p_plus.size(); }
  void validate() const;  // throws ConfigError
};

// Draws N/2 points of each class (N must be even). Rows are generated with
// alternating labels and then shuffled, all from one generator seeded by seed.
Dataset sample(const SyntheticModel& model, std::size_t count, std::uint64_t seed);

// Interpolation from fully mixed classes to swapped parameters. With
// h = (dim - 1) / 2, p_plus = (0.25 x h, 0.8 x (dim - 1 - h), 1) at every
// step and p_minus moves linearly from p_plus (step 0) to
// (0.8 x h, 0.25 x (dim - 1 - h), 1) (last step).
std::vector<SyntheticModel> schedule(std::size_t steps, double sigma = 0.0, std::size_t dim = 65);

}  // namespace ntarp
