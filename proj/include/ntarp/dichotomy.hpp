#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ntarp/dataset.hpp"

namespace ntarp {

struct Dichotomy {
  std::vector<Label> bits;
  friend auto operator<=>(const Dichotomy&, const Dichotomy&) = default;
};

std::size_t hamming_distance(const Dichotomy& a, const Dichotomy& b);

// Label vectors produced by orientation * sign(direction . x - t) as t sweeps
// from -inf to +inf, in sweep order. Rows with equal projections switch
// together, so ties shorten the chain below N + 1.
std::vector<Dichotomy> dichotomy_chain(std::span<const double> direction, const Dataset& data,
                                       int orientation);

}  // namespace ntarp
