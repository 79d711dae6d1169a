#include "ntarp/dichotomy.hpp"

#include <algorithm>
#include <numeric>

#include "ntarp/error.hpp"
#include "projection_kernel.hpp"

namespace ntarp {

std::size_t hamming_distance(const Dichotomy& a, const Dichotomy& b) {
  if (a.bits.size() != b.bits.size()) throw ConfigError("dichotomies of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) d += a.bits[i] != b.bits[i];
  return d;
}

std::vector<Dichotomy> dichotomy_chain(std::span<const double> direction, const Dataset& data,
                                       int orientation) {
  if (direction.size() != data.dim()) throw ConfigError("direction length does not match the data");
  if (orientation != 1 && orientation != -1) throw ConfigError("orientation must be -1 or +1");

  std::vector<double> z(data.size());
  detail::project_rows(data.features(), data.dim(), direction, z);
  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return z[a] < z[b]; });

  std::vector<Dichotomy> chain;
  Dichotomy current{std::vector<Label>(z.size(), orientation)};
  chain.push_back(current);
  for (std::size_t i = 0; i < order.size();) {
    const double v = z[order[i]];
    for (; i < order.size() && z[order[i]] == v; ++i) current.bits[order[i]] = -orientation;
    chain.push_back(current);
  }
  return chain;
}

}  // namespace ntarp
