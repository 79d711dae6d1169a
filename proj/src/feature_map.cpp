#include "ntarp/feature_map.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "ntarp/error.hpp"

namespace ntarp {

namespace {

constexpr std::size_t kMaxExact = std::size_t{1} << 53;
// Largest map we are willing to materialize.
constexpr std::size_t kMaxMonomials = std::size_t{1} << 24;

// Appends every exponent vector of total degree `degree` in descending
// lexicographic order.
void enumerate_degree(std::size_t d, std::size_t degree, std::vector<std::uint16_t>& current,
                      std::size_t pos, std::vector<std::vector<std::uint16_t>>& out) {
  if (pos + 1 == d) {
    current[pos] = static_cast<std::uint16_t>(degree);
    out.push_back(current);
    return;
  }
  for (std::size_t p = degree + 1; p-- > 0;) {
    current[pos] = static_cast<std::uint16_t>(p);
    enumerate_degree(d, degree - p, current, pos + 1, out);
  }
  current[pos] = 0;
}

}  // namespace

std::size_t extended_dim(std::size_t d, std::size_t k) {
  if (d == 0) throw ConfigError("input dimension must be positive");
  const std::size_t m = std::min(d, k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    // result * num is divisible by i; cancel the common factor first.
    const std::size_t num = d + k - m + i;
    const std::size_t g = std::gcd(result, i);
    const std::size_t factor = num / (i / g);
    if (factor != 0 && result / g > kMaxExact / factor) {
      throw RangeError("C(" + std::to_string(d + k) + ", " + std::to_string(k) +
                       ") exceeds the exact integer range");
    }
    result = result / g * factor;
    if (result > kMaxExact) {
      throw RangeError("C(" + std::to_string(d + k) + ", " + std::to_string(k) +
                       ") exceeds the exact integer range");
    }
  }
  return result;
}

PolyFeatureMap::PolyFeatureMap(std::size_t d, std::size_t k) : d_(d), k_(k) {
  const std::size_t total = extended_dim(d, k);
  if (total > kMaxMonomials) {
    throw RangeError("feature map with " + std::to_string(total) + " monomials is too large");
  }
  if (k > std::numeric_limits<std::uint16_t>::max()) throw RangeError("order too large");

  exponents_.reserve(total);
  powers_.reserve(total * d);

  std::map<std::vector<std::uint16_t>, std::size_t> index;
  std::vector<std::uint16_t> current(d, 0);
  for (std::size_t degree = 0; degree <= k; ++degree) {
    std::vector<std::vector<std::uint16_t>> level;
    enumerate_degree(d, degree, current, 0, level);
    for (auto& e : level) {
      Term t{0, 0, degree};
      if (degree > 0) {
        t.var = static_cast<std::size_t>(
            std::find_if(e.begin(), e.end(), [](auto p) { return p != 0; }) - e.begin());
        auto parent = e;
        --parent[t.var];
        t.parent = index.at(parent);
      }
      index.emplace(e, exponents_.size());
      exponents_.push_back(t);
      powers_.insert(powers_.end(), e.begin(), e.end());
    }
    // Only the previous degree is ever looked up as a parent.
    if (degree > 0) {
      std::erase_if(index, [&](const auto& kv) { return exponents_[kv.second].degree + 1 < degree; });
    }
  }
}

void PolyFeatureMap::expand_into(std::span<const double> x, std::span<double> out) const {
  if (x.size() != d_) {
    throw ConfigError("expected a vector of length " + std::to_string(d_) + ", got " +
                      std::to_string(x.size()));
  }
  if (out.size() != exponents_.size()) throw ConfigError("output buffer has the wrong length");
  out[0] = 1.0;
  for (std::size_t j = 1; j < exponents_.size(); ++j) {
    out[j] = out[exponents_[j].parent] * x[exponents_[j].var];
  }
}

std::vector<double> PolyFeatureMap::expand(std::span<const double> x) const {
  std::vector<double> out(output_dim());
  expand_into(x, out);
  return out;
}

std::vector<double> expand_rows_serial(const PolyFeatureMap& map, const Dataset& data) {
  if (data.dim() != map.input_dim()) throw ConfigError("dataset dimension does not match the map");
  const std::size_t width = map.output_dim();
  std::vector<double> out(data.size() * width);
  for (std::size_t i = 0; i < data.size(); ++i) {
    map.expand_into(data.row(i), std::span<double>(out.data() + i * width, width));
  }
  return out;
}

std::vector<double> expand_rows(const PolyFeatureMap& map, const Dataset& data) {
  if (data.dim() != map.input_dim()) throw ConfigError("dataset dimension does not match the map");
  const std::size_t width = map.output_dim();
  const auto rows = static_cast<std::ptrdiff_t>(data.size());
  std::vector<double> out(data.size() * width);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    map.expand_into(data.row(r), std::span<double>(out.data() + r * width, width));
  }
  return out;
}

}  // namespace ntarp
