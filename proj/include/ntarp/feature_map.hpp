#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ntarp/dataset.hpp"

namespace ntarp {

// C(d+k, k): number of monomials of total degree <= k in d variables.
// Throws ConfigError for d == 0 and RangeError when the value does not fit
// in 53 bits (the range where size_t and double agree exactly).
std::size_t extended_dim(std::size_t d, std::size_t k);

// Polynomial feature map x -> (1, x1, ..., xd, x1^2, x1 x2, ..., xd^k).
//
// Monomials are listed in graded lexicographic order: ascending total degree,
// and within one degree, descending powers of the earlier variables
// (x1^2 before x1 x2 before x2^2). The first monomial is always the constant.
class PolyFeatureMap {
 public:
  PolyFeatureMap(std::size_t d, std::size_t k);

  std::size_t input_dim() const noexcept { return d_; }
  std::size_t order() const noexcept { return k_; }
  std::size_t output_dim() const noexcept { return exponents_.size(); }

  // Exponent vector of monomial j, length input_dim().
  std::span<const std::uint16_t> exponent(std::size_t j) const noexcept {
    return {powers_.data() + j * d_, d_};
  }
  std::size_t degree(std::size_t j) const noexcept { return exponents_[j].degree; }

  std::vector<double> expand(std::span<const double> x) const;
  // Writes output_dim() values into out. x.size() must equal input_dim().
  void expand_into(std::span<const double> x, std::span<double> out) const;

  friend bool operator==(const PolyFeatureMap& a, const PolyFeatureMap& b) {
    return a.d_ == b.d_ && a.k_ == b.k_;
  }

 private:
  // Monomial j = (monomial parent) * x[var]; the constant has no parent.
  struct Term {
    std::size_t parent;
    std::size_t var;
    std::size_t degree;
  };

  std::size_t d_;
  std::size_t k_;
  std::vector<Term> exponents_;
  std::vector<std::uint16_t> powers_;
};

// Convenience constructor mirroring extended_dim.
inline PolyFeatureMap build_map(std::size_t d, std::size_t k) { return PolyFeatureMap(d, k); }

// Expands every row of the dataset: row-major N x output_dim() matrix.
std::vector<double> expand_rows(const PolyFeatureMap& map, const Dataset& data);
// Serial reference for expand_rows.
std::vector<double> expand_rows_serial(const PolyFeatureMap& map, const Dataset& data);

}  // namespace ntarp
