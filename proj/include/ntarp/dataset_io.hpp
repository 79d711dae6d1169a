#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ntarp/dataset.hpp"

namespace ntarp {

inline constexpr std::size_t kDigitPixels = 64;

// 8x8 digit images with pixel values in [0, 16] and digit labels in [0, 9].
struct LabeledDigits {
  std::vector<int> pixels;  // row-major, size() x 64
  std::vector<int> digits;

  std::size_t size() const noexcept { return digits.size(); }
  friend bool operator==(const LabeledDigits&, const LabeledDigits&) = default;
};

// Reads comma-separated lines of 64 pixel values followed by the digit.
// Blank lines are skipped. Throws DataError naming the source and line on
// any malformed or out-of-range record, or if nothing was read.
LabeledDigits load_optdigits(std::istream& in, std::string_view source = "<stream>");
LabeledDigits load_optdigits(const std::string& path);
// Concatenates several files in order (e.g. the training and test halves).
LabeledDigits load_optdigits(const std::vector<std::string>& paths);
void write_optdigits(const LabeledDigits& digits, std::ostream& out);

enum class DigitTask { EvenOdd, SmallLarge, ZeroOne };

DigitTask parse_task(std::string_view name);  // "even_odd", "small_large", "zero_one"
std::string_view task_name(DigitTask task);

// Binary labels: odd -> +1, even -> -1; digit <= 4 -> +1, digit > 4 -> -1;
// zero -> +1, one -> -1 (other digits dropped).
Dataset relabel(const LabeledDigits& digits, DigitTask task);

// Uniformly random partition into n_train training rows and the rest.
std::pair<Dataset, Dataset> split(const Dataset& data, std::size_t n_train, std::uint64_t seed);

// Dataset CSV: header f0,...,f{d-1},label then one row per point, values
// printed with 17 significant digits.
void write_csv(const Dataset& data, std::ostream& out);
Dataset read_csv(std::istream& in, std::string_view source = "<stream>");
Dataset read_csv(const std::string& path);

}  // namespace ntarp
