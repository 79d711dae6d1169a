#include "ntarp/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "ntarp/error.hpp"

namespace ntarp {

namespace {

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  // from_chars for double is unavailable in older libstdc++.
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

}  // namespace

LabeledDigits load_optdigits(std::istream& in, std::string_view source) {
  LabeledDigits out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != kDigitPixels + 1) {
      throw DataError(where(source, line_no) + "expected " + std::to_string(kDigitPixels + 1) +
                      " fields, found " + std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j <= kDigitPixels; ++j) {
      int v = 0;
      if (!parse_int(fields[j], v)) {
        throw DataError(where(source, line_no) + "field " + std::to_string(j + 1) +
                        " is not an integer");
      }
      const int hi = j < kDigitPixels ? 16 : 9;
      if (v < 0 || v > hi) {
        throw DataError(where(source, line_no) + "field " + std::to_string(j + 1) +
                        " out of range [0, " + std::to_string(hi) + "]");
      }
      (j < kDigitPixels ? out.pixels : out.digits).push_back(v);
    }
  }
  if (out.digits.empty()) throw DataError(std::string(source) + ": no records");
  return out;
}

LabeledDigits load_optdigits(const std::string& path) {
  auto in = open_or_throw(path);
  return load_optdigits(in, path);
}

LabeledDigits load_optdigits(const std::vector<std::string>& paths) {
  if (paths.empty()) throw DataError("no digits file given");
  LabeledDigits all;
  for (const auto& p : paths) {
    auto part = load_optdigits(p);
    all.pixels.insert(all.pixels.end(), part.pixels.begin(), part.pixels.end());
    all.digits.insert(all.digits.end(), part.digits.begin(), part.digits.end());
  }
  return all;
}

void write_optdigits(const LabeledDigits& digits, std::ostream& out) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    for (std::size_t j = 0; j < kDigitPixels; ++j) out << digits.pixels[i * kDigitPixels + j] << ',';
    out << digits.digits[i] << '\n';
  }
}

DigitTask parse_task(std::string_view name) {
  if (name == "even_odd") return DigitTask::EvenOdd;
  if (name == "small_large") return DigitTask::SmallLarge;
  if (name == "zero_one") return DigitTask::ZeroOne;
  throw ConfigError("unknown task '" + std::string(name) + "' (even_odd, small_large, zero_one)");
}

std::string_view task_name(DigitTask task) {
  switch (task) {
    case DigitTask::EvenOdd: return "even_odd";
    case DigitTask::SmallLarge: return "small_large";
    case DigitTask::ZeroOne: return "zero_one";
  }
  return "unknown";
}

Dataset relabel(const LabeledDigits& digits, DigitTask task) {
  std::vector<double> features;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int digit = digits.digits[i];
    Label y = 0;
    switch (task) {
      case DigitTask::EvenOdd: y = digit % 2 == 1 ? 1 : -1; break;
      case DigitTask::SmallLarge: y = digit <= 4 ? 1 : -1; break;
      case DigitTask::ZeroOne:
        if (digit > 1) continue;
        y = digit == 0 ? 1 : -1;
        break;
    }
    const auto first = digits.pixels.begin() + static_cast<std::ptrdiff_t>(i * kDigitPixels);
    features.insert(features.end(), first, first + static_cast<std::ptrdiff_t>(kDigitPixels));
    labels.push_back(y);
  }
  if (labels.empty()) throw DataError("task '" + std::string(task_name(task)) + "' selects no rows");
  return Dataset(kDigitPixels, std::move(features), std::move(labels));
}

std::pair<Dataset, Dataset> split(const Dataset& data, std::size_t n_train, std::uint64_t seed) {
  if (n_train == 0 || n_train >= data.size()) {
    throw ConfigError("training size must lie in [1, " + std::to_string(data.size() - 1) + "]");
  }
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  const std::span<const std::size_t> all(order);
  return {data.subset(all.first(n_train)), data.subset(all.subspan(n_train))};
}

void write_csv(const Dataset& data, std::ostream& out) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t j = 0; j < data.dim(); ++j) s << 'f' << j << ',';
  s << "label\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (double v : data.row(i)) s << v << ',';
    s << data.label(i) << '\n';
  }
  out << s.str();
}

Dataset read_csv(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw DataError(std::string(source) + ": empty file");
  const auto header = split_fields(trim(line));
  if (header.size() < 2 || trim(header.back()) != "label") {
    throw DataError(where(source, 1) + "header must be f0,...,f{d-1},label");
  }
  const std::size_t d = header.size() - 1;
  std::vector<double> features;
  std::vector<Label> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != d + 1) {
      throw DataError(where(source, line_no) + "expected " + std::to_string(d + 1) + " fields");
    }
    for (std::size_t j = 0; j < d; ++j) {
      double v = 0.0;
      if (!parse_double(fields[j], v)) {
        throw DataError(where(source, line_no) + "field " + std::to_string(j + 1) + " is not a number");
      }
      features.push_back(v);
    }
    int y = 0;
    if (!parse_int(fields[d], y) || (y != 1 && y != -1)) {
      throw DataError(where(source, line_no) + "label must be -1 or 1");
    }
    labels.push_back(y);
  }
  if (labels.empty()) throw DataError(std::string(source) + ": no rows");
  try {
    return Dataset(d, std::move(features), std::move(labels));
  } catch (const DataError& e) {
    throw DataError(std::string(source) + ": " + e.what());
  }
}

Dataset read_csv(const std::string& path) {
  auto in = open_or_throw(path);
  return read_csv(in, path);
}

}  // namespace ntarp
