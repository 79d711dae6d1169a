#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "ntarp/dataset.hpp"
#include "ntarp/feature_map.hpp"

namespace ntarp {

// Uniform draw from the unit sphere S^{dim-1}: standard normal components,
// normalized. An all-zero draw is discarded and redrawn.
std::vector<double> sample_direction(std::mt19937_64& rng, std::size_t dim);

// Seeded sequence of directions. Index i of the stream depends only on the
// seed, so a stream of n directions is a prefix of any longer one.
class DirectionStream {
 public:
  DirectionStream(std::uint64_t seed, std::size_t dim) : rng_(seed), dim_(dim) {}

  std::vector<double> next() { return sample_direction(rng_, dim_); }
  // Writes the next count directions contiguously into out (count * dim values).
  void fill(std::size_t count, std::vector<double>& out);

 private:
  std::mt19937_64 rng_;
  std::size_t dim_;
};

// One projection direction with its fitted threshold rule.
struct ProjectionStump {
  std::vector<double> direction;
  double threshold = 0.0;
  int orientation = 1;
  std::size_t error_count = 0;
  std::size_t sample_count = 0;

  double train_error() const noexcept {
    return sample_count == 0 ? 0.0
                             : static_cast<double>(error_count) / static_cast<double>(sample_count);
  }
  // orientation * sign(direction . features - threshold); sign(0) = +1.
  Label classify(std::span<const double> expanded) const;

  friend bool operator==(const ProjectionStump&, const ProjectionStump&) = default;
};

struct FitOptions {
  std::size_t order = 1;        // k
  std::size_t projections = 1;  // n
  std::uint64_t seed = 0;
};

// Best-of-n projection classifier.
struct TarpModel {
  PolyFeatureMap feature_map{1, 0};
  ProjectionStump stump;
  std::size_t projections = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> per_projection_errors;  // misclassification counts

  Label predict(std::span<const double> x) const;
  std::vector<Label> predict_all(const Dataset& data) const;

  friend bool operator==(const TarpModel&, const TarpModel&) = default;
};

// Fits the classifier. Directions are drawn sequentially from the seed in
// blocks and evaluated in parallel; the lowest index wins among equally good
// projections, so the result equals fit_serial bit for bit.
TarpModel fit(const Dataset& data, const FitOptions& options);

// Single-threaded reference implementation of fit.
TarpModel fit_serial(const Dataset& data, const FitOptions& options);

// Fraction of rows where classify(row) != label.
template <typename Classifier>
double empirical_error(const Classifier& classify, const Dataset& data) {
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (classify(data.row(i)) != data.label(i)) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

// Text serialization: one "name value..." line per field, decimal values
// printed with 17 significant digits.
void save_model(const TarpModel& model, std::ostream& out);
TarpModel load_model(std::istream& in);

}  // namespace ntarp
