#include "ntarp/dataset.hpp"

#include <cmath>
#include <string>

#include "ntarp/error.hpp"

namespace ntarp {

Dataset::Dataset(std::size_t dim, std::vector<double> features, std::vector<Label> labels)
    : dim_(dim), features_(std::move(features)), labels_(std::move(labels)) {
  if (labels_.empty()) throw DataError("dataset must contain at least one row");
  if (dim_ == 0) throw DataError("dataset dimension must be positive");
  if (features_.size() != labels_.size() * dim_) {
    throw DataError("feature matrix has " + std::to_string(features_.size()) +
                    " values, expected " + std::to_string(labels_.size() * dim_));
  }
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (!std::isfinite(features_[i])) {
      throw DataError("non-finite feature in row " + std::to_string(i / dim_));
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] != 1 && labels_[i] != -1) {
      throw DataError("label in row " + std::to_string(i) + " is not -1 or +1");
    }
  }
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<double> f;
  std::vector<Label> y;
  f.reserve(indices.size() * dim_);
  y.reserve(indices.size());
  for (auto i : indices) {
    if (i >= size()) throw ConfigError("subset index out of range");
    auto r = row(i);
    f.insert(f.end(), r.begin(), r.end());
    y.push_back(labels_[i]);
  }
  return Dataset(dim_, std::move(f), std::move(y));
}

}  // namespace ntarp
