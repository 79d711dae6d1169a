#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ntarp {

using Label = int;  // always -1 or +1

// N x d feature matrix (row-major) with binary labels.
class Dataset {
 public:
  Dataset() = default;
  // Throws DataError unless rows >= 1, every value is finite, labels are +-1
  // and the sizes agree.
  Dataset(std::size_t dim, std::vector<double> features, std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t dim() const noexcept { return dim_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {features_.data() + i * dim_, dim_};
  }
  Label label(std::size_t i) const noexcept { return labels_[i]; }

  std::span<const double> features() const noexcept { return features_; }
  std::span<const Label> labels() const noexcept { return labels_; }

  // Rows selected by index, in the given order.
  Dataset subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> features_;
  std::vector<Label> labels_;
};

}  // namespace ntarp
