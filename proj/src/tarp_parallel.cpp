#include <algorithm>

#include "ntarp/error.hpp"
#include "ntarp/tarp.hpp"
#include "ntarp/threshold.hpp"
#include "projection_kernel.hpp"

namespace ntarp {

namespace {

// Directions generated ahead of each parallel sweep.
constexpr std::size_t kBlockSize = 2048;

}  // namespace

TarpModel fit(const Dataset& data, const FitOptions& options) {
  if (options.projections == 0) throw ConfigError("number of projections must be at least 1");

  TarpModel model;
  model.feature_map = PolyFeatureMap(data.dim(), options.order);
  model.projections = options.projections;
  model.seed = options.seed;
  model.per_projection_errors.resize(options.projections);

  const std::size_t width = model.feature_map.output_dim();
  const std::size_t rows = data.size();
  const auto features = expand_rows(model.feature_map, data);
  const auto labels = data.labels();
  DirectionStream stream(options.seed, width);

  std::vector<double> directions;
  std::vector<ThresholdFit> fits(std::min(kBlockSize, options.projections));
  bool have_best = false;

  for (std::size_t start = 0; start < options.projections; start += kBlockSize) {
    const std::size_t count = std::min(kBlockSize, options.projections - start);
    stream.fill(count, directions);

#pragma omp parallel
    {
      std::vector<double> z(rows);
      ThresholdSearch search;
#pragma omp for schedule(static)
      for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(count); ++b) {
        const auto p = static_cast<std::size_t>(b);
        detail::project_rows(features, width,
                             std::span<const double>(directions.data() + p * width, width), z);
        fits[p] = search(z, labels);
      }
    }

    // Ordered reduction keeps the lowest index among ties.
    for (std::size_t p = 0; p < count; ++p) {
      model.per_projection_errors[start + p] = fits[p].error_count;
      if (!have_best || fits[p].error_count < model.stump.error_count) {
        have_best = true;
        model.stump = ProjectionStump{
            std::vector<double>(directions.begin() + static_cast<std::ptrdiff_t>(p * width),
                                directions.begin() + static_cast<std::ptrdiff_t>((p + 1) * width)),
            fits[p].threshold, fits[p].orientation, fits[p].error_count, rows};
      }
    }
  }
  return model;
}

}  // namespace ntarp
