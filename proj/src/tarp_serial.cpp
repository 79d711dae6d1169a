#include <string>

#include "ntarp/error.hpp"
#include "ntarp/tarp.hpp"
#include "ntarp/threshold.hpp"
#include "projection_kernel.hpp"

namespace ntarp {

TarpModel fit_serial(const Dataset& data, const FitOptions& options) {
  if (options.projections == 0) throw ConfigError("number of projections must be at least 1");

  TarpModel model;
  model.feature_map = PolyFeatureMap(data.dim(), options.order);
  model.projections = options.projections;
  model.seed = options.seed;
  model.per_projection_errors.resize(options.projections);

  const std::size_t width = model.feature_map.output_dim();
  const auto features = expand_rows_serial(model.feature_map, data);
  std::vector<double> z(data.size());
  ThresholdSearch search;
  DirectionStream stream(options.seed, width);

  for (std::size_t p = 0; p < options.projections; ++p) {
    auto direction = stream.next();
    detail::project_rows(features, width, direction, z);
    const auto fit = search(z, data.labels());
    model.per_projection_errors[p] = fit.error_count;
    if (p == 0 || fit.error_count < model.stump.error_count) {
      model.stump = ProjectionStump{std::move(direction), fit.threshold, fit.orientation,
                                    fit.error_count, data.size()};
    }
  }
  return model;
}

}  // namespace ntarp
