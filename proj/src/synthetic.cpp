#include "ntarp/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ntarp/error.hpp"

namespace ntarp {

void SyntheticModel::validate() const {
  if (p_plus.empty()) throw ConfigError("synthetic model needs at least one dimension");
  if (p_plus.size() != p_minus.size()) throw ConfigError("class parameter vectors differ in length");
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!std::all_of(p_plus.begin(), p_plus.end(), in_unit) ||
      !std::all_of(p_minus.begin(), p_minus.end(), in_unit)) {
    throw ConfigError("Bernoulli parameters must lie in [0, 1]");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ConfigError("sigma must be finite and >= 0");
}

Dataset sample(const SyntheticModel& model, std::size_t count, std::uint64_t seed) {
  model.validate();
  if (count == 0 || count % 2 != 0) throw ConfigError("sample size must be positive and even");

  const std::size_t d = model.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, model.sigma > 0.0 ? model.sigma : 1.0);

  std::vector<double> rows(count * d);
  std::vector<Label> labels(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Label y = i % 2 == 0 ? 1 : -1;
    const auto& p = y > 0 ? model.p_plus : model.p_minus;
    labels[i] = y;
    for (std::size_t j = 0; j < d; ++j) {
      double v = unit(rng) < p[j] ? 1.0 : 0.0;
      if (model.sigma > 0.0) v += noise(rng);
      rows[i * d + j] = v;
    }
  }

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> shuffled(count * d);
  std::vector<Label> shuffled_labels(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::copy_n(rows.begin() + static_cast<std::ptrdiff_t>(order[i] * d), d,
                shuffled.begin() + static_cast<std::ptrdiff_t>(i * d));
    shuffled_labels[i] = labels[order[i]];
  }
  return Dataset(d, std::move(shuffled), std::move(shuffled_labels));
}

std::vector<SyntheticModel> schedule(std::size_t steps, double sigma, std::size_t dim) {
  if (steps < 2) throw ConfigError("schedule needs at least two steps");
  if (dim < 1) throw ConfigError("schedule dimension must be positive");

  const std::size_t low = (dim - 1) / 2;
  std::vector<double> start(dim, 0.8);
  std::vector<double> end(dim, 0.25);
  std::fill_n(start.begin(), low, 0.25);
  std::fill_n(end.begin(), low, 0.8);
  start.back() = 1.0;
  end.back() = 1.0;

  std::vector<SyntheticModel> models;
  models.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    const double w = static_cast<double>(t) / static_cast<double>(steps - 1);
    SyntheticModel m{start, start, sigma};
    for (std::size_t j = 0; j < dim; ++j) {
      m.p_minus[j] = t + 1 == steps ? end[j] : start[j] + w * (end[j] - start[j]);
    }
    m.validate();
    models.push_back(std::move(m));
  }
  return models;
}

}  // namespace ntarp
