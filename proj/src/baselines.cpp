#include "ntarp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ntarp/error.hpp"

namespace ntarp {

namespace {

// Affine change of coordinates x' = (x - mean) / scale.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;

  static Standardizer identity(std::size_t d) { return {std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)}; }

  static Standardizer fit(const Dataset& data) {
    const std::size_t d = data.dim();
    const auto n = static_cast<double>(data.size());
    Standardizer s{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
    for (std::size_t i = 0; i < data.size(); ++i) {
      auto r = data.row(i);
      for (std::size_t j = 0; j < d; ++j) s.mean[j] += r[j];
    }
    for (auto& m : s.mean) m /= n;
    for (std::size_t i = 0; i < data.size(); ++i) {
      auto r = data.row(i);
      for (std::size_t j = 0; j < d; ++j) s.scale[j] += (r[j] - s.mean[j]) * (r[j] - s.mean[j]);
    }
    for (auto& v : s.scale) {
      v = std::sqrt(v / n);
      if (!(v > 0.0)) v = 1.0;
    }
    return s;
  }

  std::vector<double> apply(const Dataset& data) const {
    const std::size_t d = data.dim();
    std::vector<double> out(data.size() * d);
    for (std::size_t i = 0; i < data.size(); ++i) {
      auto r = data.row(i);
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] = (r[j] - mean[j]) / scale[j];
    }
    return out;
  }

  LinearModel unmap(std::vector<double> w, double b) const {
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[j] /= scale[j];
      b -= w[j] * mean[j];
    }
    return {std::move(w), b};
  }
};

double dot(const double* x, const std::vector<double>& w) {
  double acc = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) acc += x[j] * w[j];
  return acc;
}

// log(1 + exp(-m)) without overflow.
double softplus_neg(double m) { return m > 0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m)); }

double logistic_loss_raw(const std::vector<double>& x, const Dataset& data, const std::vector<double>& w,
                         double b, double l2) {
  const std::size_t d = data.dim();
  double loss = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) loss += softplus_neg(data.label(i) * (dot(&x[i * d], w) + b));
  loss /= static_cast<double>(data.size());
  return loss + 0.5 * l2 * std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
}

double svm_objective_raw(const std::vector<double>& x, const Dataset& data, const std::vector<double>& w,
                         double b, double lambda) {
  const std::size_t d = data.dim();
  double hinge = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    hinge += std::max(0.0, 1.0 - data.label(i) * (dot(&x[i * d], w) + b));
  }
  hinge /= static_cast<double>(data.size());
  const double norm2 = std::inner_product(w.begin(), w.end(), w.begin(), 0.0) + b * b;
  return 0.5 * lambda * norm2 + hinge;
}

std::vector<double> raw_features(const Dataset& data) {
  return {data.features().begin(), data.features().end()};
}

}  // namespace

Label LinearModel::predict(std::span<const double> x) const {
  if (x.size() != weights.size()) throw ConfigError("feature length does not match the model");
  double z = bias;
  for (std::size_t j = 0; j < x.size(); ++j) z += weights[j] * x[j];
  return z >= 0.0 ? 1 : -1;
}

double logistic_loss(const LinearModel& model, const Dataset& data, double l2) {
  if (model.weights.size() != data.dim()) throw ConfigError("feature length does not match the model");
  return logistic_loss_raw(raw_features(data), data, model.weights, model.bias, l2);
}

double svm_objective(const LinearModel& model, const Dataset& data, double lambda) {
  if (model.weights.size() != data.dim()) throw ConfigError("feature length does not match the model");
  return svm_objective_raw(raw_features(data), data, model.weights, model.bias, lambda);
}

LinearModel fit_logistic(const Dataset& data, const LogisticOptions& options) {
  if (!(options.l2 >= 0.0)) throw ConfigError("l2 penalty must be >= 0");
  if (!(options.step > 0.0)) throw ConfigError("step size must be positive");

  const std::size_t d = data.dim();
  const auto n = static_cast<double>(data.size());
  const auto scaler = options.standardize ? Standardizer::fit(data) : Standardizer::identity(d);
  const auto x = scaler.apply(data);

  std::vector<double> w(d, 0.0);
  std::vector<double> grad(d);
  double b = 0.0;
  for (std::size_t it = 0; it < options.iterations; ++it) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_b = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double* row = &x[i * d];
      const double y = data.label(i);
      const double m = y * (dot(row, w) + b);
      // d/dm log(1 + e^{-m}) = -1 / (1 + e^{m})
      const double g = -y / (1.0 + std::exp(m));
      for (std::size_t j = 0; j < d; ++j) grad[j] += g * row[j];
      grad_b += g;
    }
    for (std::size_t j = 0; j < d; ++j) w[j] -= options.step * (grad[j] / n + options.l2 * w[j]);
    b -= options.step * grad_b / n;
  }
  const bool finite = std::isfinite(b) && std::all_of(w.begin(), w.end(), [](double v) { return std::isfinite(v); });
  if (!finite || !std::isfinite(logistic_loss_raw(x, data, w, b, options.l2))) {
    throw ConfigError("logistic regression diverged; reduce the step size");
  }
  return scaler.unmap(std::move(w), b);
}

LinearModel fit_linear_svm(const Dataset& data, const SvmOptions& options, std::vector<double>* trace) {
  if (!(options.lambda > 0.0)) throw ConfigError("SVM regularization must be positive");
  if (options.epochs == 0) throw ConfigError("SVM needs at least one epoch");

  const std::size_t d = data.dim();
  const auto scaler = options.standardize ? Standardizer::fit(data) : Standardizer::identity(d);
  const auto x = scaler.apply(data);
  const double radius = 1.0 / std::sqrt(options.lambda);

  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  // The bias is the weight of a constant feature and is regularized with w.
  std::vector<double> w(d, 0.0);
  double b = 0.0;
  std::vector<double> avg_w(d);
  double avg_b = 0.0;
  std::size_t t = 0;
  if (trace) trace->clear();

  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    std::fill(avg_w.begin(), avg_w.end(), 0.0);
    avg_b = 0.0;
    for (auto i : order) {
      ++t;
      const double eta = 1.0 / (options.lambda * static_cast<double>(t));
      const double* row = &x[i * d];
      const double y = data.label(i);
      const bool violated = y * (dot(row, w) + b) < 1.0;
      const double shrink = 1.0 - eta * options.lambda;
      for (auto& v : w) v *= shrink;
      b *= shrink;
      if (violated) {
        for (std::size_t j = 0; j < d; ++j) w[j] += eta * y * row[j];
        b += eta * y;
      }
      const double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0) + b * b);
      if (norm > radius) {
        const double s = radius / norm;
        for (auto& v : w) v *= s;
        b *= s;
      }
      for (std::size_t j = 0; j < d; ++j) avg_w[j] += w[j];
      avg_b += b;
    }
    const auto count = static_cast<double>(data.size());
    for (auto& v : avg_w) v /= count;
    avg_b /= count;
    if (trace) trace->push_back(svm_objective_raw(x, data, avg_w, avg_b, options.lambda));
  }
  if (!std::isfinite(svm_objective_raw(x, data, avg_w, avg_b, options.lambda))) {
    throw ConfigError("SVM objective is not finite");
  }
  return scaler.unmap(std::move(avg_w), avg_b);
}

}  // namespace ntarp
