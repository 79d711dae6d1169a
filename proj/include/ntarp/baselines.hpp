#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ntarp/dataset.hpp"

namespace ntarp {

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;

  // sign(w . x + b), sign(0) = +1.
  Label predict(std::span<const double> x) const;
};

struct LogisticOptions {
  double l2 = 0.0;
  std::size_t iterations = 2000;
  double step = 0.1;
  // Optimize on z-scored features; the returned model is mapped back to
  // the original coordinates.
  bool standardize = true;
};

struct SvmOptions {
  double lambda = 1e-4;
  std::size_t epochs = 200;
  std::uint64_t seed = 0;
  bool standardize = true;
};

// Full-batch gradient descent on mean logistic loss + l2/2 |w|^2, from zero.
// Throws ConfigError if the loss becomes non-finite.
LinearModel fit_logistic(const Dataset& data, const LogisticOptions& options = {});

// Pegasos stochastic subgradient descent on lambda/2 |(w, b)|^2 + mean hinge
// loss, one shuffled pass per epoch. Returns the average iterate of the last
// epoch. If trace is given, it receives the objective of each epoch's average
// iterate.
LinearModel fit_linear_svm(const Dataset& data, const SvmOptions& options = {},
                           std::vector<double>* trace = nullptr);

double logistic_loss(const LinearModel& model, const Dataset& data, double l2 = 0.0);
double svm_objective(const LinearModel& model, const Dataset& data, double lambda);

}  // namespace ntarp
