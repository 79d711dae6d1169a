#pragma once

#include <cstddef>
#include <map>
#include <string>

namespace ntarp::bounds {

// Sample count N, projection count n, input dimension d, expansion order k,
// VC dimension and confidence parameter delta.
struct BoundConfig {
  double samples = 10000;
  double projections = 1;
  std::size_t dim = 1;
  std::size_t order = 1;
  double vc_dim = 1;
  double delta = 0.1;

  void validate() const;  // throws ConfigError
};

struct BoundReport {
  BoundConfig config;
  std::map<std::string, double> values;
};

// High-probability bounds on sup |population error - training error|.

// sqrt(8/N ln(16 n N / delta)): growth function of n projections <= 4nN on 2N points.
double tarp_gap_bound(double samples, double projections, double delta);
// sqrt(8/N ln(4 (2eN/d_vc)^d_vc / delta)), evaluated in log space.
double vc_gap_bound(double samples, double vc_dim, double delta);
// Uses min(4nN, (2Ne/(d+1))^(d+1)) as the growth estimate.
double combined_gap_bound(double samples, double projections, std::size_t dim, double delta);
// Projection count above which the affine-classifier growth estimate wins:
// (2Ne/exponent)^exponent / (4N). Affine classifiers in d dimensions use
// exponent d + 1.
double crossover_n(double samples, double exponent);

// Bounds on the expected gap.
double tarp_expected_gap_bound(double samples, double projections);
double vc_expected_gap_bound_sauer(double samples, double vc_dim);
double chaining_tarp_bound(double samples, double projections);
double chaining_vc_bound(double samples, double vc_dim);

// Integral of sqrt(ln n + ln(2/r^2 + 2)) over r in (0, 1], absolute error <= 1e-6.
double chaining_integral(double projections);
// ceil(2N / (2i + 1)): covering number of one projection's chain at radius sqrt(i/N).
std::size_t covering_number_bound(std::size_t samples, std::size_t radius_index);

// Asymptotic (N -> inf) ratio of the chaining bounds, tarp over VC.
double ratio_limit(double projections, double vc_dim);
// Largest n for which the chaining tarp bound beats the VC chaining bound.
double max_projections_for_vc(double vc_dim);

// Projections needed so that, with probability >= 1 - delta, some direction
// falls in the cap around the optimal one (dimension C(d+k, k) >= 2).
double required_projections(std::size_t dim, std::size_t order, double delta);

// sqrt(ln(2/delta) / (2N)): two-sided Hoeffding deviation at confidence 1 - delta.
double hoeffding_deviation(double samples, double delta);

// Every bound above evaluated for one configuration.
BoundReport report(const BoundConfig& config);

}  // namespace ntarp::bounds
