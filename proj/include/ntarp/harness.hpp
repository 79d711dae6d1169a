#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ntarp/dataset.hpp"
#include "ntarp/dataset_io.hpp"

namespace ntarp::harness {

// splitmix64 mix of a base seed with up to three stream coordinates.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

// ---- bound tables -------------------------------------------------------

struct BoundsTableConfig {
  double delta = 0.1;
  double samples = 10000;
  std::size_t d_min = 2;
  std::size_t d_max = 10;
  // One projection count per dimension; empty means use required_projections(d, 1, delta).
  std::vector<double> projections;
};

struct BoundsRow {
  std::size_t dim = 0;
  double required_n = 0;
  double n = 0;
  double tarp_gap = 0;
  double vc_gap = 0;  // VC dimension d + 1
};

std::vector<BoundsRow> bounds_table(const BoundsTableConfig& config);
void write_bounds_table(std::span<const BoundsRow> rows, std::ostream& out);

struct BudgetRow {
  std::size_t vc_dim = 0;
  double max_projections = 0;
  double floor_value = 0;
};

std::vector<BudgetRow> projection_budget_table(std::size_t vc_max = 5);
void write_budget_table(std::span<const BudgetRow> rows, std::ostream& out);

struct GapCurveConfig {
  double samples = 10000;
  std::size_t n_max = 1000;
  std::vector<double> vc_dims{2, 3};
};

struct GapCurvePoint {
  std::size_t n = 0;
  double tarp = 0;
  std::vector<double> vc;  // one per GapCurveConfig::vc_dims
};

std::vector<GapCurvePoint> expected_gap_curve(const GapCurveConfig& config);
void write_gap_curve(const GapCurveConfig& config, std::span<const GapCurvePoint> points,
                     std::ostream& out);

struct CrossoverRow {
  double samples = 0;
  std::size_t dim = 0;
  double exponent = 0;
  double value = 0;
  std::string reading;  // "d_plus_1" or "d"
};

std::vector<CrossoverRow> crossover(double samples, std::size_t dim);
void write_crossover(std::span<const CrossoverRow> rows, std::ostream& out);

// ---- experiments --------------------------------------------------------

inline constexpr const char* kTarp = "ntarp";
inline constexpr const char* kLogistic = "logistic";
inline constexpr const char* kLinearSvm = "linear_svm";

struct RunRecord {
  std::string group;  // schedule step or task name
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  std::string method;
  double train_error = 0;
  double test_error = 0;
  double gap_bound = 0;

  double gap() const noexcept { return test_error - train_error; }
};

// Mean and population standard deviation over repetitions.
struct SummaryRecord {
  std::string group;
  std::string method;
  double mean_train = 0, std_train = 0;
  double mean_test = 0, std_test = 0;
  double mean_gap = 0, std_gap = 0;
  double gap_bound = 0;
};

struct ExperimentResult {
  std::vector<RunRecord> runs;
  std::vector<SummaryRecord> summary;

  const SummaryRecord& find(const std::string& group, const std::string& method) const;
};

struct MethodSettings {
  std::size_t projections = 10000;
  std::size_t order = 1;
  double delta = 0.1;
  std::size_t logistic_iterations = 2000;
  double logistic_step = 0.1;
  double logistic_l2 = 0.0;
  double svm_lambda = 1e-4;
  std::size_t svm_epochs = 200;
};

// Trains the three methods on train and scores them on both sets.
std::vector<RunRecord> evaluate_methods(const Dataset& train, const Dataset& test,
                                        const MethodSettings& settings, std::uint64_t seed);

struct SyntheticConfig {
  double sigma = 0.0;
  std::size_t steps = 20;
  std::size_t reps = 5;
  std::size_t dim = 65;
  std::size_t train_size = 200;
  std::size_t test_size = 2000;
  std::uint64_t seed = 1;
  MethodSettings methods;
};

ExperimentResult run_synthetic(const SyntheticConfig& config);

struct DigitsConfig {
  DigitTask task = DigitTask::EvenOdd;
  std::size_t train_size = 200;
  std::size_t reps = 10;
  std::uint64_t seed = 1;
  MethodSettings methods{20000};
};

// Task defaults: even_odd and small_large use n = 20000 with 200 training
// points, zero_one uses n = 2000 with 100 training points.
DigitsConfig digits_preset(DigitTask task);
ExperimentResult run_digits(const DigitsConfig& config, const LabeledDigits& digits);
// Throws DataError unless the corpus has 1797 rows, 906 odd digits,
// 178 zeros and 182 ones.
void check_reference_corpus(const LabeledDigits& digits);

// Header: record,group_name,rep,seed,method,train_error,test_error,gap,gap_bound.
// "run" rows hold single repetitions; "mean" and "std" rows hold summaries.
void write_experiment(const ExperimentResult& result, const std::string& group_name,
                      std::ostream& out);

// ---- zero training error demo ------------------------------------------

// Twenty distinct points on two interleaved half circles, labels +1 / -1.
Dataset two_arcs();
// (0,0),(1,1) -> +1 and (0,1),(1,0) -> -1.
Dataset xor_points();

struct ZeroTrainConfig {
  std::size_t k_max = 4;
  std::size_t projections = 500;
  std::uint64_t seed = 1;
};

struct ZeroTrainRow {
  std::size_t order = 0;
  std::size_t n = 0;
  double train_error = 0;
};

struct ZeroTrainResult {
  std::vector<ZeroTrainRow> rows;
  std::optional<std::size_t> smallest_zero_order;  // at n = config.projections
};

// Training error on the grid k = 1..k_max and n = 1, 10, 100, ..., projections.
// Each k uses one direction stream, so the smaller n are its prefixes.
ZeroTrainResult zero_train_demo(const Dataset& data, const ZeroTrainConfig& config);
void write_zero_train(const ZeroTrainResult& result, std::uint64_t seed, std::ostream& out);

}  // namespace ntarp::harness
