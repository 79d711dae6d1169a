#include "ntarp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ntarp/baselines.hpp"
#include "ntarp/bounds.hpp"
#include "ntarp/error.hpp"
#include "ntarp/synthetic.hpp"
#include "ntarp/tarp.hpp"

namespace ntarp::harness {

namespace {

std::ostringstream csv_stream() {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10);
  return s;
}

struct Moments {
  double mean = 0;
  double stddev = 0;
};

Moments moments(const std::vector<double>& v) {
  Moments m;
  if (v.empty()) return m;
  for (double x : v) m.mean += x;
  m.mean /= static_cast<double>(v.size());
  for (double x : v) m.stddev += (x - m.mean) * (x - m.mean);
  m.stddev = std::sqrt(m.stddev / static_cast<double>(v.size()));
  return m;
}

std::vector<SummaryRecord> summarize(const std::vector<RunRecord>& runs) {
  std::vector<SummaryRecord> out;
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& r : runs) {
    std::pair key{r.group, r.method};
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
  }
  for (const auto& [group, method] : keys) {
    std::vector<double> train, test, gap;
    double bound = 0;
    for (const auto& r : runs) {
      if (r.group != group || r.method != method) continue;
      train.push_back(r.train_error);
      test.push_back(r.test_error);
      gap.push_back(r.gap());
      bound = r.gap_bound;
    }
    const auto mt = moments(train), ms = moments(test), mg = moments(gap);
    out.push_back({group, method, mt.mean, mt.stddev, ms.mean, ms.stddev, mg.mean, mg.stddev, bound});
  }
  return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t s = mix(base);
  s = mix(s ^ a);
  s = mix(s ^ b);
  return mix(s ^ c);
}

// ---- bound tables -------------------------------------------------------

std::vector<BoundsRow> bounds_table(const BoundsTableConfig& config) {
  if (config.d_min < 1 || config.d_max < config.d_min) throw ConfigError("invalid dimension range");
  const std::size_t count = config.d_max - config.d_min + 1;
  if (!config.projections.empty() && config.projections.size() != count) {
    throw ConfigError("expected " + std::to_string(count) + " projection counts, one per dimension");
  }
  std::vector<BoundsRow> rows;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d = config.d_min + i;
    BoundsRow r;
    r.dim = d;
    r.required_n = bounds::required_projections(d, 1, config.delta);
    r.n = config.projections.empty() ? std::ceil(r.required_n) : config.projections[i];
    r.tarp_gap = bounds::tarp_gap_bound(config.samples, r.n, config.delta);
    r.vc_gap = bounds::vc_gap_bound(config.samples, static_cast<double>(d) + 1.0, config.delta);
    rows.push_back(r);
  }
  return rows;
}

void write_bounds_table(std::span<const BoundsRow> rows, std::ostream& out) {
  auto s = csv_stream();
  s << "d,required_n,n,tarp_gap_bound,vc_gap_bound_d_plus_1\n";
  for (const auto& r : rows) {
    s << r.dim << ',' << r.required_n << ',' << r.n << ',' << r.tarp_gap << ',' << r.vc_gap << '\n';
  }
  out << s.str();
}

std::vector<BudgetRow> projection_budget_table(std::size_t vc_max) {
  if (vc_max < 1) throw ConfigError("VC dimension range must include 1");
  std::vector<BudgetRow> rows;
  for (std::size_t h = 1; h <= vc_max; ++h) {
    const double v = bounds::max_projections_for_vc(static_cast<double>(h));
    rows.push_back({h, v, std::floor(v)});
  }
  return rows;
}

void write_budget_table(std::span<const BudgetRow> rows, std::ostream& out) {
  auto s = csv_stream();
  s << "vc_dim,max_projections,max_projections_floor\n";
  for (const auto& r : rows) s << r.vc_dim << ',' << r.max_projections << ',' << r.floor_value << '\n';
  out << s.str();
}

std::vector<GapCurvePoint> expected_gap_curve(const GapCurveConfig& config) {
  if (config.n_max < 1) throw ConfigError("n range must include 1");
  std::vector<GapCurvePoint> points;
  points.reserve(config.n_max);
  for (std::size_t n = 1; n <= config.n_max; ++n) {
    GapCurvePoint p;
    p.n = n;
    p.tarp = bounds::tarp_expected_gap_bound(config.samples, static_cast<double>(n));
    for (double h : config.vc_dims) p.vc.push_back(bounds::vc_expected_gap_bound_sauer(config.samples, h));
    points.push_back(std::move(p));
  }
  return points;
}

void write_gap_curve(const GapCurveConfig& config, std::span<const GapCurvePoint> points,
                     std::ostream& out) {
  auto s = csv_stream();
  s << "n,samples,tarp_expected_gap_bound";
  for (double h : config.vc_dims) s << ",vc_expected_gap_bound_dvc_" << h;
  s << '\n';
  for (const auto& p : points) {
    s << p.n << ',' << config.samples << ',' << p.tarp;
    for (double v : p.vc) s << ',' << v;
    s << '\n';
  }
  out << s.str();
}

std::vector<CrossoverRow> crossover(double samples, std::size_t dim) {
  if (dim < 1) throw ConfigError("dimension must be >= 1");
  const auto d = static_cast<double>(dim);
  return {
      {samples, dim, d + 1.0, bounds::crossover_n(samples, d + 1.0), "d_plus_1"},
      {samples, dim, d, bounds::crossover_n(samples, d), "d"},
  };
}

void write_crossover(std::span<const CrossoverRow> rows, std::ostream& out) {
  auto s = csv_stream();
  s << "samples,d,exponent,crossover_n,reading\n";
  for (const auto& r : rows) {
    s << r.samples << ',' << r.dim << ',' << r.exponent << ',' << r.value << ',' << r.reading << '\n';
  }
  out << s.str();
}

// ---- experiments --------------------------------------------------------

const SummaryRecord& ExperimentResult::find(const std::string& group, const std::string& method) const {
  for (const auto& s : summary) {
    if (s.group == group && s.method == method) return s;
  }
  throw ConfigError("no summary for " + group + "/" + method);
}

std::vector<RunRecord> evaluate_methods(const Dataset& train, const Dataset& test,
                                        const MethodSettings& settings, std::uint64_t seed) {
  const auto n_train = static_cast<double>(train.size());
  std::vector<RunRecord> out;

  const auto model = fit(train, {settings.order, settings.projections, derive_seed(seed, 1)});
  auto tarp_rule = [&](std::span<const double> x) { return model.predict(x); };
  out.push_back({"", 0, seed, kTarp, model.stump.train_error(), empirical_error(tarp_rule, test),
                 bounds::tarp_gap_bound(n_train, static_cast<double>(settings.projections), settings.delta)});

  const double linear_bound =
      bounds::vc_gap_bound(n_train, static_cast<double>(train.dim()) + 1.0, settings.delta);

  const auto logit =
      fit_logistic(train, {settings.logistic_l2, settings.logistic_iterations, settings.logistic_step, true});
  auto logit_rule = [&](std::span<const double> x) { return logit.predict(x); };
  out.push_back({"", 0, seed, kLogistic, empirical_error(logit_rule, train),
                 empirical_error(logit_rule, test), linear_bound});

  const auto svm = fit_linear_svm(train, {settings.svm_lambda, settings.svm_epochs, derive_seed(seed, 2), true});
  auto svm_rule = [&](std::span<const double> x) { return svm.predict(x); };
  out.push_back({"", 0, seed, kLinearSvm, empirical_error(svm_rule, train), empirical_error(svm_rule, test),
                 linear_bound});
  return out;
}

ExperimentResult run_synthetic(const SyntheticConfig& config) {
  if (config.reps < 1) throw ConfigError("need at least one repetition");
  const auto models = schedule(config.steps, config.sigma, config.dim);
  ExperimentResult result;
  for (std::size_t step = 0; step < models.size(); ++step) {
    for (std::size_t rep = 0; rep < config.reps; ++rep) {
      const auto run_seed = derive_seed(config.seed, step, rep);
      const auto train = sample(models[step], config.train_size, derive_seed(run_seed, 10));
      const auto test = sample(models[step], config.test_size, derive_seed(run_seed, 11));
      for (auto& r : evaluate_methods(train, test, config.methods, run_seed)) {
        r.group = std::to_string(step);
        r.rep = rep;
        result.runs.push_back(std::move(r));
      }
    }
  }
  result.summary = summarize(result.runs);
  return result;
}

DigitsConfig digits_preset(DigitTask task) {
  DigitsConfig c;
  c.task = task;
  if (task == DigitTask::ZeroOne) {
    c.train_size = 100;
    c.methods.projections = 2000;
  }
  return c;
}

ExperimentResult run_digits(const DigitsConfig& config, const LabeledDigits& digits) {
  if (config.reps < 1) throw ConfigError("need at least one repetition");
  const auto data = relabel(digits, config.task);
  ExperimentResult result;
  for (std::size_t rep = 0; rep < config.reps; ++rep) {
    const auto run_seed = derive_seed(config.seed, rep);
    const auto [train, test] = split(data, config.train_size, derive_seed(run_seed, 10));
    for (auto& r : evaluate_methods(train, test, config.methods, run_seed)) {
      r.group = std::string(task_name(config.task));
      r.rep = rep;
      result.runs.push_back(std::move(r));
    }
  }
  result.summary = summarize(result.runs);
  return result;
}

void check_reference_corpus(const LabeledDigits& digits) {
  std::size_t odd = 0, zeros = 0, ones = 0;
  for (int d : digits.digits) {
    odd += d % 2 == 1;
    zeros += d == 0;
    ones += d == 1;
  }
  if (digits.size() != 1797 || odd != 906 || zeros != 178 || ones != 182) {
    throw DataError("corpus has " + std::to_string(digits.size()) + " rows, " + std::to_string(odd) +
                    " odd, " + std::to_string(zeros) + " zeros, " + std::to_string(ones) +
                    " ones; the reference corpus has 1797, 906, 178, 182");
  }
}

void write_experiment(const ExperimentResult& result, const std::string& group_name, std::ostream& out) {
  auto s = csv_stream();
  s << "record," << group_name << ",rep,seed,method,train_error,test_error,gap,gap_bound\n";
  for (const auto& r : result.runs) {
    s << "run," << r.group << ',' << r.rep << ',' << r.seed << ',' << r.method << ',' << r.train_error
      << ',' << r.test_error << ',' << r.gap() << ',' << r.gap_bound << '\n';
  }
  for (const auto& m : result.summary) {
    s << "mean," << m.group << ",,," << m.method << ',' << m.mean_train << ',' << m.mean_test << ','
      << m.mean_gap << ',' << m.gap_bound << '\n';
    s << "std," << m.group << ",,," << m.method << ',' << m.std_train << ',' << m.std_test << ','
      << m.std_gap << ",\n";
  }
  out << s.str();
}

// ---- zero training error demo ------------------------------------------

Dataset two_arcs() {
  constexpr std::size_t per_arc = 10;
  std::vector<double> x;
  std::vector<Label> y;
  for (std::size_t i = 0; i < per_arc; ++i) {
    const double t = std::numbers::pi * static_cast<double>(i) / static_cast<double>(per_arc - 1);
    x.insert(x.end(), {std::cos(t), std::sin(t)});
    y.push_back(1);
    x.insert(x.end(), {1.0 - std::cos(t), 0.5 - std::sin(t)});
    y.push_back(-1);
  }
  return Dataset(2, std::move(x), std::move(y));
}

Dataset xor_points() {
  return Dataset(2, {0, 0, 1, 1, 0, 1, 1, 0}, {1, 1, -1, -1});
}

ZeroTrainResult zero_train_demo(const Dataset& data, const ZeroTrainConfig& config) {
  if (config.k_max < 1) throw ConfigError("k range must include 1");
  if (config.projections < 1) throw ConfigError("number of projections must be at least 1");
  std::vector<std::size_t> grid;
  for (std::size_t n = 1; n < config.projections; n *= 10) grid.push_back(n);
  grid.push_back(config.projections);

  ZeroTrainResult result;
  for (std::size_t k = 1; k <= config.k_max; ++k) {
    const auto model = fit(data, {k, config.projections, config.seed});
    std::size_t best = data.size();
    std::size_t next = 0;
    for (std::size_t p = 0; p < config.projections; ++p) {
      best = std::min(best, model.per_projection_errors[p]);
      if (p + 1 == grid[next]) {
        result.rows.push_back({k, grid[next], static_cast<double>(best) / static_cast<double>(data.size())});
        ++next;
      }
    }
    if (best == 0 && !result.smallest_zero_order) result.smallest_zero_order = k;
  }
  return result;
}

void write_zero_train(const ZeroTrainResult& result, std::uint64_t seed, std::ostream& out) {
  auto s = csv_stream();
  s << "record,k,n,seed,train_error\n";
  for (const auto& r : result.rows) {
    s << "grid," << r.order << ',' << r.n << ',' << seed << ',' << r.train_error << '\n';
  }
  const std::size_t n_max = result.rows.empty() ? 0 : result.rows.back().n;
  s << "smallest_zero_k,";
  if (result.smallest_zero_order) {
    s << *result.smallest_zero_order;
  } else {
    s << -1;
  }
  s << ',' << n_max << ',' << seed << ",0\n";
  out << s.str();
}

}  // namespace ntarp::harness
