#include "ntarp/bounds.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "ntarp/error.hpp"
#include "ntarp/feature_map.hpp"
#include "ntarp/special_functions.hpp"

namespace ntarp::bounds {

namespace {

// Constants of the chaining bounds, used verbatim.
constexpr double kVcChainingConstant = 65.16;
constexpr double kTarpChainingConstant = 24.0;
constexpr double kChainingIntegral = 1.66;

void require_samples(double samples) {
  if (!(samples >= 1.0) || !std::isfinite(samples)) throw ConfigError("sample count must be >= 1");
}
void require_projections(double projections) {
  if (!(projections >= 1.0) || !std::isfinite(projections)) {
    throw ConfigError("projection count must be >= 1");
  }
}
void require_vc(double vc_dim) {
  if (!(vc_dim >= 1.0) || !std::isfinite(vc_dim)) throw ConfigError("VC dimension must be >= 1");
}
void require_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
}

// ln((2eN/h)^h)
double log_sauer_growth(double samples, double vc_dim) {
  return vc_dim * (std::log(2.0 * samples / vc_dim) + 1.0);
}

double gap_from_log_growth(double samples, double log_growth, double delta) {
  return std::sqrt(8.0 / samples * (std::log(4.0) + log_growth - std::log(delta)));
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  const double m = (a + b) / 2.0;
  const double lm = (a + m) / 2.0;
  const double rm = (m + b) / 2.0;
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::fabs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

void BoundConfig::validate() const {
  require_samples(samples);
  require_projections(projections);
  require_vc(vc_dim);
  require_delta(delta);
  if (dim == 0) throw ConfigError("dimension must be >= 1");
}

double tarp_gap_bound(double samples, double projections, double delta) {
  require_samples(samples);
  require_projections(projections);
  require_delta(delta);
  return gap_from_log_growth(samples, std::log(4.0 * projections * samples), delta);
}

double vc_gap_bound(double samples, double vc_dim, double delta) {
  require_samples(samples);
  require_vc(vc_dim);
  require_delta(delta);
  return gap_from_log_growth(samples, log_sauer_growth(samples, vc_dim), delta);
}

double combined_gap_bound(double samples, double projections, std::size_t dim, double delta) {
  require_samples(samples);
  require_projections(projections);
  require_delta(delta);
  if (dim == 0) throw ConfigError("dimension must be >= 1");
  const double log_tarp = std::log(4.0 * projections * samples);
  const double log_affine = log_sauer_growth(samples, static_cast<double>(dim) + 1.0);
  return gap_from_log_growth(samples, std::min(log_tarp, log_affine), delta);
}

double crossover_n(double samples, double exponent) {
  require_samples(samples);
  require_vc(exponent);
  return std::exp(log_sauer_growth(samples, exponent) - std::log(4.0 * samples));
}

double tarp_expected_gap_bound(double samples, double projections) {
  require_samples(samples);
  require_projections(projections);
  return std::sqrt(2.0 * std::log(8.0 * projections * samples) / samples);
}

double vc_expected_gap_bound_sauer(double samples, double vc_dim) {
  require_samples(samples);
  require_vc(vc_dim);
  // Growth on 2N points bounded by (2N + 1)^d_vc.
  const double log_growth = vc_dim * std::log(2.0 * samples + 1.0);
  return std::sqrt(2.0 * (std::log(2.0) + log_growth) / samples);
}

double chaining_tarp_bound(double samples, double projections) {
  require_samples(samples);
  require_projections(projections);
  return kTarpChainingConstant / std::sqrt(samples) *
         (std::sqrt(std::log(projections)) + kChainingIntegral);
}

double chaining_vc_bound(double samples, double vc_dim) {
  require_samples(samples);
  require_vc(vc_dim);
  return kVcChainingConstant * std::sqrt(vc_dim / samples);
}

double chaining_integral(double projections) {
  require_projections(projections);
  const double log_n = std::log(projections);
  // r = exp(-u) maps (0, 1] onto [0, inf) and removes the singularity at r = 0.
  // ln(2/r^2 + 2) = ln 2 + 2u + ln(1 + exp(-2u)).
  auto f = [log_n](double u) {
    const double inner = log_n + std::numbers::ln2 + 2.0 * u + std::log1p(std::exp(-2.0 * u));
    return std::sqrt(inner) * std::exp(-u);
  };
  // The integrand is below sqrt(ln n + 2 + 2u) e^{-u}; past u = 60 the tail is < 1e-24.
  constexpr double upper = 60.0;
  const double fa = f(0.0);
  const double fm = f(upper / 2.0);
  const double fb = f(upper);
  const double whole = upper / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, 0.0, upper, fa, fm, fb, whole, 1e-10, 50);
}

std::size_t covering_number_bound(std::size_t samples, std::size_t radius_index) {
  if (samples == 0) throw ConfigError("sample count must be >= 1");
  if (radius_index == 0 || radius_index > samples) throw ConfigError("radius index must lie in [1, N]");
  const std::size_t denom = 2 * radius_index + 1;
  return (2 * samples + denom - 1) / denom;
}

double ratio_limit(double projections, double vc_dim) {
  require_projections(projections);
  require_vc(vc_dim);
  return kTarpChainingConstant / kVcChainingConstant *
         (std::sqrt(std::log(projections) / vc_dim) + kChainingIntegral / std::sqrt(vc_dim));
}

double max_projections_for_vc(double vc_dim) {
  require_vc(vc_dim);
  const double root =
      kVcChainingConstant / kTarpChainingConstant - kChainingIntegral / std::sqrt(vc_dim);
  return std::exp(vc_dim * root * root);
}

double required_projections(std::size_t dim, std::size_t order, double delta) {
  require_delta(delta);
  const auto extended = static_cast<double>(extended_dim(dim, order));
  if (extended < 2.0) throw ConfigError("required projections need an extended dimension >= 2");
  const double s = std::sin(4.0 * std::asin(1.0 / (8.0 * extended)));
  const double miss = regularized_incomplete_beta(s * s, (extended - 1.0) / 2.0, 0.5);
  return std::log(delta) / std::log1p(-miss);
}

double hoeffding_deviation(double samples, double delta) {
  require_samples(samples);
  require_delta(delta);
  return std::sqrt(std::log(2.0 / delta) / (2.0 * samples));
}

BoundReport report(const BoundConfig& config) {
  config.validate();
  BoundReport r{config, {}};
  const double N = config.samples;
  const double n = config.projections;
  auto& v = r.values;
  v["tarp_gap_bound"] = tarp_gap_bound(N, n, config.delta);
  v["vc_gap_bound"] = vc_gap_bound(N, config.vc_dim, config.delta);
  v["combined_gap_bound"] = combined_gap_bound(N, n, config.dim, config.delta);
  v["crossover_n_exponent_d"] = crossover_n(N, static_cast<double>(config.dim));
  v["crossover_n_exponent_d_plus_1"] = crossover_n(N, static_cast<double>(config.dim) + 1.0);
  v["tarp_expected_gap_bound"] = tarp_expected_gap_bound(N, n);
  v["vc_expected_gap_bound_sauer"] = vc_expected_gap_bound_sauer(N, config.vc_dim);
  v["chaining_tarp_bound"] = chaining_tarp_bound(N, n);
  v["chaining_vc_bound"] = chaining_vc_bound(N, config.vc_dim);
  v["chaining_integral"] = chaining_integral(n);
  v["ratio_limit"] = ratio_limit(n, config.vc_dim);
  v["max_projections_for_vc"] = max_projections_for_vc(config.vc_dim);
  v["hoeffding_deviation"] = hoeffding_deviation(N, config.delta);
  if (extended_dim(config.dim, config.order) >= 2) {
    v["required_projections"] = required_projections(config.dim, config.order, config.delta);
  }
  return r;
}

}  // namespace ntarp::bounds
