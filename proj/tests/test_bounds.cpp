#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "ntarp/bounds.hpp"
#include "ntarp/error.hpp"
#include "ntarp/special_functions.hpp"

using namespace ntarp;
using namespace ntarp::bounds;
using doctest::Approx;

namespace {

// I_x(a, b) by quadrature. With t = x w^2 the integrand
// 2 w^(2a-1) (1 - x w^2)^(b-1) is smooth on [0, 1] for the tested a, b and x < 1.
// Power series I_x(a, b) = x^a / B(a, b) * sum_n (1 - b)_n x^n / (n! (a + n)).
double ibeta_series(double x, double a, double b) {
  long double term = 1.0L, sum = 0.0L;
  for (int n = 0; n < 20000; ++n) {
    const long double piece = term / (a + n);
    sum += piece;
    if (n > 0 && std::fabs(piece) < 1e-22L * std::fabs(sum)) break;
    term *= (n + 1.0L - b) * x / (n + 1.0L);
  }
  return static_cast<double>(std::pow(static_cast<long double>(x), static_cast<long double>(a)) * sum /
                             std::beta(static_cast<long double>(a), static_cast<long double>(b)));
}

// Midpoint rule on dyadic panels [2^-(j+1), 2^-j] of r in (0, 1].
double chaining_integral_oracle(double n) {
  double total = 0.0;
  for (int j = 0; j < 80; ++j) {
    const double lo = std::ldexp(1.0, -(j + 1));
    const double hi = std::ldexp(1.0, -j);
    const int m = 2000;
    const double h = (hi - lo) / m;
    for (int i = 0; i < m; ++i) {
      const double r = lo + (i + 0.5) * h;
      total += h * std::sqrt(std::log(n) + std::log(2.0 / (r * r) + 2.0));
    }
  }
  return total;
}

}  // namespace

TEST_CASE("tarp_gap_bound") {
  CHECK(tarp_gap_bound(10000, 25, 0.1) == Approx(0.118).epsilon(0.0005 / 0.118));
  CHECK(tarp_gap_bound(10000, 3278, 0.1) == Approx(0.134).epsilon(0.0005 / 0.134));
  CHECK(tarp_gap_bound(1000, 2, 0.1) > tarp_gap_bound(1000, 1, 0.1));
  CHECK(tarp_gap_bound(1000, 5, 0.01) > tarp_gap_bound(1000, 5, 0.1));
  CHECK(tarp_gap_bound(2000, 5, 0.1) < tarp_gap_bound(1000, 5, 0.1));
  CHECK_THROWS_AS(tarp_gap_bound(1000, 5, 1.0), ConfigError);
  CHECK_THROWS_AS(tarp_gap_bound(0, 5, 0.1), ConfigError);
  CHECK_THROWS_AS(tarp_gap_bound(10, 0, 0.1), ConfigError);
}

TEST_CASE("vc_gap_bound") {
  CHECK(vc_gap_bound(10000, 3, 0.1) == Approx(0.163).epsilon(0.0005 / 0.163));
  CHECK(vc_gap_bound(10000, 11, 0.1) == Approx(0.279).epsilon(0.0005 / 0.279));
  CHECK(vc_gap_bound(10000, 6, 0.1) == Approx(0.216).epsilon(0.0005 / 0.216));
  for (double h = 1; h < 40; ++h) CHECK(vc_gap_bound(10000, h + 1, 0.1) > vc_gap_bound(10000, h, 0.1));
  // Log space stays finite where the power overflows.
  CHECK(std::isfinite(vc_gap_bound(10000, 200, 0.1)));
}

TEST_CASE("log-space bounds agree with direct evaluation") {
  for (double N : {10.0, 50.0, 200.0}) {
    for (double h : {1.0, 2.0, 3.0, 5.0}) {
      const double direct = std::sqrt(8.0 / N * std::log(4.0 * std::pow(2.0 * std::numbers::e * N / h, h) / 0.1));
      CHECK(vc_gap_bound(N, h, 0.1) == Approx(direct).epsilon(1e-12));
      const double cross = std::pow(2.0 * N * std::numbers::e / h, h) / (4.0 * N);
      CHECK(crossover_n(N, h) == Approx(cross).epsilon(1e-12));
      const double sauer = std::sqrt(2.0 * std::log(2.0 * std::pow(2.0 * N + 1.0, h)) / N);
      CHECK(vc_expected_gap_bound_sauer(N, h) == Approx(sauer).epsilon(1e-12));
    }
  }
}

TEST_CASE("combined_gap_bound is the minimum of both growth estimates") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const double N = 10.0 + static_cast<double>(rng() % 100000);
    const double n = std::exp(std::uniform_real_distribution<double>(0.0, 40.0)(rng));
    const std::size_t d = 1 + rng() % 12;
    const double delta = std::uniform_real_distribution<double>(0.01, 0.5)(rng);
    const double expect = std::min(tarp_gap_bound(N, n, delta), vc_gap_bound(N, d + 1.0, delta));
    CHECK(combined_gap_bound(N, n, d, delta) == Approx(expect).epsilon(1e-12));
  }
  CHECK(combined_gap_bound(1000, 3, 2, 0.1) == tarp_gap_bound(1000, 3, 0.1));
  const double above = 2.0 * crossover_n(1000, 3);
  CHECK(combined_gap_bound(1000, above, 2, 0.1) == Approx(vc_gap_bound(1000, 3, 0.1)).epsilon(1e-14));
  // 4 n N = 4e4 against (2000e/3)^3 ~ 5.95e9.
  CHECK(4.0 * 10 * 1000 < std::pow(2000.0 * std::numbers::e / 3.0, 3.0));
  CHECK(combined_gap_bound(1000, 10, 2, 0.1) == tarp_gap_bound(1000, 10, 0.1));
}

TEST_CASE("crossover_n") {
  CHECK(crossover_n(1000, 2) == Approx(1847.26).epsilon(1e-4));
  CHECK(crossover_n(1000, 5) == Approx(3.8e11).epsilon(0.01));
  CHECK(crossover_n(1000, 1) == Approx(2000.0 * std::numbers::e / 4000.0).epsilon(1e-12));
}

TEST_CASE("expected gap bounds") {
  CHECK(tarp_expected_gap_bound(10000, 100) == Approx(0.0564).epsilon(0.00005 / 0.0564));
  CHECK(tarp_expected_gap_bound(10000, 1000) == Approx(0.0603).epsilon(0.00005 / 0.0603));
  const double a = tarp_expected_gap_bound(10000, 37);
  const double b = tarp_expected_gap_bound(10000, 74);
  CHECK(b * b - a * a == Approx(2.0 * std::log(2.0) / 10000).epsilon(1e-9));

  CHECK(vc_expected_gap_bound_sauer(10000, 2) == Approx(0.0640).epsilon(0.00005 / 0.064));
  CHECK(vc_expected_gap_bound_sauer(10000, 3) == Approx(0.0780).epsilon(0.00005 / 0.078));
  // Separation is smallest at the largest n; compare against direct evaluation.
  double min2 = INFINITY, min3 = INFINITY;
  for (double n = 1; n <= 1000; ++n) {
    min2 = std::min(min2, vc_expected_gap_bound_sauer(10000, 2) - tarp_expected_gap_bound(10000, n));
    min3 = std::min(min3, vc_expected_gap_bound_sauer(10000, 3) - tarp_expected_gap_bound(10000, n));
  }
  const double at_1000 = std::sqrt(2.0 * std::log(8.0e7) / 1e4);
  CHECK(min2 == Approx(std::sqrt(2.0 * (std::log(2.0) + 2.0 * std::log(20001.0)) / 1e4) - at_1000).epsilon(1e-12));
  CHECK(min3 == Approx(std::sqrt(2.0 * (std::log(2.0) + 3.0 * std::log(20001.0)) / 1e4) - at_1000).epsilon(1e-12));
  CHECK(min3 >= 0.015);
}

TEST_CASE("chaining bounds") {
  CHECK(chaining_tarp_bound(10000, 1) == Approx(39.84 / 100.0).epsilon(1e-12));
  CHECK(chaining_tarp_bound(10000, 115) == Approx(0.9212).epsilon(0.0002 / 0.9212));
  CHECK(chaining_tarp_bound(10000, 116) > chaining_tarp_bound(10000, 115));
  CHECK(chaining_vc_bound(10000, 1) == Approx(0.6516).epsilon(1e-12));
  CHECK(chaining_vc_bound(40000, 1) == Approx(0.3258).epsilon(1e-12));
  CHECK(chaining_vc_bound(10000, 4) == Approx(1.3032).epsilon(1e-12));
  for (double h = 1; h <= 6; ++h) {
    const double n = max_projections_for_vc(h);
    CHECK(chaining_tarp_bound(5000, n) == Approx(chaining_vc_bound(5000, h)).epsilon(1e-10));
  }
}

TEST_CASE("chaining_integral") {
  const double base = chaining_integral(1);
  CHECK(base <= 1.66);
  CHECK(base >= 1.60);
  CHECK(base == Approx(chaining_integral_oracle(1)).epsilon(1e-6));
  for (double n : {2.0, 10.0, 115.0, 1e6}) {
    const double v = chaining_integral(n);
    CHECK(v == Approx(chaining_integral_oracle(n)).epsilon(1e-6));
    CHECK(v <= std::sqrt(std::log(n)) + base + 1e-12);
    CHECK(v > base);
  }
}

TEST_CASE("covering_number_bound") {
  CHECK(covering_number_bound(10, 1) == 7);
  CHECK(covering_number_bound(10, 10) == 1);
  CHECK(covering_number_bound(7, 3) == 2);
  CHECK_THROWS_AS(covering_number_bound(10, 0), ConfigError);
  CHECK_THROWS_AS(covering_number_bound(10, 11), ConfigError);
}

TEST_CASE("ratio_limit and max_projections_for_vc") {
  CHECK(ratio_limit(3, 1) == Approx(0.99748).epsilon(1e-5));
  CHECK(ratio_limit(115, 2) == Approx(0.99966).epsilon(1e-5));
  for (double h = 1; h <= 8; ++h) CHECK(ratio_limit(max_projections_for_vc(h), h) == Approx(1.0).epsilon(1e-9));
  CHECK(std::floor(max_projections_for_vc(2)) == 115);
  CHECK(std::abs(std::floor(max_projections_for_vc(3)) - 10476) <= 1);
  CHECK(max_projections_for_vc(5) == Approx(2.8e8).epsilon(0.01));
}

TEST_CASE("regularized_incomplete_beta closed forms and identities") {
  for (double x : {0.1, 0.5, 0.9}) {
    CHECK(regularized_incomplete_beta(x, 1, 0.5) == Approx(1 - std::sqrt(1 - x)).epsilon(1e-13));
    CHECK(regularized_incomplete_beta(x, 0.5, 0.5) ==
          Approx(2 / std::numbers::pi * std::asin(std::sqrt(x))).epsilon(1e-13));
  }
  for (double a : {0.5, 2.0, 7.5}) {
    CHECK(regularized_incomplete_beta(0, a, 1.5) == 0.0);
    CHECK(regularized_incomplete_beta(1, a, 1.5) == 1.0);
    for (double x = 0.05; x < 1; x += 0.1) {
      const double sum = regularized_incomplete_beta(x, a, 1.5) + regularized_incomplete_beta(1 - x, 1.5, a);
      CHECK(std::fabs(sum - 1.0) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(regularized_incomplete_beta(-0.1, 1, 1), ConfigError);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.1, 1, 1), ConfigError);
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 0, 1), ConfigError);
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 1, -1), ConfigError);
}

TEST_CASE("regularized_incomplete_beta matches power series") {
  const double params[] = {0.5, 1, 1.5, 2, 5};
  for (double a : params) {
    for (double b : params) {
      for (double x = 0.01; x <= 0.99 + 1e-12; x += 0.049) {
        CHECK(std::fabs(regularized_incomplete_beta(x, a, b) - ibeta_series(x, a, b)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("required_projections") {
  // extended dim 3: I_x(1, 1/2) = 1 - sqrt(1 - x) and 1 - x = cos^2(4 asin(1/24)).
  const double closed = std::log(0.1) / std::log(std::cos(4.0 * std::asin(1.0 / 24.0)));
  CHECK(required_projections(2, 1, 0.1) == Approx(closed).epsilon(1e-12));
  CHECK(std::fabs(required_projections(2, 1, 0.1) - 164.9) <= 0.1);
  CHECK(required_projections(2, 1, 0.999999) < 1e-3);
  CHECK(required_projections(2, 1, 0.999999) > 0.0);

  double previous = 0.0;
  for (std::size_t dt = 3; dt <= 10; ++dt) {
    const double v = required_projections(dt - 1, 1, 0.1);
    const double s = std::sin(4.0 * std::asin(1.0 / (8.0 * dt)));
    const double direct = std::log(0.1) / std::log1p(-ibeta_series(s * s, (dt - 1) / 2.0, 0.5));
    CHECK(v == Approx(direct).epsilon(1e-10));
    CHECK(v > previous);
    previous = v;
  }
  CHECK_THROWS_AS(required_projections(1, 0, 0.1), ConfigError);
  CHECK_THROWS_AS(required_projections(2, 1, 0.0), ConfigError);
}

TEST_CASE("hoeffding_deviation") {
  CHECK(hoeffding_deviation(2000, 0.1) == Approx(0.0274).epsilon(0.0001 / 0.0274));
  CHECK(hoeffding_deviation(8000, 0.1) == Approx(hoeffding_deviation(2000, 0.1) / 2).epsilon(1e-12));
  CHECK_THROWS_AS(hoeffding_deviation(2000, 2), ConfigError);
}

TEST_CASE("report collects every bound") {
  BoundConfig c;
  c.samples = 10000;
  c.projections = 115;
  c.dim = 2;
  c.order = 1;
  c.vc_dim = 2;
  const auto r = report(c);
  CHECK(r.values.size() == 14);
  for (const auto& [name, value] : r.values) {
    CHECK_MESSAGE(std::isfinite(value), name);
    CHECK_MESSAGE(value >= 0.0, name);
  }
  c.delta = 0;
  CHECK_THROWS_AS(report(c), ConfigError);
}
