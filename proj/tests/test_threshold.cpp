#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "ntarp/error.hpp"
#include "ntarp/threshold.hpp"

using namespace ntarp;

namespace {

std::size_t errors_at(const std::vector<double>& z, const std::vector<Label>& y, double t, int s) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Label pred = z[i] - t >= 0.0 ? s : -s;
    e += pred != y[i];
  }
  return e;
}

// Exhaustive search over one representative threshold per cell: below the
// minimum, between each pair of consecutive distinct values, above the maximum.
std::size_t brute_force(const std::vector<double>& z, const std::vector<Label>& y) {
  std::set<double> values(z.begin(), z.end());
  std::vector<double> v(values.begin(), values.end());
  std::vector<double> cells{v.front() - 1.0, v.back() + 1.0};
  for (std::size_t i = 0; i + 1 < v.size(); ++i) cells.push_back((v[i] + v[i + 1]) / 2.0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (double t : cells) {
    best = std::min({best, errors_at(z, y, t, 1), errors_at(z, y, t, -1)});
  }
  return best;
}

}  // namespace

TEST_CASE("separable example") {
  const auto fit = best_threshold(std::vector{1.0, 2.0, 3.0}, std::vector<Label>{-1, -1, 1});
  CHECK(fit.error_count == 0);
  CHECK(fit.threshold == 2.5);
  CHECK(fit.orientation == 1);
}

TEST_CASE("alternating labels") {
  const std::vector z{1.0, 2.0, 3.0, 4.0};
  const std::vector<Label> y{1, -1, 1, -1};
  const auto fit = best_threshold(z, y);
  CHECK(fit.error_count == 1);
  CHECK(brute_force(z, y) == 1);
  CHECK(errors_at(z, y, fit.threshold, fit.orientation) == 1);
}

TEST_CASE("one class") {
  const std::vector z{0.3, -2.0, 5.0};
  const auto fit = best_threshold(z, std::vector<Label>{1, 1, 1});
  CHECK(fit.error_count == 0);
  CHECK(fit.orientation == 1);
  CHECK(fit.threshold < -2.0);

  const auto neg = best_threshold(z, std::vector<Label>{-1, -1, -1});
  CHECK(neg.error_count == 0);
  CHECK(errors_at(z, {-1, -1, -1}, neg.threshold, neg.orientation) == 0);
}

TEST_CASE("tied projections move together") {
  const std::vector z{1.0, 1.0, 2.0, 2.0};
  const std::vector<Label> y{-1, 1, 1, 1};
  const auto fit = best_threshold(z, y);
  CHECK(fit.error_count == 1);
  CHECK(errors_at(z, y, fit.threshold, fit.orientation) == 1);
}

TEST_CASE("adjacent doubles still separate") {
  const double a = 1.0;
  const double b = std::nextafter(a, 2.0);
  const std::vector z{a, b};
  const std::vector<Label> y{-1, 1};
  const auto fit = best_threshold(z, y);
  CHECK(fit.error_count == 0);
  CHECK(errors_at(z, y, fit.threshold, fit.orientation) == 0);
}

TEST_CASE("precondition violations") {
  CHECK_THROWS_AS(best_threshold(std::vector<double>{}, std::vector<Label>{}), ConfigError);
  CHECK_THROWS_AS(best_threshold(std::vector{1.0}, std::vector<Label>{1, 1}), ConfigError);
}

TEST_CASE("matches exhaustive search on random instances") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  ThresholdSearch search;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const bool ties = trial % 3 == 0;
    std::vector<double> z(n);
    std::vector<Label> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = ties ? static_cast<double>(rng() % 4) : g(rng);
      y[i] = rng() % 2 ? 1 : -1;
    }
    const auto fit = search(z, y);
    REQUIRE(fit.error_count == brute_force(z, y));
    // The returned rule realizes the reported count.
    REQUIRE(errors_at(z, y, fit.threshold, fit.orientation) == fit.error_count);
  }
}
