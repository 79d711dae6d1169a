#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "ntarp/bounds.hpp"
#include "ntarp/dichotomy.hpp"
#include "ntarp/error.hpp"

using namespace ntarp;

namespace {

Dataset random_points(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> f(n * d);
  for (auto& v : f) v = g(rng);
  return Dataset(d, f, std::vector<Label>(n, 1));
}

std::vector<double> random_direction(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> a(d);
  for (auto& v : a) v = g(rng);
  return a;
}

// Centers of a greedy cover of a path of elements at Hamming radius r:
// each ball is centered r steps past the first uncovered element.
std::vector<std::size_t> greedy_path_cover(std::size_t length, std::size_t r) {
  std::vector<std::size_t> centers;
  for (std::size_t first = 0; first < length; first += 2 * r + 1) {
    centers.push_back(std::min(first + r, length - 1));
  }
  return centers;
}

}  // namespace

TEST_CASE("one point gives a chain of two") {
  const Dataset one(1, {0.5}, {1});
  const std::vector direction{1.0};
  for (int s : {1, -1}) {
    const auto chain = dichotomy_chain(direction, one, s);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].bits == std::vector<Label>{s});
    CHECK(chain[1].bits == std::vector<Label>{-s});
  }
}

TEST_CASE("three distinct projections") {
  const Dataset data(1, {2.0, 0.0, 1.0}, {1, 1, 1});
  const auto chain = dichotomy_chain(std::vector{1.0}, data, 1);
  REQUIRE(chain.size() == 4);
  CHECK(chain[0].bits == std::vector<Label>{1, 1, 1});
  CHECK(chain[1].bits == std::vector<Label>{1, -1, 1});
  CHECK(chain[2].bits == std::vector<Label>{1, -1, -1});
  CHECK(chain[3].bits == std::vector<Label>{-1, -1, -1});
  for (std::size_t i = 1; i < chain.size(); ++i) CHECK(hamming_distance(chain[i - 1], chain[i]) == 1);
}

TEST_CASE("ties collapse sweep steps") {
  const Dataset data(1, {1.0, 1.0, 3.0}, {1, 1, 1});
  const auto chain = dichotomy_chain(std::vector{1.0}, data, 1);
  CHECK(chain.size() == 3);
  CHECK(hamming_distance(chain[0], chain[1]) == 2);
}

TEST_CASE("both orientations list 2N+2 vectors, 2N distinct") {
  std::mt19937_64 rng(77);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto data = random_points(n, 3, rng);
    const auto a = random_direction(3, rng);
    auto up = dichotomy_chain(a, data, 1);
    auto down = dichotomy_chain(a, data, -1);
    CHECK(up.size() + down.size() == 2 * n + 2);
    std::set<Dichotomy> distinct(up.begin(), up.end());
    distinct.insert(down.begin(), down.end());
    CHECK(distinct.size() == 2 * n);
    CHECK(up.front().bits == down.back().bits);
    CHECK(up.back().bits == down.front().bits);
  }
}

TEST_CASE("chains are Hamming paths without repeats") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t d = 1 + rng() % 4;
    const auto data = random_points(n, d, rng);
    const auto a = random_direction(d, rng);
    for (int s : {1, -1}) {
      const auto chain = dichotomy_chain(a, data, s);
      CHECK(chain.size() == n + 1);
      CHECK(std::set<Dichotomy>(chain.begin(), chain.end()).size() == chain.size());
      for (std::size_t i = 1; i < chain.size(); ++i) CHECK(hamming_distance(chain[i - 1], chain[i]) == 1);
    }
  }
}

TEST_CASE("greedy cover of a projection's dichotomies meets the covering bound") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto data = random_points(n, 2, rng);
    const auto a = random_direction(2, rng);
    // Sweep order around both orientations: a cycle of 2N distinct vectors.
    auto cycle = dichotomy_chain(a, data, 1);
    auto down = dichotomy_chain(a, data, -1);
    cycle.pop_back();
    cycle.insert(cycle.end(), down.begin(), down.end() - 1);
    REQUIRE(cycle.size() == 2 * n);

    for (std::size_t i = 1; i <= n; ++i) {
      const auto centers = greedy_path_cover(cycle.size(), i);
      CHECK(centers.size() <= bounds::covering_number_bound(n, i));
      // Independent check: every dichotomy within normalized distance sqrt(i/N).
      for (const auto& v : cycle) {
        bool covered = false;
        for (auto c : centers) covered = covered || hamming_distance(v, cycle[c]) <= i;
        CHECK(covered);
      }
    }
  }
}

TEST_CASE("dichotomy_chain argument checks") {
  const Dataset data(2, {0, 1, 2, 3}, {1, -1});
  CHECK_THROWS_AS(dichotomy_chain(std::vector{1.0}, data, 1), ConfigError);
  CHECK_THROWS_AS(dichotomy_chain(std::vector{1.0, 0.0}, data, 0), ConfigError);
}
