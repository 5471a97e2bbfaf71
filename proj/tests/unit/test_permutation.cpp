#include <doctest.h>

#include <cmath>
#include <map>

#include "marsrank/error.hpp"
#include "marsrank/mars_core.hpp"
#include "marsrank/permutation.hpp"
#include "marsrank/rng.hpp"
#include "marsrank/scenarios.hpp"
#include "oracles.hpp"

using namespace marsrank;
using namespace marsrank::mars;

TEST_CASE("splitmix64 reference outputs") {
  // First outputs for seed 1234567, as published with the reference
  // implementation (Vigna, splitmix64.c).
  rng::SplitMix64 gen(1234567);
  CHECK(gen.next() == 6457827717110365317ULL);
  CHECK(gen.next() == 3203168211198807973ULL);
  CHECK(gen.next() == 9817491932198370423ULL);
}

TEST_CASE("stream_seed equals stepping the generator") {
  for (std::uint64_t seed : {0ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    rng::SplitMix64 gen(seed);
    for (std::uint64_t i = 0; i < 100; ++i) CHECK(rng::stream_seed(seed, i) == gen.next());
  }
}

TEST_CASE("bounded draws are in range and roughly uniform") {
  rng::SplitMix64 gen(9);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto x = gen.below(7);
    REQUIRE(x < 7);
    ++counts[x];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = gen.open_unit();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("shuffle is a permutation and visits every arrangement") {
  rng::SplitMix64 gen(3);
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < 6000; ++i) {
    std::vector<int> v{0, 1, 2};
    rng::shuffle(std::span<int>(v), gen);
    ++seen[v];
  }
  CHECK(seen.size() == 6);
  for (const auto& [arrangement, count] : seen) CHECK(std::abs(count - 1000) < 150);
}

TEST_CASE("constant matrix gives p = 1") {
  const PerformanceMatrix flat({"A", "B", "C"}, {"x", "y"}, {0.5, 0.5, 0.5, 0.2, 0.2, 0.2});
  const auto r = permutation_test(flat, 500, 1);
  CHECK(r.observed_statistic == 0.0);
  CHECK(r.p_value == 1.0);
  CHECK(r.exceed_count == 500);
}

TEST_CASE("observed statistic is the variance of the MARS scores") {
  const auto m = scenarios::generate_scenario({1, 0});
  const auto scores = mars_scores(weighted_ranks(m)).scores;
  const auto r = permutation_test(m, 10, 0);
  CHECK(r.observed_statistic == doctest::Approx(population_variance(scores)).epsilon(1e-14));
}

TEST_CASE("scenario 1 is highly significant") {
  const auto r = permutation_test(scenarios::generate_scenario({1, 0}), 10000, 42);
  CHECK(r.p_value <= 0.001);
  CHECK(r.rho == 10000);
  CHECK(r.seed == 42);
}

TEST_CASE("parallel kernel matches the serial reference for any thread count") {
  oracle::Generator gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = gen.size(2, 6);
    const std::size_t n = gen.size(1, 10);
    std::vector<std::string> methods, datasets;
    for (std::size_t j = 0; j < k; ++j) methods.push_back(std::to_string(j));
    for (std::size_t i = 0; i < n; ++i) datasets.push_back(std::to_string(i));
    std::vector<double> v(n * k);
    for (auto& x : v) x = gen.grid_value();
    const PerformanceMatrix m(methods, datasets, v);
    const std::uint64_t seed = gen.engine();
    const auto reference = permutation_test_serial(m, 400, seed);
    for (int threads : {1, 2, 3, 8}) {
      const auto r = permutation_test(m, 400, seed, threads);
      CHECK(r.exceed_count == reference.exceed_count);
      CHECK(r.p_value == reference.p_value);
      CHECK(r.observed_statistic == reference.observed_statistic);
    }
    // p is a multiple of 1/rho
    CHECK(reference.p_value == static_cast<double>(reference.exceed_count) / 400.0);
  }
}

TEST_CASE("relabelling methods leaves the statistic bit-identical") {
  const auto m = scenarios::generate_scenario({4, 0});
  std::vector<double> swapped(m.values().begin(), m.values().end());
  for (std::size_t i = 0; i < m.datasets(); ++i) std::swap(swapped[i * 3], swapped[i * 3 + 2]);
  CHECK(score_variance(swapped, 3) == score_variance(m.values(), 3));
}

TEST_CASE("rho must be positive") {
  CHECK_THROWS_AS(permutation_test(scenarios::generate_scenario({1, 0}), 0, 1), Error);
}
