#include <doctest.h>

#include <cmath>

#include "marsrank/cliques.hpp"
#include "oracles.hpp"

using namespace marsrank::diagram;
using Cliques = std::vector<std::vector<std::size_t>>;

TEST_CASE("cliques_from_threshold examples") {
  const std::vector s1{1.515625, 3.75, 9.796875};
  auto set = cliques_from_threshold(s1, 3.5042);
  CHECK(set.cliques == Cliques{{0, 1}});
  CHECK(set.axis_min == 1.0);
  CHECK(set.axis_max == 10.0);

  CHECK(cliques_from_threshold(std::vector{2.5, 3.5, 6.0}, 1.8154).cliques == Cliques{{0, 1}});
  CHECK(cliques_from_threshold(s1, 0.0).cliques.empty());
  CHECK(cliques_from_threshold(std::vector{1.0, 1.0}, 0.0).cliques.empty());
  // overlapping windows
  CHECK(cliques_from_threshold(std::vector{1.0, 2.0, 3.0, 4.0}, 1.5).cliques ==
        Cliques{{0, 1}, {1, 2}, {2, 3}});
  CHECK(cliques_from_threshold(std::vector{4.0, 1.0, 2.0, 3.0}, 2.5).cliques ==
        Cliques{{0, 2, 3}, {1, 2, 3}});
}

TEST_CASE("cliques_from_pairs examples") {
  const std::vector scores{1.0, 2.0, 3.0};
  RejectionMatrix all(3);
  all.set(0, 1, true);
  all.set(0, 2, true);
  all.set(1, 2, true);
  CHECK(cliques_from_pairs(all, scores).cliques.empty());

  CHECK(cliques_from_pairs(RejectionMatrix(3), scores).cliques == Cliques{{0, 1, 2}});

  RejectionMatrix ac(3);
  ac.set(0, 2, true);
  CHECK(cliques_from_pairs(ac, scores).cliques == Cliques{{0, 1}, {1, 2}});
}

TEST_CASE("single_clique") {
  const auto set = single_clique(std::vector{2.0, 2.0});
  CHECK(set.cliques == Cliques{{0, 1}});
  CHECK(set.axis_min == 2.0);
  CHECK(set.axis_max == 2.0);
}

TEST_CASE("property: Bron-Kerbosch equals the brute-force clique oracle") {
  oracle::Generator gen(41);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t k = gen.size(2, 8);
    RejectionMatrix rejected(k);
    const double density = gen.real(0.0, 1.0);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) rejected.set(a, b, gen.real(0.0, 1.0) < density);
    }
    const std::vector<double> scores(k, 1.0);
    const auto expected = oracle::brute_force_cliques(
        k, [&](std::size_t a, std::size_t b) { return !rejected.rejected(a, b); });
    CHECK(cliques_from_pairs(rejected, scores).cliques == expected);
  }
}

TEST_CASE("property: threshold cliques equal pair cliques of the thresholded graph") {
  oracle::Generator gen(42);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t k = gen.size(2, 8);
    std::vector<double> scores(k);
    for (auto& s : scores) s = 1.0 + 8.0 * gen.grid_value();
    const double cd = gen.real(0.0, 4.0);
    RejectionMatrix rejected(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        rejected.set(a, b, !(std::fabs(scores[a] - scores[b]) < cd));
      }
    }
    const auto by_threshold = cliques_from_threshold(scores, cd);
    CHECK(by_threshold == cliques_from_pairs(rejected, scores));
    CHECK(by_threshold.cliques ==
          oracle::brute_force_cliques(k, [&](std::size_t a, std::size_t b) {
            return std::fabs(scores[a] - scores[b]) < cd;
          }));
  }
}
