#include <doctest.h>

#include <random>

#include "support/oracle.hpp"
#include "support/random_algebra.hpp"

TEST_SUITE("oracle") {
  TEST_CASE("library agrees with the brute-force ansatz on random algebras") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 50; ++trial) {
      std::string family;
      const auto g = testgen::random_lie_algebra(rng, 4, &family);
      const auto bad = oracle::mismatches(g, rng, 6);
      CHECK_MESSAGE(bad.empty(), "algebra " << trial << " (" << family << "): " << (bad.empty() ? "" : bad.front()));
    }
  }

  TEST_CASE("oracle sanity on known algebras") {
    using megalie::exactalg::LieAlgebra;
    const LieAlgebra h = LieAlgebra::from_brackets({"x", "y", "z"}, {{0, 1, {{2, 1}}}});
    CHECK(oracle::center(h).size() == 1);
    CHECK(oracle::derived_series(h).size() == 3);
    CHECK(oracle::upper_central_series(h).back().size() == 3);
    CHECK(oracle::kernel({{1, 1, 0}}, 3).size() == 2);
    CHECK(oracle::rank({{1, 2}, {2, 4}}, 2) == 1);
  }
}
