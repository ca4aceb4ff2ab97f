#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "megalie/errors.hpp"
#include "megalie/exactalg/io.hpp"
#include "support/random_algebra.hpp"

using namespace megalie::exactalg;

TEST_SUITE("io") {
  TEST_CASE("shipped files") {
    const LieAlgebra so3 = th::load("so3.json");
    CHECK(so3.labels() == std::vector<std::string>{"J1", "J2", "J3"});
    CHECK(so3.c(0, 1, 2) == Rational(1));
    CHECK(so3.c(1, 0, 2) == Rational(-1));
    CHECK(th::load("b4.json") == th::b(4));
    CHECK(th::load("b5.json") == th::b(5));
    CHECK(th::load("abelian3.json") == LieAlgebra(std::vector<std::string>{"e1", "e2", "e3"}, std::vector<Rational>(27)));
    CHECK_THROWS_AS(th::load("jacobi_broken.json"), AlgebraValidationError);
    CHECK(parse_algebra_unchecked(read_file(th::data("jacobi_broken.json"))).find_jacobi_violation().has_value());
    CHECK(load_linear_map(th::data("identity_b4.json")) == LinearMap::identity(10));
  }

  TEST_CASE("parse errors carry a location") {
    auto location_of = [](const std::string& text) {
      try {
        parse_algebra(text);
      } catch (const ParseError& e) {
        return e.location();
      }
      return std::string("no error");
    };
    CHECK(location_of("{\"dim\": 2,").rfind("byte", 0) == 0);
    CHECK(location_of(R"({"labels": ["a"], "brackets": []})") == "$");
    CHECK(location_of(R"({"dim": 2, "labels": ["a"], "brackets": []})") == "$.labels");
    CHECK(location_of(R"({"dim": 2, "labels": ["a", "b"], "brackets": [[1, 0, []]]})") == "$.brackets[0]");
    CHECK(location_of(R"({"dim": 2, "labels": ["a", "b"], "brackets": [[0, 1, [[2, "1"]]]]})") ==
          "$.brackets[0][2][0]");
    CHECK(location_of(R"({"dim": 2, "labels": ["a", "b"], "brackets": [[0, 1, [[1, "x"]]]]})").find("$.brackets") == 0);
    CHECK_THROWS_AS(parse_linear_map(R"({"dim": 2, "rows": [["1", "0"]]})"), megalie::DimensionError);
    CHECK_THROWS_AS(parse_linear_map(R"({"dim": 2, "rows": [["1", "0"], ["0"]]})"), megalie::DimensionError);
    CHECK_THROWS_AS(read_file(th::data("does_not_exist.json")), std::runtime_error);
  }

  TEST_CASE("integer and string coefficients") {
    const LieAlgebra g = parse_algebra(R"({"dim": 2, "labels": ["D", "P"], "brackets": [[0, 1, [[1, -1]]]]})");
    CHECK(g == th::load("dp.json"));
    const LinearMap m = parse_linear_map(R"({"dim": 2, "rows": [[1, "1/2"], ["-3/4", 0]]})");
    CHECK(m.matrix()(0, 1) == Rational(1, 2));
    CHECK(m.matrix()(1, 0) == Rational(-3, 4));
  }

  TEST_CASE("round trips") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
      const LieAlgebra g = testgen::random_lie_algebra(rng, 4);
      CHECK(parse_algebra(algebra_to_json(g)) == g);
      Matrix m(g.dim(), g.dim());
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) m(i, j) = testgen::small_rational(rng);
      CHECK(parse_linear_map(linear_map_to_json(LinearMap(m))) == LinearMap(m));
    }
    CHECK(algebra_to_json(th::load("b4.json")) == read_file(th::data("b4.json")));
  }
}
