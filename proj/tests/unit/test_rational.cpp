#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <sstream>

#include "megalie/exactalg/rational.hpp"

using megalie::exactalg::Rational;

TEST_SUITE("rational") {
  TEST_CASE("normalized representation") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("parse and print") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse(" -7/14 ") == Rational(-1, 2));
    CHECK(Rational::parse("4/-6") == Rational(-2, 3));
    CHECK(Rational(-5, 3).to_string() == "-5/3");
    CHECK(Rational(8).to_string() == "8");
    std::ostringstream os;
    os << Rational(1, 3);
    CHECK(os.str() == "1/3");
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
  }

  TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
  }

  TEST_CASE("ordering and floor") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-4).floor() == -4);
  }

  TEST_CASE("overflow is reported, not wrapped") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    // Large intermediates that reduce back into range are fine.
    const Rational huge(std::int64_t{1} << 40, 3);
    CHECK(huge * Rational(3, std::int64_t{1} << 40) == Rational(1));
  }

  TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int i = 0; i < 500; ++i) {
      const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Rational(0));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(std::abs(Rational::parse(a.to_string()).to_double() - a.to_double()) == 0.0);
    }
  }
}
