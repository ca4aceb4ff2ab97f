#include <doctest.h>

#include <cmath>
#include <random>

#include "megalie/errors.hpp"
#include "megalie/symvec/expr.hpp"

using megalie::symvec::Expr;
using megalie::symvec::Point;
using megalie::symvec::Rational;
using megalie::symvec::Var;

namespace {

const Expr t = Expr::t(), lam = Expr::lambda(), mu = Expr::mu(), psi = Expr::psi(), s = Expr::s();
const Expr omega = Expr::param("Omega");

// Random member of the expression class: sums of products of a few atoms.
Expr random_expr(std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<int> pick(0, 11), coef(-3, 3);
  Expr out;
  for (int i = 0; i < terms; ++i) {
    Expr term = Rational(coef(rng), 1 + (coef(rng) & 1));
    for (int f = 0; f < 3; ++f) {
      switch (pick(rng)) {
        case 0: term *= t; break;
        case 1: term *= mu; break;
        case 2: term *= psi; break;
        case 3: term *= s; break;
        case 4: term *= Expr::inv_s(); break;
        case 5: term *= Expr::sin(lam + omega * t); break;
        case 6: term *= Expr::cos(2 * lam); break;
        case 7: term *= Expr::cos(lam - Expr(Rational(2, 3)) * t); break;
        case 8: term *= omega; break;
        case 9: term *= Expr::inv_one_minus_mu2(); break;
        case 10: term *= lam; break;
        default: break;
      }
    }
    out += term;
  }
  return out;
}

double eval(const Expr& e, const Point& p) { return e.evaluate(p, {{"Omega", 0.7}}); }

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("differentiation examples") {
    const Expr d = (mu * s).differentiate(Var::Mu);
    CHECK(d == s - mu * mu * Expr::inv_s());
    CHECK(d == (1 - 2 * mu * mu) * Expr::inv_s());
    CHECK(Expr::sin(lam + omega * t).differentiate(Var::T) == omega * Expr::cos(lam + omega * t));
    CHECK((t * t).differentiate(Var::Psi).is_zero());
    CHECK(s.differentiate(Var::Mu) == -mu * Expr::inv_s());
    CHECK(Expr::inv_one_minus_mu2().differentiate(Var::Mu) == 2 * mu * Expr::inv_one_minus_mu2().pow(2));
  }

  TEST_CASE("canonical rewrites") {
    CHECK((s * s + mu * mu - 1).is_zero());
    CHECK((Expr::sin(lam).pow(2) + Expr::cos(lam).pow(2) - 1).is_zero());
    CHECK((mu - mu.pow(3) - mu * s * s).is_zero());
    CHECK((s * Expr::inv_s()) == Expr(1));
    CHECK((Expr::inv_s() * Expr::inv_s()) == Expr::inv_one_minus_mu2());
    CHECK(((1 - mu * mu) * Expr::inv_one_minus_mu2()) == Expr(1));
    CHECK((Expr::sin(-lam)) == -Expr::sin(lam));
    CHECK((Expr::cos(lam + Expr::pi())) == -Expr::cos(lam));
    CHECK((Expr::sin(lam + 2 * Expr::pi())) == Expr::sin(lam));
    CHECK((Expr::cos(lam + Expr::pi() / Rational(2))) == -Expr::sin(lam));
    CHECK((2 * Expr::sin(lam) * Expr::cos(lam)) == Expr::sin(2 * lam));
    CHECK(Expr::sin(Expr(0)).is_zero());
    CHECK(Expr::cos(Expr(0)) == Expr(1));
  }

  TEST_CASE("unsupported inputs") {
    CHECK_THROWS_AS(Expr::sin(mu), megalie::UnsupportedError);
    CHECK_THROWS_AS(Expr::cos(lam * lam), megalie::UnsupportedError);
    CHECK_THROWS_AS(s.substitute({t, lam, mu * mu, psi}), megalie::UnsupportedError);
  }

  TEST_CASE("substitution") {
    CHECK((mu * s).substitute({t, lam, -mu, psi}) == -mu * s);
    CHECK(Expr::cos(lam + omega * t).substitute({-t, lam - omega * t, mu, psi}) == Expr::cos(lam - 2 * omega * t));
    CHECK((psi * t).substitute({t + 1, lam, mu, psi + mu}) == psi * t + psi + mu * t + mu);
    CHECK((omega * t).substitute_params({{"Omega", Rational(1, 2)}}) == t / Rational(2));
    CHECK(Expr::cos(lam + omega * t).substitute_params({{"Omega", 0}}) == Expr::cos(lam));
  }

  TEST_CASE("queries") {
    const Expr e = 3 * t * t * psi + omega * mu;
    CHECK(e.depends_on(Var::T));
    CHECK_FALSE(e.depends_on(Var::Lambda));
    CHECK(e.parameters() == std::set<std::string>{"Omega"});
    CHECK(e.polynomial_degree(Var::T) == 2);
    CHECK(e.coefficient(Var::T, 2) == 3 * psi);
    CHECK(e.coefficient(Var::T, 0) == omega * mu);
    CHECK_FALSE(Expr::cos(lam + t).polynomial_degree(Var::T).has_value());
    CHECK_FALSE(s.polynomial_degree(Var::Mu).has_value());
    CHECK(Expr(Rational(5, 2)).as_constant() == Rational(5, 2));
    CHECK_FALSE(mu.as_constant().has_value());
  }

  TEST_CASE("evaluation matches the expression") {
    const Point p{0.3, 1.1, 0.4, -0.7};
    const double sv = std::sqrt(1 - 0.16);
    CHECK(eval(mu * s * Expr::cos(lam + omega * t), p) == doctest::Approx(0.4 * sv * std::cos(1.1 + 0.7 * 0.3)));
    CHECK(eval(Expr::inv_one_minus_mu2(), p) == doctest::Approx(1 / 0.84));
    CHECK(eval(Expr::pi(), p) == doctest::Approx(M_PI));
  }

  TEST_CASE("rendering is deterministic") {
    const Expr e = mu * s * Expr::cos(lam + Expr(Rational(2, 3)) * t) + mu;
    CHECK(e.to_string() == (mu + s * mu * Expr::cos(lam + Expr(Rational(2, 3)) * t)).to_string());
    CHECK(Expr().to_string() == "0");
  }

  TEST_CASE("derivation laws on random expressions") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int trial = 0; trial < 200; ++trial) {
      const Expr a = random_expr(rng), b = random_expr(rng);
      const Rational k(trial % 7 - 3, 2);
      for (Var v : megalie::symvec::kVars) {
        CHECK((a + k * b).differentiate(v) == a.differentiate(v) + k * b.differentiate(v));
        CHECK((a * b).differentiate(v) == a.differentiate(v) * b + a * b.differentiate(v));
      }
      // Mixed partials commute.
      CHECK(a.differentiate(Var::T).differentiate(Var::Mu) == a.differentiate(Var::Mu).differentiate(Var::T));
      // Ring laws in canonical form.
      CHECK(a * b == b * a);
      CHECK((a + b) * (a - b) == a * a - b * b);
      CHECK(a.pow(3) == a * a * a);
      // Canonical form represents the same function.
      const Point p{u(rng), u(rng) * 3, u(rng), u(rng)};
      const double direct = eval(a, p) * eval(b, p);
      CHECK(eval(a * b, p) == doctest::Approx(direct).epsilon(1e-9).scale(1.0));
      // Numeric derivative agrees.
      const double h = 1e-6;
      Point hi = p, lo = p;
      hi[2] += h;
      lo[2] -= h;
      CHECK(eval(a.differentiate(Var::Mu), p) ==
            doctest::Approx((eval(a, hi) - eval(a, lo)) / (2 * h)).epsilon(1e-5).scale(1.0));
    }
  }
}
