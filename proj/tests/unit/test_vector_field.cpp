#include <doctest.h>

#include "megalie/sbve/generators.hpp"
#include "megalie/sbve/symmetries.hpp"
#include "megalie/symvec/transformation.hpp"
#include "megalie/symvec/vector_field.hpp"

using namespace megalie::symvec;
using megalie::sbve::generators;
using megalie::sbve::symbolic_generators;

TEST_SUITE("vector_field") {
  TEST_CASE("derivation and arithmetic") {
    const VectorField d = VectorField::partial(Var::T);
    CHECK(d.apply(Expr::t() * Expr::t()) == 2 * Expr::t());
    CHECK((d - d).is_zero());
    const VectorField x({Expr::mu(), Expr(0), Expr::s(), Expr::psi()});
    CHECK(x.apply(Expr::mu()) == Expr::s());
    CHECK((Expr::t() * x)[Var::T] == Expr::t() * Expr::mu());
    CHECK(x.to_string().find("d/dt") != std::string::npos);
  }

  TEST_CASE("commutator examples at Omega = 0") {
    const auto gs = generators(0, 4);
    CHECK(commutator(gs.at("J1"), gs.at("J2")) == gs.at("J3"));
    CHECK(commutator(gs.at("J2"), gs.at("J3")) == gs.at("J1"));
    CHECK(commutator(gs.at("J3"), gs.at("J1")) == gs.at("J2"));
    CHECK(commutator(gs.at("D"), gs.at("P")) == -gs.at("P"));
    for (int n = 0; n <= 4; ++n) {
      const std::string z = "Z" + std::to_string(n);
      CHECK(commutator(gs.at("D"), gs.at(z)) == Expr(n + 1) * gs.at(z));
      if (n > 0) CHECK(commutator(gs.at("P"), gs.at(z)) == Expr(n) * gs.at("Z" + std::to_string(n - 1)));
    }
    for (const auto& m : gs.members) CHECK(commutator(m.field, m.field).is_zero());
  }

  TEST_CASE("bilinear, antisymmetric, Jacobi on the symbolic generator set") {
    const auto gs = symbolic_generators(3);
    const auto& ms = gs.members;
    const Expr k = Expr(Rational(3, 2));
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = 0; j < ms.size(); ++j) {
        const auto& x = ms[i].field;
        const auto& y = ms[j].field;
        CHECK(commutator(x, y) == -commutator(y, x));
        CHECK(commutator(k * x + y, y) == k * commutator(x, y));
        for (std::size_t l = j + 1; l < ms.size(); ++l) {
          if (j <= i) continue;
          const auto& z = ms[l].field;
          const VectorField cyc =
              commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
          CHECK_MESSAGE(cyc.is_zero(), ms[i].label << ", " << ms[j].label << ", " << ms[l].label);
        }
      }
  }

  TEST_CASE("decompose_in_basis") {
    const auto gs = generators(0, 4);
    const std::vector<LabeledField> js{{"J1", gs.at("J1")}, {"J2", gs.at("J2")}, {"J3", gs.at("J3")}};
    const auto j3 = decompose_in_basis(gs.at("J3"), js);
    REQUIRE(j3.ok());
    CHECK(j3.coefficients == std::vector<Rational>{0, 0, 1});

    const auto img = decompose_in_basis(pushforward(gs.at("J2"), megalie::sbve::sigma2()), js);
    REQUIRE(img.ok());
    CHECK(img.coefficients == std::vector<Rational>{0, -1, 0});

    const auto d = decompose_in_basis(gs.at("D"), js);
    CHECK(d.status == DecompositionStatus::kOutsideSpan);
    CHECK_FALSE(d.witness.empty());

    const auto mixed = decompose_in_basis(Expr(2) * gs.at("J1") - Expr(Rational(1, 3)) * gs.at("J3"), js);
    REQUIRE(mixed.ok());
    CHECK(mixed.coefficients == std::vector<Rational>{2, 0, Rational(-1, 3)});

    std::vector<LabeledField> dependent = js;
    dependent.push_back({"2J1", Expr(2) * gs.at("J1")});
    CHECK(decompose_in_basis(gs.at("J3"), dependent).status == DecompositionStatus::kAmbiguous);
  }
}
