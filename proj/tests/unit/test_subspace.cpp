#include <doctest.h>

#include <random>

#include "megalie/errors.hpp"
#include "megalie/exactalg/subspace.hpp"
#include "support/random_algebra.hpp"

using namespace megalie::exactalg;

namespace {

Subspace sp(std::initializer_list<std::initializer_list<int>> rows, std::size_t n) {
  std::vector<Vector> v;
  for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
  return Subspace::span(v, n);
}

}  // namespace

TEST_SUITE("subspace") {
  TEST_CASE("canonical form makes equality structural") {
    CHECK(sp({{2, 2, 0}}, 3) == sp({{-1, -1, 0}}, 3));
    CHECK(sp({{1, 1, 0}, {1, -1, 0}}, 3) == Subspace::coordinate(3, {0, 1}));
    CHECK(Subspace(3).is_zero());
    CHECK(Subspace::full(3).is_full());
    CHECK(sp({{0, 0, 0}}, 3) == Subspace(3));
  }

  TEST_CASE("sum examples") {
    CHECK(subspace_sum(Subspace::coordinate(3, {0}), Subspace::coordinate(3, {1})) == Subspace::coordinate(3, {0, 1}));
    const Subspace u = sp({{1, 2, 3}}, 3);
    CHECK(subspace_sum(u, Subspace(3)) == u);
    CHECK(subspace_sum(sp({{1, 1, 0}}, 3), sp({{1, -1, 0}}, 3)) == Subspace::coordinate(3, {0, 1}));
  }

  TEST_CASE("intersection examples") {
    const Subspace u = sp({{1, 2, 3}, {0, 1, 1}}, 3);
    CHECK(subspace_intersect(u, u) == u);
    CHECK(subspace_intersect(Subspace::coordinate(3, {0, 1}), Subspace::coordinate(3, {1, 2})) ==
          Subspace::coordinate(3, {1}));
    CHECK(subspace_intersect(u, Subspace(3)) == Subspace(3));
  }

  TEST_CASE("ambient mismatch") {
    CHECK_THROWS_AS(subspace_sum(Subspace(2), Subspace(3)), megalie::DimensionError);
    CHECK_THROWS_AS(subspace_intersect(Subspace(2), Subspace(3)), megalie::DimensionError);
    CHECK_THROWS_AS(Subspace(2).contains(Vector(3)), megalie::DimensionError);
  }

  TEST_CASE("annihilator and coordinate members") {
    const Subspace u = sp({{1, 1, 0, 0}, {0, 0, 1, 0}}, 4);
    const Matrix ann = u.annihilator();
    CHECK(ann.rows() == 2);
    for (std::size_t a = 0; a < ann.rows(); ++a)
      for (std::size_t r = 0; r < u.dim(); ++r) CHECK(dot(ann.row(a), u.basis().row(r)).is_zero());
    CHECK(u.coordinate_members() == std::vector<std::size_t>{2});
    CHECK_FALSE(u.is_coordinate());
    CHECK(Subspace::coordinate(4, {1, 3}).is_coordinate());
  }

  TEST_CASE("describe") {
    const std::vector<std::string> labels{"D", "P", "Z0"};
    CHECK(describe(Subspace::coordinate(3, {0, 2}), labels) == "<D, Z0>");
    CHECK(describe(Subspace(3), labels) == "{0}");
  }

  TEST_CASE("lattice laws on random subspaces") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const Subspace a = testgen::random_subspace(rng, n);
      const Subspace b = testgen::random_subspace(rng, n);
      const Subspace c = testgen::random_subspace(rng, n);
      CHECK(subspace_sum(a, b) == subspace_sum(b, a));
      CHECK(subspace_intersect(a, b) == subspace_intersect(b, a));
      CHECK(subspace_sum(subspace_sum(a, b), c) == subspace_sum(a, subspace_sum(b, c)));
      CHECK(subspace_intersect(subspace_intersect(a, b), c) == subspace_intersect(a, subspace_intersect(b, c)));
      CHECK(subspace_sum(a, a) == a);
      CHECK(subspace_intersect(a, a) == a);
      CHECK(subspace_sum(a, b).includes(a));
      CHECK(a.includes(subspace_intersect(a, b)));
      // Grassmann formula.
      CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());
      // Monotone: a <= a + c, so a cap b <= (a + c) cap b.
      CHECK(subspace_intersect(subspace_sum(a, c), b).includes(subspace_intersect(a, b)));
      CHECK(a.annihilator().rows() + a.dim() == n);
    }
  }
}
