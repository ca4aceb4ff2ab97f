#pragma once

#include <cstddef>
#include <random>
#include <string>

#include "megalie/exactalg/lie_algebra.hpp"
#include "megalie/exactalg/subspace.hpp"

namespace testgen {

using megalie::exactalg::LieAlgebra;
using megalie::exactalg::Rational;
using megalie::exactalg::Subspace;

/// p/q with |p| <= 3, q in {1, 2}.
Rational small_rational(std::mt19937_64& rng);

/// A Lie algebra of dimension 1..max_dim: one of abelian, R x_A R^k for a
/// random matrix A, so(3), sl(2), Heisenberg, r2 + r2 or the filiform n4,
/// padded with a central direction when needed, then written in a random
/// rational basis. `family` receives a short name for failure messages.
LieAlgebra random_lie_algebra(std::mt19937_64& rng, std::size_t max_dim, std::string* family = nullptr);

/// Span of 0..dim random small-integer vectors.
Subspace random_subspace(std::mt19937_64& rng, std::size_t dim);

}  // namespace testgen
