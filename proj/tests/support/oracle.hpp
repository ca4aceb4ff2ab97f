#pragma once

// Brute-force reference computations. Only the structure constants c(i, j, k)
// and Rational arithmetic of the library are used; elimination, brackets and
// kernels are written out here independently.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "megalie/exactalg/lie_algebra.hpp"
#include "megalie/exactalg/subspace.hpp"

namespace oracle {

using megalie::exactalg::LieAlgebra;
using megalie::exactalg::Rational;
using megalie::exactalg::Subspace;
using Vec = std::vector<Rational>;
using Span = std::vector<Vec>;  // independent rows

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);

/// Independent rows spanning the same space as `rows` (Gauss-Jordan).
Span reduce(Span rows, std::size_t n);
std::size_t rank(const Span& rows, std::size_t n);
/// All x with eq . x = 0 for every equation row.
Span kernel(const Span& equations, std::size_t n);

Span basis_of(const Subspace& s);
Span full(std::size_t n);
Span sum(const Span& a, const Span& b, std::size_t n);

/// {z in a : [z, y] = 0 for all y in b}, ansatz z = sum_r alpha_r a_r.
Span centralizer(const LieAlgebra& g, const Span& a, const Span& b);
/// {z : [z, e_j] = 0}, straight from the tensor.
Span center(const LieAlgebra& g);
/// {z in i0 : [z, y] in i2 for all y in i1}.
Span stabilizer(const LieAlgebra& g, const Span& i0, const Span& i1, const Span& i2);
Span bracket_span(const LieAlgebra& g, const Span& a, const Span& b);

std::vector<Span> derived_series(const LieAlgebra& g);
std::vector<Span> lower_central_series(const LieAlgebra& g);
std::vector<Span> upper_central_series(const LieAlgebra& g);

/// Same set of vectors: equal rank and the union adds nothing.
bool same(const Span& a, const Subspace& s);

/// Runs the library's series, center, centralizer and stabilizer on `g`
/// (with `pairs` random subspace choices) and lists every disagreement with
/// the computations above.
std::vector<std::string> mismatches(const LieAlgebra& g, std::mt19937_64& rng, int pairs = 4);

}  // namespace oracle
