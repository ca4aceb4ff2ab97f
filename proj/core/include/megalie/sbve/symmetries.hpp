#pragma once

#include <array>
#include <string>
#include <vector>

#include "megalie/exactalg/automorphism.hpp"
#include "megalie/sbve/generators.hpp"
#include "megalie/symvec/transformation.hpp"

namespace megalie::sbve {

using symvec::PointTransformation;

/// t~ = t, lambda~ = lambda + Omega t, mu~ = mu, psi~ = psi - Omega mu, with
/// Omega symbolic.
PointTransformation omega_elimination();
PointTransformation omega_elimination(const Rational& omega);

/// (t, lambda, mu, psi) -> (-t, -lambda, mu, psi)
PointTransformation sigma1();
/// (t, lambda, mu, psi) -> (t, lambda, -mu, -psi)
PointTransformation sigma2();
std::array<PointTransformation, 2> discrete_symmetries();

struct SymmetryParams {
  Rational a0 = 0;
  Rational a1 = 1;
  int epsilon = 1;
  std::vector<Rational> f_coeffs;  // f(t) = sum f_k t^k

  Rational c() const { return Rational(epsilon) / a1; }
};

/// t~ = a1 t + a0, lambda~ = lambda, mu~ = eps mu, psi~ = (eps/a1) psi + f(t).
/// Throws ContractError for a1 = 0 or eps not in {-1, 1}.
PointTransformation general_symmetry(const SymmetryParams& p);

/// Matrix of T_* from the span of `source` into the span of `target`
/// (column j = image of source member j). Throws ContractError with the
/// residual when an image leaves the target span.
exactalg::LinearMap pushforward_matrix(const GeneratorSet& source, const PointTransformation& tr,
                                       const GeneratorSet& target);
exactalg::LinearMap pushforward_matrix(const GeneratorSet& gs, const PointTransformation& tr);

struct FactorGroupTable {
  std::array<std::string, 4> names;
  /// product[i][j] = index of names[i] * names[j] (apply j first).
  std::array<std::array<int, 4>, 4> product{};
  bool klein_four = false;
};

/// Composes {id, sigma1, sigma2, sigma1 sigma2} and identifies every product
/// by exact comparison of coordinate maps.
FactorGroupTable factor_group_table();

}  // namespace megalie::sbve
