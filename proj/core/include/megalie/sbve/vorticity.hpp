#pragma once

#include <functional>
#include <vector>

#include "megalie/symvec/expr.hpp"

namespace megalie::sbve {

using symvec::Expr;

/// zeta = psi_lambda,lambda / (1 - mu^2) + ((1 - mu^2) psi_mu)_mu
Expr vorticity(const Expr& psi);

/// zeta_t + psi_lambda zeta_mu - psi_mu zeta_lambda + 2 Omega psi_lambda
Expr residual(const Expr& psi, const Expr& omega);

struct Grid {
  std::vector<double> t;
  std::vector<double> lambda;
  std::vector<double> mu;

  /// t in {0, 0.3, 0.7}, 8 equispaced lambda, mu in {+-0.1, +-0.4, +-0.8}.
  static Grid standard();
  /// Throws ContractError when some |mu| exceeds 0.95.
  void check() const;
};

/// Maximum |residual| over the grid using exact derivatives.
double residual_on_grid(const Expr& psi, double omega, const Grid& grid = Grid::standard());

using ScalarField = std::function<double(double t, double lambda, double mu)>;

/// Same maximum with every derivative of psi and zeta taken by centered
/// second-order differences of spacing h.
double residual_on_grid_fd(const ScalarField& psi, const ScalarField& zeta, double omega,
                           const Grid& grid = Grid::standard(), double h = 1e-4);

/// psi and its vorticity as plain functions of (t, lambda, mu).
ScalarField as_field(const Expr& e);

}  // namespace megalie::sbve
