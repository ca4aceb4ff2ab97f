#include "megalie/sbve/vorticity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "megalie/errors.hpp"

namespace megalie::sbve {

using symvec::Var;

Expr vorticity(const Expr& psi) {
  const Expr one_minus = Expr(1) - Expr::mu() * Expr::mu();
  return Expr::inv_one_minus_mu2() * psi.differentiate(Var::Lambda).differentiate(Var::Lambda) +
         (one_minus * psi.differentiate(Var::Mu)).differentiate(Var::Mu);
}

Expr residual(const Expr& psi, const Expr& omega) {
  const Expr zeta = vorticity(psi);
  const Expr psi_l = psi.differentiate(Var::Lambda);
  return zeta.differentiate(Var::T) + psi_l * zeta.differentiate(Var::Mu) -
         psi.differentiate(Var::Mu) * zeta.differentiate(Var::Lambda) + Expr(2) * omega * psi_l;
}

Grid Grid::standard() {
  Grid g;
  g.t = {0.0, 0.3, 0.7};
  for (int i = 0; i < 8; ++i) g.lambda.push_back(2.0 * std::numbers::pi * i / 8.0);
  g.mu = {-0.8, -0.4, -0.1, 0.1, 0.4, 0.8};
  return g;
}

void Grid::check() const {
  for (double m : mu)
    if (std::abs(m) > 0.95) throw ContractError("grid point mu = " + std::to_string(m) + " is too close to a pole");
}

double residual_on_grid(const Expr& psi, double omega, const Grid& grid) {
  grid.check();
  // Evaluate the residual with omega kept as a named parameter so a double
  // angular velocity does not need a rational representation.
  const Expr r = residual(psi, Expr::param("omega"));
  const symvec::ParamValues params{{"omega", omega}};
  double worst = 0.0;
  for (double t : grid.t)
    for (double l : grid.lambda)
      for (double m : grid.mu) worst = std::max(worst, std::abs(r.evaluate({t, l, m, 0.0}, params)));
  return worst;
}

double residual_on_grid_fd(const ScalarField& psi, const ScalarField& zeta, double omega, const Grid& grid,
                           double h) {
  grid.check();
  auto d = [h](const ScalarField& f, double t, double l, double m, int axis) {
    switch (axis) {
      case 0: return (f(t + h, l, m) - f(t - h, l, m)) / (2 * h);
      case 1: return (f(t, l + h, m) - f(t, l - h, m)) / (2 * h);
      default: return (f(t, l, m + h) - f(t, l, m - h)) / (2 * h);
    }
  };
  double worst = 0.0;
  for (double t : grid.t) {
    for (double l : grid.lambda) {
      for (double m : grid.mu) {
        const double psi_l = d(psi, t, l, m, 1);
        const double r = d(zeta, t, l, m, 0) + psi_l * d(zeta, t, l, m, 2) - d(psi, t, l, m, 2) * d(zeta, t, l, m, 1) +
                         2 * omega * psi_l;
        worst = std::max(worst, std::abs(r));
      }
    }
  }
  return worst;
}

ScalarField as_field(const Expr& e) {
  return [e](double t, double l, double m) { return e.evaluate({t, l, m, 0.0}); };
}

}  // namespace megalie::sbve
