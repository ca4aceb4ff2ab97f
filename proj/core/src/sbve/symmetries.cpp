#include "megalie/sbve/symmetries.hpp"

#include "megalie/errors.hpp"

namespace megalie::sbve {

using symvec::Var;

PointTransformation omega_elimination() {
  const Expr w = Expr::param(kOmega);
  PointTransformation tr;
  tr.name = "rotating-frame";
  tr.forward = {Expr::t(), Expr::lambda() + w * Expr::t(), Expr::mu(), Expr::psi() - w * Expr::mu()};
  tr.inverse = {Expr::t(), Expr::lambda() - w * Expr::t(), Expr::mu(), Expr::psi() + w * Expr::mu()};
  tr.params[kOmega] = std::nullopt;
  return tr;
}

PointTransformation omega_elimination(const Rational& omega) { return omega_elimination().instantiate({{kOmega, omega}}); }

PointTransformation sigma1() {
  PointTransformation tr;
  tr.name = "sigma1";
  tr.forward = {-Expr::t(), -Expr::lambda(), Expr::mu(), Expr::psi()};
  tr.inverse = tr.forward;
  return tr;
}

PointTransformation sigma2() {
  PointTransformation tr;
  tr.name = "sigma2";
  tr.forward = {Expr::t(), Expr::lambda(), -Expr::mu(), -Expr::psi()};
  tr.inverse = tr.forward;
  return tr;
}

std::array<PointTransformation, 2> discrete_symmetries() { return {sigma1(), sigma2()}; }

PointTransformation general_symmetry(const SymmetryParams& p) {
  if (p.a1.is_zero()) throw ContractError("a1 = 0 makes the transformation degenerate");
  if (p.epsilon != 1 && p.epsilon != -1) throw ContractError("epsilon must be +1 or -1");
  const Expr t = Expr::t();
  const Rational eps(p.epsilon);
  auto f_of = [&](const Expr& arg) {
    Expr f;
    Expr power(1);
    for (const auto& coeff : p.f_coeffs) {
      f += Expr(coeff) * power;
      power *= arg;
    }
    return f;
  };
  const Expr old_t = (t - Expr(p.a0)) / p.a1;
  PointTransformation tr;
  tr.name = "G(a0=" + p.a0.to_string() + ", a1=" + p.a1.to_string() + ", eps=" + std::to_string(p.epsilon) + ")";
  tr.forward = {Expr(p.a1) * t + Expr(p.a0), Expr::lambda(), Expr(eps) * Expr::mu(),
                Expr(p.c()) * Expr::psi() + f_of(t)};
  tr.inverse = {old_t, Expr::lambda(), Expr(eps) * Expr::mu(), Expr(p.a1 * eps) * (Expr::psi() - f_of(old_t))};
  return tr;
}

exactalg::LinearMap pushforward_matrix(const GeneratorSet& source, const PointTransformation& tr,
                                       const GeneratorSet& target) {
  const std::size_t n = source.members.size();
  if (target.members.size() != n) throw DimensionError("source and target generator sets differ in size");
  exactalg::Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const VectorField image = symvec::pushforward(source.members[j].field, tr);
    const auto dec = symvec::decompose_in_basis(image, target.members);
    if (!dec.ok()) {
      throw ContractError("push-forward of " + source.members[j].label + " under " + tr.name +
                          " leaves the generator span: " + dec.witness);
    }
    for (std::size_t i = 0; i < n; ++i) m(i, j) = dec.coefficients[i];
  }
  return exactalg::LinearMap(std::move(m));
}

exactalg::LinearMap pushforward_matrix(const GeneratorSet& gs, const PointTransformation& tr) {
  return pushforward_matrix(gs, tr, gs);
}

FactorGroupTable factor_group_table() {
  const PointTransformation id = PointTransformation::identity();
  const PointTransformation s1 = sigma1();
  const PointTransformation s2 = sigma2();
  PointTransformation s12 = compose(s1, s2);
  s12.name = "sigma1*sigma2";
  const std::array<PointTransformation, 4> reps{id, s1, s2, s12};

  FactorGroupTable out;
  for (std::size_t i = 0; i < 4; ++i) out.names[i] = reps[i].name;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const PointTransformation p = compose(reps[i], reps[j]);
      out.product[i][j] = -1;
      for (std::size_t k = 0; k < 4; ++k)
        if (p.forward == reps[k].forward) out.product[i][j] = static_cast<int>(k);
    }
  }
  // Klein four-group: closed, identity at 0, every element an involution,
  // commutative, and the table is a Latin square.
  bool klein = true;
  for (std::size_t i = 0; i < 4; ++i) {
    std::array<bool, 4> row_seen{};
    std::array<bool, 4> col_seen{};
    for (std::size_t j = 0; j < 4; ++j) {
      const int p = out.product[i][j];
      const int q = out.product[j][i];
      if (p < 0 || q < 0 || p != q) {
        klein = false;
        continue;
      }
      row_seen[static_cast<std::size_t>(p)] = true;
      col_seen[static_cast<std::size_t>(out.product[j][i])] = true;
    }
    for (std::size_t k = 0; k < 4; ++k) klein = klein && row_seen[k] && col_seen[k];
    klein = klein && out.product[i][i] == 0 && out.product[0][i] == static_cast<int>(i);
  }
  out.klein_four = klein;
  return out;
}

}  // namespace megalie::sbve
