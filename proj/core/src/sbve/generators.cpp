#include "megalie/sbve/generators.hpp"

#include "megalie/errors.hpp"

namespace megalie::sbve {

using symvec::Var;

namespace {

GeneratorSet make_generators(const Expr& w, std::size_t n_max) {
  if (n_max < 2) throw ContractError("truncation needs n_max >= 2, got " + std::to_string(n_max));
  const Expr t = Expr::t();
  const Expr mu = Expr::mu();
  const Expr theta = Expr::lambda() + w * t;
  const Expr sin = Expr::sin(theta);
  const Expr cos = Expr::cos(theta);

  GeneratorSet gs{w, n_max, {}};
  VectorField d;
  d[Var::T] = t;
  d[Var::Lambda] = -(w * t);
  d[Var::Psi] = -(Expr::psi() - w * mu);
  gs.members.push_back({"D", d});
  gs.members.push_back({"P", VectorField::partial(Var::T)});
  gs.members.push_back({"J1", VectorField::partial(Var::Lambda)});

  // The d/dpsi part rides on (1 - mu^2)(d/dmu + Omega d/dpsi) so that the
  // rotating-frame map carries J2, J3 onto their Omega = 0 forms.
  VectorField j2;
  j2[Var::Lambda] = mu * sin * Expr::inv_s();
  j2[Var::Mu] = cos * Expr::s();
  j2[Var::Psi] = w * cos * Expr::s();
  gs.members.push_back({"J2", j2});

  VectorField j3;
  j3[Var::Lambda] = mu * cos * Expr::inv_s();
  j3[Var::Mu] = -(sin * Expr::s());
  j3[Var::Psi] = -(w * sin * Expr::s());
  gs.members.push_back({"J3", j3});

  for (std::size_t n = 0; n <= n_max; ++n) {
    VectorField z;
    z[Var::Psi] = t.pow(static_cast<unsigned>(n));
    gs.members.push_back({"Z" + std::to_string(n), z});
  }
  return gs;
}

}  // namespace

std::vector<std::string> GeneratorSet::labels() const {
  std::vector<std::string> out;
  for (const auto& m : members) out.push_back(m.label);
  return out;
}

const VectorField& GeneratorSet::at(const std::string& label) const {
  for (const auto& m : members)
    if (m.label == label) return m.field;
  throw SchemaError("no generator labelled '" + label + "'");
}

GeneratorSet generators(const Rational& omega, std::size_t n_max) { return make_generators(Expr(omega), n_max); }

GeneratorSet symbolic_generators(std::size_t n_max) { return make_generators(Expr::param(kOmega), n_max); }

exactalg::LieAlgebra build_truncated_algebra(const GeneratorSet& gs) {
  const std::size_t n = gs.members.size();
  std::vector<exactalg::BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const VectorField c = symvec::commutator(gs.members[i].field, gs.members[j].field);
      if (c.is_zero()) continue;
      const auto dec = symvec::decompose_in_basis(c, gs.members);
      if (!dec.ok()) {
        throw ContractError("[" + gs.members[i].label + ", " + gs.members[j].label +
                            "] leaves the generator span: " + dec.witness);
      }
      exactalg::BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < n; ++k)
        if (!dec.coefficients[k].is_zero()) e.terms.emplace_back(k, dec.coefficients[k]);
      entries.push_back(std::move(e));
    }
  }
  auto g = exactalg::LieAlgebra::from_brackets(gs.labels(), entries);
  return exactalg::LieAlgebra::create(g.labels(), g.structure());
}

}  // namespace megalie::sbve
