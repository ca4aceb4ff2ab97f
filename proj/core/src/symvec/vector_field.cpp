#include "megalie/symvec/vector_field.hpp"

#include <map>

#include "megalie/exactalg/matrix.hpp"

namespace megalie::symvec {

using exactalg::Matrix;

VectorField VectorField::partial(Var v) {
  VectorField x;
  x[v] = Expr(1);
  return x;
}

Expr VectorField::apply(const Expr& f) const {
  Expr out;
  for (Var v : kVars)
    if (!c_[index(v)].is_zero()) out += c_[index(v)] * f.differentiate(v);
  return out;
}

bool VectorField::is_zero() const {
  for (const auto& e : c_)
    if (!e.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField out;
  for (std::size_t i = 0; i < 4; ++i) out.c_[i] = -c_[i];
  return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField out;
  for (std::size_t i = 0; i < 4; ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

VectorField operator*(const Expr& k, const VectorField& x) {
  VectorField out;
  for (std::size_t i = 0; i < 4; ++i) out.c_[i] = k * x.c_[i];
  return out;
}

VectorField VectorField::substitute_params(const std::map<std::string, Rational>& values) const {
  VectorField out;
  for (std::size_t i = 0; i < 4; ++i) out.c_[i] = c_[i].substitute_params(values);
  return out;
}

std::string VectorField::to_string() const {
  std::string out;
  for (Var v : kVars) {
    const Expr& e = c_[index(v)];
    if (e.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + e.to_string() + ")*d/d" + std::string(var_name(v));
  }
  return out.empty() ? "0" : out;
}

VectorField commutator(const VectorField& x, const VectorField& y) {
  VectorField out;
  for (Var v : kVars) out[v] = x.apply(y[v]) - y.apply(x[v]);
  return out;
}

Decomposition decompose_in_basis(const VectorField& x, const std::vector<LabeledField>& basis) {
  // Coordinates: (component, canonical monomial).
  std::map<std::pair<std::size_t, Monomial>, std::size_t> keys;
  auto collect = [&](const VectorField& f) {
    for (std::size_t i = 0; i < 4; ++i)
      for (const auto& [m, c] : f.components()[i].terms()) keys.try_emplace({i, m}, 0);
  };
  collect(x);
  for (const auto& b : basis) collect(b.field);
  std::size_t row = 0;
  for (auto& [k, idx] : keys) idx = row++;

  const std::size_t n = basis.size();
  Matrix a(keys.size(), n + 1);
  auto fill = [&](const VectorField& f, std::size_t col) {
    for (std::size_t i = 0; i < 4; ++i)
      for (const auto& [m, c] : f.components()[i].terms()) a(keys.at({i, m}), col) = c;
  };
  for (std::size_t j = 0; j < n; ++j) fill(basis[j].field, j);
  fill(x, n);

  const auto ech = exactalg::echelon(a);
  Decomposition out;
  out.coefficients.assign(n, Rational(0));
  std::vector<bool> pivot(n + 1, false);
  for (auto p : ech.pivots) pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!pivot[j]) {
      out.status = DecompositionStatus::kAmbiguous;
      out.witness = basis[j].label + " depends on the preceding basis fields";
      return out;
    }
  }
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    if (ech.pivots[r] < n) out.coefficients[ech.pivots[r]] = ech.basis(r, n);
  if (pivot[n]) {
    VectorField residual = x;
    for (std::size_t j = 0; j < n; ++j) residual = residual - Expr(out.coefficients[j]) * basis[j].field;
    out.status = DecompositionStatus::kOutsideSpan;
    out.witness = residual.to_string();
  }
  return out;
}

}  // namespace megalie::symvec
