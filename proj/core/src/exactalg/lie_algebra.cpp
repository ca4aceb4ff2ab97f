#include "megalie/exactalg/lie_algebra.hpp"

#include <sstream>

#include "megalie/errors.hpp"

namespace megalie::exactalg {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Rational> structure)
    : labels_(std::move(labels)), c_(std::move(structure)) {
  const std::size_t n = labels_.size();
  if (c_.size() != n * n * n) {
    throw DimensionError("structure tensor has " + std::to_string(c_.size()) + " entries, expected " +
                         std::to_string(n * n * n));
  }
}

LieAlgebra LieAlgebra::create(std::vector<std::string> labels, std::vector<Rational> structure) {
  LieAlgebra g(std::move(labels), std::move(structure));
  if (auto v = g.find_antisymmetry_violation()) {
    std::ostringstream os;
    os << "antisymmetry fails for pair (" << v->i << ", " << v->j << ")";
    throw AlgebraValidationError(os.str(), std::nullopt, v);
  }
  if (auto v = g.find_jacobi_violation()) {
    std::ostringstream os;
    os << "Jacobi identity fails for triple (" << v->triple[0] << ", " << v->triple[1] << ", " << v->triple[2]
       << ")";
    throw AlgebraValidationError(os.str(), v, std::nullopt);
  }
  return g;
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets) {
  const std::size_t n = labels.size();
  std::vector<Rational> c(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * n + j) * n + k]; };
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) throw DimensionError("bracket index out of range");
    if (b.i >= b.j) throw SchemaError("bracket entries must have i < j");
    for (const auto& [k, coeff] : b.terms) {
      if (k >= n) throw DimensionError("bracket result index out of range");
      at(b.i, b.j, k) += coeff;
      at(b.j, b.i, k) -= coeff;
    }
  }
  return create(std::move(labels), std::move(c));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), std::vector<Rational>(dim * dim * dim));
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Matrix LieAlgebra::ad(std::span<const Rational> x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = bracket_element(*this, x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

std::optional<AntisymmetryViolation> LieAlgebra::find_antisymmetry_violation() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k)) return AntisymmetryViolation{i, j};
  return std::nullopt;
}

std::optional<JacobiViolation> LieAlgebra::find_jacobi_violation() const {
  const std::size_t n = dim();
  // [e_a, [e_b, e_c]] + [e_b, [e_c, e_a]] + [e_c, [e_a, e_b]]
  auto nested = [&](std::size_t a, std::size_t b, std::size_t cc, std::size_t m) {
    Rational acc;
    for (std::size_t l = 0; l < n; ++l) {
      const Rational& inner = c(b, cc, l);
      if (!inner.is_zero() && !c(a, l, m).is_zero()) acc += inner * c(a, l, m);
    }
    return acc;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t cc = b + 1; cc < n; ++cc) {
        Vector sum(n);
        bool bad = false;
        for (std::size_t m = 0; m < n; ++m) {
          sum[m] = nested(a, b, cc, m) + nested(b, cc, a, m) + nested(cc, a, b, m);
          bad = bad || !sum[m].is_zero();
        }
        if (bad) return JacobiViolation{{a, b, cc}, std::move(sum)};
      }
  return std::nullopt;
}

Vector bracket_element(const LieAlgebra& g, std::span<const Rational> x, std::span<const Rational> y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("bracket operands of length " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " in algebra of dimension " + std::to_string(n));
  }
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      auto row = g.bracket_of_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!row[k].is_zero()) out[k] += w * row[k];
    }
  }
  return out;
}

}  // namespace megalie::exactalg
