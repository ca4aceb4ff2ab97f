#include "megalie/exactalg/structure.hpp"

#include "megalie/errors.hpp"
#include "megalie/exactalg/detail/stabilizer.hpp"

namespace megalie::exactalg {

namespace {

void require_ambient(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient() != g.dim()) {
    throw DimensionError("subspace of ambient dimension " + std::to_string(s.ambient()) +
                         " used with algebra of dimension " + std::to_string(g.dim()));
  }
}

template <typename Step>
std::vector<Subspace> series(const LieAlgebra& g, Step step) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  while (!out.back().is_zero()) {
    Subspace next = step(out.back());
    const bool repeated = next == out.back();
    out.push_back(std::move(next));
    if (repeated) break;
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<std::vector<Vector>> basis_brackets(const LieAlgebra& g, const Subspace& i0, const Subspace& i1) {
  std::vector<std::vector<Vector>> out(i0.dim());
  for (std::size_t r = 0; r < i0.dim(); ++r) {
    out[r].reserve(i1.dim());
    for (std::size_t y = 0; y < i1.dim(); ++y)
      out[r].push_back(bracket_element(g, i0.basis().row(r), i1.basis().row(y)));
  }
  return out;
}

Subspace stabilizer_from_brackets(const Subspace& i0, const std::vector<std::vector<Vector>>& brackets,
                                  const Matrix& annihilator) {
  const std::size_t m = i0.dim();
  if (m == 0) return i0;
  // Unknowns alpha_r with z = sum_r alpha_r u_r; one equation per pair
  // (basis vector y of i1, annihilator row a of i2): sum_r alpha_r a.[u_r, y] = 0.
  Matrix conditions(0, m);
  Vector eq(m);
  const std::size_t ny = brackets.front().size();
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t a = 0; a < annihilator.rows(); ++a) {
      bool nonzero = false;
      for (std::size_t r = 0; r < m; ++r) {
        eq[r] = dot(annihilator.row(a), brackets[r][y]);
        nonzero = nonzero || !eq[r].is_zero();
      }
      if (nonzero) conditions.append_row(eq);
    }
  }
  if (conditions.rows() == 0) return i0;
  Matrix alphas = null_space(conditions);
  Matrix result(0, i0.ambient());
  for (std::size_t k = 0; k < alphas.rows(); ++k) {
    Vector z(i0.ambient());
    for (std::size_t r = 0; r < m; ++r) {
      const Rational& w = alphas(k, r);
      if (w.is_zero()) continue;
      auto row = i0.basis().row(r);
      for (std::size_t c = 0; c < z.size(); ++c)
        if (!row[c].is_zero()) z[c] += w * row[c];
    }
    result.append_row(z);
  }
  return Subspace::span(result);
}

}  // namespace detail

Subspace bracket_subspace(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  require_ambient(g, u);
  require_ambient(g, v);
  Matrix rows(0, g.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) rows.append_row(bracket_element(g, u.basis().row(i), v.basis().row(j)));
  return Subspace::span(rows);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  return series(g, [&](const Subspace& s) { return bracket_subspace(g, s, s); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  return series(g, [&](const Subspace& s) { return bracket_subspace(g, whole, s); });
}

std::vector<Subspace> upper_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  std::vector<Subspace> out{Subspace(g.dim())};
  while (!out.back().is_full()) {
    Subspace next = prop1_stabilizer(g, whole, whole, out.back());
    const bool repeated = next == out.back();
    out.push_back(std::move(next));
    if (repeated) break;
  }
  return out;
}

Subspace center(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  return centralizer(g, whole, whole);
}

Subspace centralizer(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  return prop1_stabilizer(g, a, b, Subspace(g.dim()));
}

Subspace center_of(const LieAlgebra& g, const Subspace& a) { return centralizer(g, a, a); }

Subspace prop1_stabilizer(const LieAlgebra& g, const Subspace& i0, const Subspace& i1, const Subspace& i2) {
  require_ambient(g, i0);
  require_ambient(g, i1);
  require_ambient(g, i2);
  if (i0.is_zero() || i1.is_zero() || i2.is_full()) return i0;
  return detail::stabilizer_from_brackets(i0, detail::basis_brackets(g, i0, i1), i2.annihilator());
}

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(unit_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix p = ads[i] * ads[j];
      Rational tr;
      for (std::size_t d = 0; d < n; ++d) tr += p(d, d);
      k(i, j) = k(j, i) = tr;
    }
  return k;
}

Subspace killing_radical(const LieAlgebra& g) {
  const Subspace derived = bracket_subspace(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
  // x with B(x, y) = 0 for all y in g': null space of (basis(g') * K).
  Matrix conditions = derived.basis() * killing_form(g);
  if (conditions.rows() == 0) return Subspace::full(g.dim());
  return Subspace::span(null_space(conditions));
}

bool is_semisimple(const LieAlgebra& g) { return g.dim() > 0 && determinant(killing_form(g)) != Rational(0); }

Restriction restrict_to(const LieAlgebra& g, const Subspace& sub) {
  require_ambient(g, sub);
  const std::size_t m = sub.dim();
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t p = 0;
    while (sub.basis()(r, p).is_zero()) ++p;
    pivots.push_back(p);
  }
  std::vector<Rational> c(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto v = bracket_element(g, sub.basis().row(i), sub.basis().row(j));
      if (!sub.contains(v)) throw ContractError("subspace is not closed under the bracket");
      for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = v[pivots[k]];
    }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < m; ++r) labels.push_back(describe_vector(sub.basis().row(r), g.labels()));
  return {LieAlgebra(std::move(labels), std::move(c)), sub.basis()};
}

}  // namespace megalie::exactalg
