#include "support/oracle.hpp"

#include <utility>

#include "megalie/exactalg/structure.hpp"
#include "support/random_algebra.hpp"

namespace oracle {

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  const std::size_t n = g.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += w * g.c(i, j, k);
    }
  }
  return out;
}

Span reduce(Span rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r][col];
    for (auto& v : rows[r]) v /= lead;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][col].is_zero()) continue;
      const Rational f = rows[q][col];
      for (std::size_t c = 0; c < n; ++c) rows[q][c] -= f * rows[r][c];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank(const Span& rows, std::size_t n) { return reduce(rows, n).size(); }

Span kernel(const Span& equations, std::size_t n) {
  const Span red = reduce(equations, n);
  std::vector<int> pivot_of(n, -1);
  for (std::size_t r = 0; r < red.size(); ++r) {
    std::size_t c = 0;
    while (red[r][c].is_zero()) ++c;
    pivot_of[c] = static_cast<int>(r);
  }
  Span out;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of[free] >= 0) continue;
    Vec v(n);
    v[free] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_of[c] >= 0) v[c] = -red[pivot_of[c]][free];
    out.push_back(std::move(v));
  }
  return out;
}

Span basis_of(const Subspace& s) {
  Span out;
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(s.basis().row_vector(r));
  return out;
}

Span full(std::size_t n) {
  Span out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

Span sum(const Span& a, const Span& b, std::size_t n) {
  Span all = a;
  all.insert(all.end(), b.begin(), b.end());
  return reduce(all, n);
}

namespace {

Vec combine(const Span& basis, const Vec& alpha, std::size_t n) {
  Vec z(n);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) z[c] += alpha[r] * basis[r][c];
  return z;
}

}  // namespace

Span stabilizer(const LieAlgebra& g, const Span& i0, const Span& i1, const Span& i2) {
  const std::size_t n = g.dim();
  const std::size_t m = i0.size();
  if (m == 0) return {};
  // Functionals vanishing on i2.
  const Span ann = kernel(i2, n);
  Span equations;
  for (const auto& y : i1) {
    std::vector<Vec> images;
    for (const auto& u : i0) images.push_back(bracket(g, u, y));
    for (const auto& a : ann) {
      Vec eq(m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < n; ++k) eq[r] += a[k] * images[r][k];
      equations.push_back(std::move(eq));
    }
  }
  Span out;
  for (const auto& alpha : kernel(equations, m)) out.push_back(combine(i0, alpha, n));
  return reduce(out, n);
}

Span centralizer(const LieAlgebra& g, const Span& a, const Span& b) { return stabilizer(g, a, b, {}); }

Span center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Span equations;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vec eq(n);
      for (std::size_t i = 0; i < n; ++i) eq[i] = g.c(i, j, k);
      equations.push_back(std::move(eq));
    }
  return kernel(equations, n);
}

Span bracket_span(const LieAlgebra& g, const Span& a, const Span& b) {
  Span all;
  for (const auto& x : a)
    for (const auto& y : b) all.push_back(bracket(g, x, y));
  return reduce(all, g.dim());
}

namespace {

bool equal_spans(const Span& a, const Span& b, std::size_t n) {
  return a.size() == b.size() && rank(sum(a, b, n), n) == a.size();
}

template <typename Step>
std::vector<Span> iterate(const LieAlgebra& g, Span first, Step step, bool stop_at_full) {
  const std::size_t n = g.dim();
  std::vector<Span> out{std::move(first)};
  while (stop_at_full ? out.back().size() < n : !out.back().empty()) {
    Span next = step(out.back());
    const bool repeated = equal_spans(next, out.back(), n);
    out.push_back(std::move(next));
    if (repeated) break;
  }
  return out;
}

}  // namespace

std::vector<Span> derived_series(const LieAlgebra& g) {
  return iterate(g, full(g.dim()), [&](const Span& s) { return bracket_span(g, s, s); }, false);
}

std::vector<Span> lower_central_series(const LieAlgebra& g) {
  const Span whole = full(g.dim());
  return iterate(g, whole, [&](const Span& s) { return bracket_span(g, whole, s); }, false);
}

std::vector<Span> upper_central_series(const LieAlgebra& g) {
  const Span whole = full(g.dim());
  return iterate(g, {}, [&](const Span& s) { return stabilizer(g, whole, whole, s); }, true);
}

bool same(const Span& a, const Subspace& s) {
  const std::size_t n = s.ambient();
  return rank(a, n) == s.dim() && rank(sum(a, basis_of(s), n), n) == s.dim();
}

namespace {

void compare_series(const std::string& name, const std::vector<Span>& want, const std::vector<Subspace>& got,
                    std::vector<std::string>& out) {
  if (want.size() != got.size()) {
    out.push_back(name + ": " + std::to_string(got.size()) + " terms, oracle has " + std::to_string(want.size()));
    return;
  }
  for (std::size_t k = 0; k < want.size(); ++k)
    if (!same(want[k], got[k])) out.push_back(name + " term " + std::to_string(k));
}

}  // namespace

std::vector<std::string> mismatches(const LieAlgebra& g, std::mt19937_64& rng, int pairs) {
  namespace ea = megalie::exactalg;
  std::vector<std::string> out;
  compare_series("derived", oracle::derived_series(g), ea::derived_series(g), out);
  compare_series("lower central", oracle::lower_central_series(g), ea::lower_central_series(g), out);
  compare_series("upper central", oracle::upper_central_series(g), ea::upper_central_series(g), out);
  if (!same(oracle::center(g), ea::center(g))) out.push_back("center");
  for (int p = 0; p < pairs; ++p) {
    const Subspace a = testgen::random_subspace(rng, g.dim());
    const Subspace b = testgen::random_subspace(rng, g.dim());
    const Subspace c = testgen::random_subspace(rng, g.dim());
    if (!same(centralizer(g, basis_of(a), basis_of(b)), ea::centralizer(g, a, b))) out.push_back("centralizer");
    if (!same(stabilizer(g, basis_of(a), basis_of(b), basis_of(c)), ea::prop1_stabilizer(g, a, b, c)))
      out.push_back("stabilizer");
    if (!same(bracket_span(g, basis_of(a), basis_of(b)), ea::bracket_subspace(g, a, b))) out.push_back("bracket");
  }
  return out;
}

}  // namespace oracle
