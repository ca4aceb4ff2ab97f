#include "megalie/exactalg/subspace.hpp"

#include <sstream>

#include "megalie/errors.hpp"

namespace megalie::exactalg {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) {
    throw DimensionError("subspaces live in ambient dimensions " + std::to_string(u.ambient()) + " and " +
                         std::to_string(v.ambient()));
  }
}

}  // namespace

Subspace Subspace::span(const Matrix& spanning) {
  Subspace s(spanning.cols());
  s.basis_ = echelon(spanning).basis;
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  return span(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> indices) {
  Matrix m(0, ambient);
  for (auto i : indices) {
    if (i >= ambient) throw DimensionError("coordinate index out of range");
    m.append_row(unit_vector(ambient, i));
  }
  return span(m);
}

Subspace Subspace::coordinate(std::size_t ambient, std::initializer_list<std::size_t> indices) {
  std::vector<std::size_t> v(indices);
  return coordinate(ambient, std::span<const std::size_t>(v));
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  // Reduce against the RREF basis using its pivot structure.
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto row = basis_.row(i);
    std::size_t pivot = 0;
    while (row[pivot].is_zero()) ++pivot;
    if (r[pivot].is_zero()) continue;
    const Rational f = r[pivot];
    for (std::size_t k = pivot; k < ambient_; ++k)
      if (!row[k].is_zero()) r[k] -= f * row[k];
  }
  return is_zero_vector(r);
}

bool Subspace::includes(const Subspace& other) const {
  require_same_ambient(*this, other);
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Matrix Subspace::annihilator() const {
  if (basis_.rows() == 0) return Matrix::identity(ambient_);
  return null_space(basis_);
}

std::vector<std::size_t> Subspace::coordinate_members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i) {
    Vector e(ambient_);
    e[i] = 1;
    if (contains(e)) out.push_back(i);
  }
  return out;
}

bool Subspace::is_coordinate() const { return coordinate_members().size() == dim(); }

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  for (std::size_t r = 0; r < a.basis_.rows(); ++r)
    for (std::size_t k = 0; k < a.ambient_; ++k)
      if (auto c = a.basis_(r, k) <=> b.basis_(r, k); c != 0) return c;
  return std::strong_ordering::equal;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  Matrix stacked = u.basis();
  for (std::size_t i = 0; i < v.basis().rows(); ++i) stacked.append_row(v.basis().row(i));
  return Subspace::span(stacked);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  // Zassenhaus: rows [u | u] and [v | 0]; after RREF the rows whose left half
  // vanishes carry a basis of the intersection in the right half.
  const std::size_t n = u.ambient();
  Matrix z(0, 2 * n);
  Vector row(2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t k = 0; k < n; ++k) row[k] = row[n + k] = u.basis()(i, k);
    z.append_row(row);
  }
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = v.basis()(i, k);
      row[n + k] = 0;
    }
    z.append_row(row);
  }
  auto red = echelon(z).basis;
  Matrix inter(0, n);
  for (std::size_t i = 0; i < red.rows(); ++i) {
    auto r = red.row(i);
    if (!is_zero_vector(r.subspan(0, n))) continue;
    inter.append_row(r.subspan(n, n));
  }
  return Subspace::span(inter);
}

std::string describe_vector(std::span<const Rational> v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const std::string& name = k < labels.size() ? labels[k] : "e" + std::to_string(k + 1);
    Rational a = abs(v[k]);
    if (first) {
      if (v[k].sign() < 0) os << '-';
    } else {
      os << (v[k].sign() < 0 ? " - " : " + ");
    }
    if (a != Rational(1)) os << a << '*';
    os << name;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string describe(const Subspace& s, const std::vector<std::string>& labels) {
  if (s.is_zero()) return "{0}";
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < s.dim(); ++i) os << (i ? ", " : "") << describe_vector(s.basis().row(i), labels);
  os << '>';
  return os.str();
}

}  // namespace megalie::exactalg
