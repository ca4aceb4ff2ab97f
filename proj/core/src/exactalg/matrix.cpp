#include "megalie/exactalg/matrix.hpp"

#include <sstream>
#include <utility>

#include "megalie/errors.hpp"

namespace megalie::exactalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw DimensionError("row of length " + std::to_string(values.size()) + " appended to matrix with " +
                         std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!x[c].is_zero() && !(*this)(r, c).is_zero()) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(lead_row, k).is_zero()) m(r, k) -= f * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

Matrix rref(const Matrix& m) {
  Matrix r = m;
  reduce(r);
  return r;
}

Echelon echelon(const Matrix& m) {
  Matrix r = m;
  auto pivots = reduce(r);
  Matrix basis(0, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.append_row(r.row(i));
  return {std::move(basis), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return reduce(r).size();
}

Matrix null_space(const Matrix& m) {
  auto [red, pivots] = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix kernel(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    kernel.append_row(v);
  }
  return echelon(kernel).basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

bool is_zero_vector(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

}  // namespace megalie::exactalg
