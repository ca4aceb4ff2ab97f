#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "megalie/exactalg/rational.hpp"

namespace megalie::exactalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Stacks the given rows; every row must have `cols` entries.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  Vector column(std::size_t c) const;

  void append_row(std::span<const Rational> values);

  Matrix transpose() const;
  Vector apply(std::span<const Rational> x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape is
/// unchanged; use `pivot_columns` or `drop_zero_rows` as needed.
Matrix rref(const Matrix& m);

/// Reduced row echelon form with zero rows removed, plus the pivot columns.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;
};
Echelon echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows spanning {x : m x = 0}, in canonical (RREF) form.
Matrix null_space(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Unit coordinate vector e_i of length dim.
Vector unit_vector(std::size_t dim, std::size_t i);

bool is_zero_vector(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace megalie::exactalg
