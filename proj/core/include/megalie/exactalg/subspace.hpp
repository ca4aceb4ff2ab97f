#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "megalie/exactalg/matrix.hpp"

namespace megalie::exactalg {

/// Linear subspace of Q^ambient stored as an RREF basis without zero rows.
///
/// The basis is canonical, so equality is structural: two Subspaces compare
/// equal exactly when they are the same set of vectors.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of the given ambient dimension.
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `spanning`.
  static Subspace span(const Matrix& spanning);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Span of the selected unit vectors.
  static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> indices);
  static Subspace coordinate(std::size_t ambient, std::initializer_list<std::size_t> indices);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_full() const { return basis_.rows() == ambient_; }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const Rational> v) const;
  bool includes(const Subspace& other) const;

  /// Rows spanning the annihilator {a : a . v = 0 for all v in this}.
  Matrix annihilator() const;

  /// Indices i with e_i in the subspace (a subspace spanned by unit vectors
  /// is fully described by these).
  std::vector<std::size_t> coordinate_members() const;
  bool is_coordinate() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;
  /// Dimension first, then lexicographic on basis entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Text such as "<D, P, Z0>" for coordinate subspaces, otherwise the spanning
/// rows written as label combinations.
std::string describe(const Subspace& s, const std::vector<std::string>& labels);
std::string describe_vector(std::span<const Rational> v, const std::vector<std::string>& labels);

}  // namespace megalie::exactalg
