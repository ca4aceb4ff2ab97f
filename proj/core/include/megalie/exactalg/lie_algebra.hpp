#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "megalie/exactalg/matrix.hpp"
#include "megalie/exactalg/rational.hpp"

namespace megalie::exactalg {

/// One bracket entry [e_i, e_j] = sum_k coeff_k e_k, used to assemble algebras.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, Rational>> terms;
};

/// Basis triple (0-based) where the Jacobi identity fails.
struct JacobiViolation {
  std::array<std::size_t, 3> triple{};
  Vector cyclic_sum;
};

/// Basis pair where c[i][j] != -c[j][i].
struct AntisymmetryViolation {
  std::size_t i = 0;
  std::size_t j = 0;
};

/// Finite-dimensional Lie algebra over Q given by structure constants,
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
///
/// Instances built through `create` or `from_brackets` always satisfy
/// antisymmetry and the Jacobi identity; the raw tensor constructor is for
/// callers that want to run the validators themselves.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> labels, std::vector<Rational> structure);

  /// Validating factory; throws AlgebraValidationError on failure.
  static LieAlgebra create(std::vector<std::string> labels, std::vector<Rational> structure);
  /// Only i < j entries; the rest follows by antisymmetry.
  static LieAlgebra from_brackets(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  std::span<const Rational> bracket_of_basis(std::size_t i, std::size_t j) const {
    return {c_.data() + (i * dim() + j) * dim(), dim()};
  }
  const std::vector<Rational>& structure() const { return c_; }

  /// Matrix of ad(x) acting on coordinate columns: column j = [x, e_j].
  Matrix ad(std::span<const Rational> x) const;

  std::optional<AntisymmetryViolation> find_antisymmetry_violation() const;
  std::optional<JacobiViolation> find_jacobi_violation() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

class AlgebraValidationError : public std::invalid_argument {
 public:
  AlgebraValidationError(const std::string& what, std::optional<JacobiViolation> jacobi,
                         std::optional<AntisymmetryViolation> antisym)
      : std::invalid_argument(what), jacobi_(std::move(jacobi)), antisym_(antisym) {}
  const std::optional<JacobiViolation>& jacobi() const { return jacobi_; }
  const std::optional<AntisymmetryViolation>& antisymmetry() const { return antisym_; }

 private:
  std::optional<JacobiViolation> jacobi_;
  std::optional<AntisymmetryViolation> antisym_;
};

/// [x, y]^k = sum_{i,j} c[i][j][k] x^i y^j.
Vector bracket_element(const LieAlgebra& g, std::span<const Rational> x, std::span<const Rational> y);

}  // namespace megalie::exactalg
