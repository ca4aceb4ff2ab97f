#pragma once

#include <optional>
#include <string>
#include <variant>

#include "megalie/exactalg/lie_algebra.hpp"
#include "megalie/exactalg/matrix.hpp"
#include "megalie/exactalg/subspace.hpp"

namespace megalie::exactalg {

/// Square matrix acting on coordinate columns: image of e_j is column j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m);
  static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }

  std::size_t dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  Vector apply(std::span<const Rational> x) const { return matrix_.apply(x); }
  Vector image_of_basis(std::size_t j) const { return matrix_.column(j); }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.matrix_ * b.matrix_); }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix matrix_;
};

enum class AutomorphismVerdict { kAutomorphism, kSingular, kBracketMismatch };

struct AutomorphismCheck {
  AutomorphismVerdict verdict = AutomorphismVerdict::kAutomorphism;
  /// Basis pair (i, j) with m[e_i, e_j] != [m e_i, m e_j].
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool ok() const { return verdict == AutomorphismVerdict::kAutomorphism; }
};

AutomorphismCheck is_automorphism(const LieAlgebra& g, const LinearMap& m);
/// m[e_i, e_j]_from = [m e_i, m e_j]_to for all basis pairs, m invertible.
AutomorphismCheck is_isomorphism(const LieAlgebra& from, const LieAlgebra& to, const LinearMap& m);

bool preserves_subspace(const LinearMap& m, const Subspace& s);

/// Coefficients read off the push-forward matrix of a candidate symmetry of
/// the gauge/time/rotation algebra:
///   image(Z0) = c Z0,  image(Z1) = d1 Z1 + d0 Z0,
///   image(P) = a1 P + (Z-tower part),  image(J_i) = sum_j b_ij J_j.
struct ConstraintCoefficients {
  Rational c;
  Rational d0;
  Rational d1;
  Rational a1;
  Matrix b;  // 3x3, row i = image of J_{i+1} in J-coordinates
};

enum class ConstraintCondition {
  kGaugeUnit,        // Z0 maps to a nonzero multiple of itself
  kGaugeLinear,      // Z1 maps into <Z0, Z1> with d1 != 0
  kTimeTranslation,  // P maps to a1 P plus gauge terms, a1 != 0
  kRotationBlock,    // J-triple maps onto itself by a special orthogonal matrix
  kBracketRelation,  // a1 d1 = c, forced by [P, Z1] = Z0
};

std::string to_string(ConstraintCondition c);

struct ConstraintViolation {
  ConstraintCondition condition;
  std::string detail;
};

using ConstraintExtraction = std::variant<ConstraintCoefficients, ConstraintViolation>;

/// Requires labels D, P, J1, J2, J3, Z0, Z1 (further Zn optional); throws
/// SchemaError otherwise.
ConstraintExtraction extract_constraint_coefficients(const LieAlgebra& g, const LinearMap& m);

}  // namespace megalie::exactalg
