#pragma once

#include <array>
#include <string>
#include <vector>

#include "megalie/exactalg/rational.hpp"
#include "megalie/symvec/expr.hpp"
#include "megalie/symvec/zero_test.hpp"

namespace megalie::symvec {

/// xi_t d/dt + xi_lambda d/dlambda + xi_mu d/dmu + xi_psi d/dpsi
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::array<Expr, 4> components) : c_(std::move(components)) {}
  /// The coordinate field d/dv.
  static VectorField partial(Var v);

  const Expr& operator[](Var v) const { return c_[index(v)]; }
  Expr& operator[](Var v) { return c_[index(v)]; }
  const std::array<Expr, 4>& components() const { return c_; }

  /// The field acting as a derivation on a function.
  Expr apply(const Expr& f) const;
  bool is_zero() const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }
  friend VectorField operator*(const Expr& k, const VectorField& x);
  friend bool operator==(const VectorField&, const VectorField&) = default;

  VectorField substitute_params(const std::map<std::string, Rational>& values) const;
  std::string to_string() const;

 private:
  std::array<Expr, 4> c_;
};

VectorField commutator(const VectorField& x, const VectorField& y);

struct LabeledField {
  std::string label;
  VectorField field;
};

enum class DecompositionStatus { kOk, kOutsideSpan, kAmbiguous };

struct Decomposition {
  DecompositionStatus status = DecompositionStatus::kOk;
  std::vector<Rational> coefficients;
  /// Residual x - sum k_i basis_i when x is outside the span, or the
  /// dependent basis member when the basis is not independent.
  std::string witness;

  bool ok() const { return status == DecompositionStatus::kOk; }
};

/// Solves x = sum k_i basis_i with rational k_i by matching canonical
/// monomials component by component.
Decomposition decompose_in_basis(const VectorField& x, const std::vector<LabeledField>& basis);

}  // namespace megalie::symvec
