#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "megalie/symvec/expr.hpp"
#include "megalie/symvec/vector_field.hpp"
#include "megalie/symvec/zero_test.hpp"

namespace megalie::symvec {

/// (t, lambda, mu, psi) -> (T, Lambda, M, Psi). `forward` gives the new
/// coordinates in terms of the old ones, `inverse` the old coordinates in
/// terms of the new ones; both use the same variable symbols.
struct PointTransformation {
  std::string name;
  std::array<Expr, 4> forward{Expr::t(), Expr::lambda(), Expr::mu(), Expr::psi()};
  std::array<Expr, 4> inverse{Expr::t(), Expr::lambda(), Expr::mu(), Expr::psi()};
  /// Symbolic parameters; a value means the parameter has been fixed.
  std::map<std::string, std::optional<Rational>> params;

  static PointTransformation identity() {
    PointTransformation tr;
    tr.name = "id";
    return tr;
  }

  PointTransformation instantiate(const std::map<std::string, Rational>& values) const;
  PointTransformation inverted() const;
};

/// outer after inner.
PointTransformation compose(const PointTransformation& outer, const PointTransformation& inner);

struct InverseCheck {
  bool ok = true;
  Certainty certainty = Certainty::Symbolic;
  std::string witness;

  explicit operator bool() const { return ok; }
};

/// forward(inverse(x)) - x for each coordinate.
InverseCheck verify_inverse(const PointTransformation& tr, const ZeroTestOptions& opts = {});

/// Throws ContractError if the transformation fails verify_inverse.
VectorField pushforward(const VectorField& x, const PointTransformation& tr, const ZeroTestOptions& opts = {});

}  // namespace megalie::symvec
