#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "megalie/exactalg/lie_algebra.hpp"
#include "megalie/symvec/expr.hpp"
#include "megalie/symvec/vector_field.hpp"

namespace megalie::sbve {

using exactalg::Rational;
using symvec::Expr;
using symvec::LabeledField;
using symvec::VectorField;

/// Name of the angular velocity when it is kept symbolic.
inline constexpr const char* kOmega = "Omega";

/// D, P, J1, J2, J3, Z0..ZN in that order, with Z_n = t^n d/dpsi.
struct GeneratorSet {
  Expr omega;
  std::size_t n_max = 0;
  std::vector<LabeledField> members;

  std::vector<std::string> labels() const;
  const VectorField& at(const std::string& label) const;
};

/// Throws ContractError when n_max < 2.
GeneratorSet generators(const Rational& omega, std::size_t n_max);
/// Same fields with Omega kept as a parameter.
GeneratorSet symbolic_generators(std::size_t n_max);

/// Structure constants in the generator basis. Throws ContractError naming
/// the pair when a commutator is not a rational combination of the members.
exactalg::LieAlgebra build_truncated_algebra(const GeneratorSet& gs);

}  // namespace megalie::sbve
