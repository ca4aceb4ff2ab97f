#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "megalie/symvec/expr.hpp"

namespace megalie::symvec {

enum class Certainty { Symbolic, Numeric };
std::string to_string(Certainty c);

struct ZeroTestOptions {
  std::uint64_t seed = 42;
  int samples = 20;
  double tolerance = 1e-9;
  double mu_bound = 0.95;
};

struct SamplePoint {
  Point point{};
  ParamValues params;
};

struct ZeroTest {
  bool zero = true;
  Certainty certainty = Certainty::Symbolic;
  /// Set when `zero` is false: where the expression was seen to be nonzero.
  std::optional<SamplePoint> witness;
  double value = 0.0;

  explicit operator bool() const { return zero; }
  /// "zero/symbolic", "zero/numeric" or "nonzero".
  std::string verdict() const;
};

/// Deterministic sample set: t, psi in [-2, 2], lambda in [0, 2pi),
/// |mu| <= mu_bound, every parameter in [1/2, 2].
std::vector<SamplePoint> sample_points(const std::set<std::string>& params, const ZeroTestOptions& opts = {});

ZeroTest is_zero(const Expr& e, const ZeroTestOptions& opts = {});

std::string describe(const SamplePoint& p);

}  // namespace megalie::symvec
