#pragma once

#include <array>
#include <string>
#include <vector>

#include "megalie/sbve/generators.hpp"
#include "megalie/symvec/transformation.hpp"
#include "megalie/symvec/zero_test.hpp"

namespace megalie::sbve {

struct EquationCheck {
  std::string equation;  // e.g. "J2 Lambda = M/sqrt(1-M^2) sin Lambda"
  symvec::ZeroTest test;
};

struct RotationConstraintReport {
  std::array<EquationCheck, 6> equations;
  bool ok() const;
  /// First failing equation, if any.
  const EquationCheck* first_failure() const;
};

/// Applies J1, J2, J3 (Omega = 0) to Lambda and M and checks the six
/// equations. sqrt(1 - M^2) is symbolic when M = +-mu and sampled otherwise;
/// sampling a point with 1 - M^2 < 0 throws std::domain_error.
RotationConstraintReport verify_rotation_constraints(const Expr& lambda_img, const Expr& mu_img,
                                                     const symvec::ZeroTestOptions& opts = {});

struct ExactSolution {
  std::string name;
  Expr psi;
  Rational omega;
};

/// Steady spherical harmonics of degree 1 to 3 and a travelling wave, all for
/// Omega = 0.
std::vector<ExactSolution> exact_solutions();
/// mu + mu s cos(lambda + 2t/3): time dependent, used for the controls.
ExactSolution standard_test_solution();
/// Rossby-Haurwitz waves Y(mu) cos(m (lambda - c t)), c = -2 Omega / (n(n+1)).
std::vector<ExactSolution> rossby_haurwitz(const Rational& omega);

/// psi~(new) = Psi(old, psi(old)) with old = tr.inverse(new). Throws
/// UnsupportedError when Psi is not affine in psi or the inverse's t, lambda,
/// mu components depend on psi.
Expr transform_solution(const Expr& psi, const symvec::PointTransformation& tr);

/// t~ = 2t with psi unchanged: violates c = eps/a1.
symvec::PointTransformation time_doubling();
/// mu~ = -mu with psi unchanged: the wrong sign of the gauge factor.
symvec::PointTransformation bare_reflection();

}  // namespace megalie::sbve
