#pragma once

#include <cstddef>
#include <cstdint>

#include "megalie/exactalg/rational.hpp"
#include "report.hpp"

namespace megalie::cli {

struct VerifyConfig {
  exactalg::Rational omega = 0;
  std::size_t n_max = 4;
  std::uint64_t seed = 42;
};

/// Full pipeline: algebra, series, megaideals, push-forward matrices and
/// constraints, rotation constraints, residuals, conjugation, factor group.
void sbve_verify(const VerifyConfig& config, Report& r);

}  // namespace megalie::cli
