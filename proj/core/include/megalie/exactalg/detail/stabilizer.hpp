#pragma once

#include <vector>

#include "megalie/exactalg/lie_algebra.hpp"
#include "megalie/exactalg/subspace.hpp"

namespace megalie::exactalg::detail {

// brackets[r][y] = [u_r, v_y] for canonical basis rows u of i0 and v of i1.
std::vector<std::vector<Vector>> basis_brackets(const LieAlgebra& g, const Subspace& i0, const Subspace& i1);

// {z in i0 : a.[z, y] = 0 for every annihilator row a and every y}.
Subspace stabilizer_from_brackets(const Subspace& i0, const std::vector<std::vector<Vector>>& brackets,
                                  const Matrix& annihilator);

}  // namespace megalie::exactalg::detail
