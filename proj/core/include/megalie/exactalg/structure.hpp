#pragma once

#include <optional>
#include <vector>

#include "megalie/exactalg/lie_algebra.hpp"
#include "megalie/exactalg/subspace.hpp"

namespace megalie::exactalg {

/// Span of all brackets [u_i, v_j] of basis vectors.
Subspace bracket_subspace(const LieAlgebra& g, const Subspace& u, const Subspace& v);

/// g, g', g'', ... Stops at the first repeated term (which is included) or
/// at the zero subspace.
std::vector<Subspace> derived_series(const LieAlgebra& g);

/// g, [g,g], [g,[g,g]], ... with the same stopping rule as derived_series.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

/// 0, Z(g), Z_2(g), ... Stops at the first repeated term (included) or at g.
std::vector<Subspace> upper_central_series(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

/// C_a(b) = {z in a : [z, y] = 0 for all y in b}.
Subspace centralizer(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// Center of the subalgebra a, i.e. C_a(a).
Subspace center_of(const LieAlgebra& g, const Subspace& a);

/// {z in i0 : [z, y] in i2 for all y in i1}. When i0, i1, i2 are megaideals
/// the result is again a megaideal.
Subspace prop1_stabilizer(const LieAlgebra& g, const Subspace& i0, const Subspace& i1, const Subspace& i2);

/// Killing form B(x, y) = tr(ad x ad y) on basis vectors.
Matrix killing_form(const LieAlgebra& g);

/// Killing-orthogonal complement of g'. Meaningful as the radical only for
/// small algebras checked by the caller; never used by the closure engine.
Subspace killing_radical(const LieAlgebra& g);

bool is_semisimple(const LieAlgebra& g);

/// Algebra obtained by restricting the bracket to an ideal (or any
/// subalgebra), expressed in the subspace's canonical basis.
struct Restriction {
  LieAlgebra algebra;
  Matrix embedding;  // rows: canonical basis of the subspace in ambient coordinates
};
Restriction restrict_to(const LieAlgebra& g, const Subspace& subalgebra);

}  // namespace megalie::exactalg
