#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "megalie/exactalg/io.hpp"
#include "megalie/exactalg/lie_algebra.hpp"
#include "megalie/exactalg/subspace.hpp"
#include "megalie/sbve/generators.hpp"

namespace th {

using megalie::exactalg::LieAlgebra;
using megalie::exactalg::Rational;
using megalie::exactalg::Subspace;
using megalie::exactalg::Vector;

inline std::string data(const std::string& name) { return std::string(MEGALIE_DATA_DIR) + "/" + name; }

inline LieAlgebra load(const std::string& name) { return megalie::exactalg::load_algebra(data(name)); }

inline const LieAlgebra& b(std::size_t n) {
  static const LieAlgebra b4 = megalie::sbve::build_truncated_algebra(megalie::sbve::generators(0, 4));
  static const LieAlgebra b5 = megalie::sbve::build_truncated_algebra(megalie::sbve::generators(0, 5));
  return n == 4 ? b4 : b5;
}

/// Coordinate subspace from labels; "Z*" expands to the whole tower.
inline Subspace span(const LieAlgebra& g, std::initializer_list<std::string> labels) {
  std::vector<std::size_t> ids;
  for (const auto& l : labels) {
    if (l == "Z*") {
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.labels()[i][0] == 'Z') ids.push_back(i);
    } else {
      ids.push_back(*g.index_of(l));
    }
  }
  return Subspace::coordinate(g.dim(), ids);
}

inline Vector e(const LieAlgebra& g, const std::string& label) {
  Vector v(g.dim());
  v[*g.index_of(label)] = 1;
  return v;
}

}  // namespace th
