#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "megalie/exactalg/lie_algebra.hpp"
#include "megalie/exactalg/subspace.hpp"

namespace megalie::exactalg {

struct ClosureOptions {
  std::size_t max_depth = 6;
  std::size_t max_count = 64;
};

/// How a closure member was first obtained. Operand indices refer to the
/// member list of the round in which the construction happened, rendered
/// into `description` as text for reports.
struct Provenance {
  std::string rule;         // "seed", "sum", "intersection", "bracket", "derived", "center", "centralizer", "stabilizer"
  std::string description;  // e.g. "centralizer(<...>, <...>)"
  std::size_t round = 0;
};

struct ClosureResult {
  std::vector<Subspace> members;        // sorted: dimension, then lexicographic basis
  std::vector<Provenance> provenance;   // parallel to members
  bool complete = true;                 // false when a budget stopped the search
  std::size_t rounds = 0;

  std::ptrdiff_t find(const Subspace& s) const;
  bool contains(const Subspace& s) const { return find(s) >= 0; }
};

/// Fixpoint of the megaideal constructors (sum, intersection, bracket, derived
/// algebra, center of a member, centralizer, stabilizer) starting from the
/// seeds. Seeds default to {0} and g when empty.
ClosureResult megaideal_closure(const LieAlgebra& g, const std::vector<Subspace>& seeds = {},
                                const ClosureOptions& options = {});

/// Tower bookkeeping for algebras whose basis carries a truncated gauge
/// family labelled Z0, Z1, ..., ZN.
struct TowerInfo {
  std::vector<std::size_t> z_index;  // z_index[n] = basis index of Zn
  std::size_t top() const { return z_index.size() - 1; }
};
/// Throws SchemaError when no Z-tower is present or its degrees are not 0..N.
TowerInfo tower_info(const LieAlgebra& g);

/// Carries a subspace of the truncation B_N into B_{N+1} by label. If the
/// top generator Z_N lies in `s`, the lifted subspace also gains Z_{N+1}, so a
/// "whole tower" pattern stays a whole tower.
Subspace lift_subspace(const LieAlgebra& small, const LieAlgebra& large, const Subspace& s);

struct StabilityEntry {
  Subspace subspace;
  Provenance provenance;
  bool stable = false;
};

/// Marks every member of the small closure as stable when its lift is a
/// member of the large closure; the rest are truncation-sensitive.
std::vector<StabilityEntry> stability_filter(const LieAlgebra& small, const ClosureResult& small_closure,
                                             const LieAlgebra& large, const ClosureResult& large_closure);

/// Iterates i2 <- prop1_stabilizer(g, i0, i1, i2) from `start` until a term
/// repeats; the repeated term is not listed twice.
std::vector<Subspace> stabilizer_series(const LieAlgebra& g, const Subspace& i0, const Subspace& i1,
                                        const Subspace& start);

/// Term-by-term comparison of a series computed in B_N with the same series
/// computed in B_{N+1}: entry k is true when large[k], cut down to the
/// basis elements of B_N, equals small[k]. Missing large terms count as
/// unstable.
std::vector<bool> series_stability(const LieAlgebra& small, const std::vector<Subspace>& small_terms,
                                   const LieAlgebra& large, const std::vector<Subspace>& large_terms);

}  // namespace megalie::exactalg
