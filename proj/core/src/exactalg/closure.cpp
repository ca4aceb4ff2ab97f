#include "megalie/exactalg/closure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <tuple>

#include "megalie/errors.hpp"
#include "megalie/exactalg/detail/stabilizer.hpp"
#include "megalie/exactalg/structure.hpp"

namespace megalie::exactalg {

namespace {

// Per-member and per-pair data reused across rounds.
class ClosureCache {
 public:
  explicit ClosureCache(const LieAlgebra& g) : g_(g) {}

  const Matrix& annihilator(std::size_t id, const Subspace& s) {
    auto it = annihilators_.find(id);
    if (it == annihilators_.end()) it = annihilators_.emplace(id, s.annihilator()).first;
    return it->second;
  }

  struct PairData {
    std::vector<std::vector<Vector>> brackets;
    Subspace span;  // [i0, i1]
  };

  const PairData& pair(std::size_t a, const Subspace& i0, std::size_t b, const Subspace& i1) {
    auto key = std::make_pair(a, b);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second;
    PairData d;
    d.brackets = detail::basis_brackets(g_, i0, i1);
    Matrix rows(0, g_.dim());
    for (const auto& row : d.brackets)
      for (const auto& v : row) rows.append_row(v);
    d.span = Subspace::span(rows);
    return pairs_.emplace(key, std::move(d)).first->second;
  }

 private:
  const LieAlgebra& g_;
  std::map<std::size_t, Matrix> annihilators_;
  std::map<std::pair<std::size_t, std::size_t>, PairData> pairs_;
};

struct Member {
  Subspace space;
  Provenance provenance;
};

}  // namespace

std::ptrdiff_t ClosureResult::find(const Subspace& s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s);
  if (it == members.end() || *it != s) return -1;
  return it - members.begin();
}

ClosureResult megaideal_closure(const LieAlgebra& g, const std::vector<Subspace>& seeds,
                                const ClosureOptions& options) {
  const std::size_t n = g.dim();
  std::vector<Member> members;  // insertion order = stable ids
  std::map<Subspace, std::size_t> index;
  ClosureResult result;

  auto name = [&](std::size_t id) { return describe(members[id].space, g.labels()); };

  std::vector<Subspace> initial = seeds;
  if (initial.empty()) initial = {Subspace(n), Subspace::full(n)};
  std::sort(initial.begin(), initial.end());
  for (const auto& s : initial) {
    if (s.ambient() != n) throw DimensionError("seed subspace ambient dimension mismatch");
    if (index.count(s)) continue;
    index.emplace(s, members.size());
    members.push_back({s, {"seed", "seed", 0}});
  }

  ClosureCache cache(g);
  // Stabilizer results depend on i2 only through i2 ∩ [i0, i1].
  std::map<std::tuple<std::size_t, std::size_t, Subspace>, bool> stabilizer_done;

  std::size_t frontier_begin = 0;
  std::size_t round = 0;
  bool budget_hit = false;
  while (round < options.max_depth) {
    const std::size_t count = members.size();
    if (frontier_begin == count) break;
    ++round;
    std::map<Subspace, Provenance> found;
    auto offer = [&](Subspace s, const char* rule, std::string description) {
      if (index.count(s) || found.count(s)) return;
      found.emplace(std::move(s), Provenance{rule, std::move(description), round});
    };
    auto is_new = [&](std::size_t id) { return id >= frontier_begin; };

    for (std::size_t a = 0; a < count; ++a) {
      const Subspace& sa = members[a].space;
      if (is_new(a)) {
        offer(bracket_subspace(g, sa, sa), "derived", "derived(" + name(a) + ")");
        offer(center_of(g, sa), "center", "center(" + name(a) + ")");
      }
      for (std::size_t b = 0; b < count; ++b) {
        if (!is_new(a) && !is_new(b)) continue;
        const Subspace& sb = members[b].space;
        if (a < b) {
          offer(subspace_sum(sa, sb), "sum", "sum(" + name(a) + ", " + name(b) + ")");
          offer(subspace_intersect(sa, sb), "intersection", "intersection(" + name(a) + ", " + name(b) + ")");
          offer(bracket_subspace(g, sa, sb), "bracket", "bracket(" + name(a) + ", " + name(b) + ")");
        }
        if (a != b) offer(centralizer(g, sa, sb), "centralizer", "centralizer(" + name(a) + ", " + name(b) + ")");
      }
    }

    for (std::size_t a = 0; a < count; ++a) {
      const Subspace& i0 = members[a].space;
      if (i0.is_zero()) continue;
      for (std::size_t b = 0; b < count; ++b) {
        const Subspace& i1 = members[b].space;
        if (i1.is_zero()) continue;
        const auto& pd = cache.pair(a, i0, b, i1);
        if (pd.span.is_zero()) continue;
        for (std::size_t c = 0; c < count; ++c) {
          if (!is_new(a) && !is_new(b) && !is_new(c)) continue;
          const Subspace& i2 = members[c].space;
          if (i2.includes(pd.span)) continue;  // result is i0 itself
          Subspace effective = subspace_intersect(i2, pd.span);
          auto key = std::make_tuple(a, b, effective);
          if (!stabilizer_done.emplace(std::move(key), true).second) continue;
          offer(detail::stabilizer_from_brackets(i0, pd.brackets, cache.annihilator(c, i2)), "stabilizer",
                "stabilizer(" + name(a) + ", " + name(b) + ", " + name(c) + ")");
        }
      }
    }

    frontier_begin = count;
    for (auto& [s, prov] : found) {
      if (members.size() >= options.max_count) {
        budget_hit = true;
        break;
      }
      index.emplace(s, members.size());
      members.push_back({s, std::move(prov)});
    }
    if (budget_hit) break;
  }
  // A search that used every round and still grew in the last one has not
  // been shown to be a fixpoint.
  const bool grew_last_round = frontier_begin < members.size();
  result.complete = !budget_hit && !grew_last_round;
  result.rounds = round;

  std::sort(members.begin(), members.end(), [](const Member& x, const Member& y) { return x.space < y.space; });
  for (auto& m : members) {
    result.members.push_back(std::move(m.space));
    result.provenance.push_back(std::move(m.provenance));
  }
  return result;
}

TowerInfo tower_info(const LieAlgebra& g) {
  static const std::regex z_label("Z([0-9]+)");
  std::map<std::size_t, std::size_t> by_degree;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::smatch m;
    if (std::regex_match(g.labels()[i], m, z_label)) by_degree[std::stoul(m[1].str())] = i;
  }
  if (by_degree.empty()) throw SchemaError("algebra has no Z-tower labels");
  TowerInfo info;
  std::size_t expected = 0;
  for (auto [deg, idx] : by_degree) {
    if (deg != expected++) throw SchemaError("Z-tower degrees are not consecutive from 0");
    info.z_index.push_back(idx);
  }
  return info;
}

Subspace lift_subspace(const LieAlgebra& small, const LieAlgebra& large, const Subspace& s) {
  if (s.ambient() != small.dim()) throw DimensionError("subspace does not belong to the smaller algebra");
  const TowerInfo ts = tower_info(small);
  const TowerInfo tl = tower_info(large);
  if (tl.top() != ts.top() + 1) throw SchemaError("larger algebra must extend the Z-tower by exactly one degree");
  std::vector<std::size_t> to_large(small.dim());
  for (std::size_t i = 0; i < small.dim(); ++i) {
    auto j = large.index_of(small.labels()[i]);
    if (!j) throw SchemaError("label '" + small.labels()[i] + "' missing from larger algebra");
    to_large[i] = *j;
  }
  Matrix rows(0, large.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vector v(large.dim());
    for (std::size_t k = 0; k < small.dim(); ++k) v[to_large[k]] = s.basis()(r, k);
    rows.append_row(v);
  }
  if (s.contains(unit_vector(small.dim(), ts.z_index.back()))) rows.append_row(unit_vector(large.dim(), tl.z_index.back()));
  return Subspace::span(rows);
}

std::vector<StabilityEntry> stability_filter(const LieAlgebra& small, const ClosureResult& small_closure,
                                             const LieAlgebra& large, const ClosureResult& large_closure) {
  std::vector<StabilityEntry> out;
  for (std::size_t i = 0; i < small_closure.members.size(); ++i) {
    const Subspace& s = small_closure.members[i];
    const bool stable = large_closure.contains(lift_subspace(small, large, s));
    out.push_back({s, small_closure.provenance[i], stable});
  }
  return out;
}

std::vector<Subspace> stabilizer_series(const LieAlgebra& g, const Subspace& i0, const Subspace& i1,
                                        const Subspace& start) {
  std::vector<Subspace> out{start};
  for (;;) {
    Subspace next = prop1_stabilizer(g, i0, i1, out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

std::vector<bool> series_stability(const LieAlgebra& small, const std::vector<Subspace>& small_terms,
                                   const LieAlgebra& large, const std::vector<Subspace>& large_terms) {
  std::vector<std::size_t> shared;
  for (const auto& label : small.labels()) {
    auto j = large.index_of(label);
    if (!j) throw SchemaError("label '" + label + "' missing from larger algebra");
    shared.push_back(*j);
  }
  const Subspace old_coords = Subspace::coordinate(large.dim(), shared);
  std::vector<bool> out;
  for (std::size_t k = 0; k < small_terms.size(); ++k) {
    if (k >= large_terms.size()) {
      out.push_back(false);
      continue;
    }
    Matrix rows(0, large.dim());
    for (std::size_t r = 0; r < small_terms[k].dim(); ++r) {
      Vector v(large.dim());
      for (std::size_t c = 0; c < small.dim(); ++c) v[shared[c]] = small_terms[k].basis()(r, c);
      rows.append_row(v);
    }
    out.push_back(Subspace::span(rows) == subspace_intersect(large_terms[k], old_coords));
  }
  return out;
}

}  // namespace megalie::exactalg
