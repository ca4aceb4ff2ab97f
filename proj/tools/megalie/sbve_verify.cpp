#include "sbve_verify.hpp"

#include <functional>
#include <map>
#include <string>
#include <variant>

#include "megalie/exactalg/closure.hpp"
#include "megalie/exactalg/structure.hpp"
#include "megalie/sbve/generators.hpp"
#include "megalie/sbve/symmetries.hpp"
#include "megalie/sbve/verification.hpp"
#include "megalie/sbve/vorticity.hpp"

namespace megalie::cli {

namespace {

using exactalg::LieAlgebra;
using exactalg::LinearMap;
using exactalg::Rational;
using exactalg::Subspace;
using exactalg::Vector;
using symvec::Expr;
using symvec::PointTransformation;

constexpr double kAnalyticTol = 1e-10;
constexpr double kFdTol = 1e-8;
constexpr double kControlFloor = 1e-2;

struct Context {
  const VerifyConfig& config;
  symvec::ZeroTestOptions zero;
  sbve::GeneratorSet gs;
  sbve::GeneratorSet gs_large;
  LieAlgebra g;
  LieAlgebra g_large;
  std::vector<exactalg::StabilityEntry> stable_members;
};

std::size_t idx(const LieAlgebra& g, const std::string& label) { return *g.index_of(label); }

Subspace span_of(const LieAlgebra& g, std::initializer_list<std::string> labels, std::size_t z_upto = 0,
                 bool with_z = false) {
  std::vector<std::size_t> ids;
  for (const auto& l : labels) ids.push_back(idx(g, l));
  if (with_z)
    for (std::size_t n = 0; n <= z_upto; ++n) ids.push_back(idx(g, "Z" + std::to_string(n)));
  return Subspace::coordinate(g.dim(), ids);
}

// Brackets of the realization written out from the structure formulas.
Vector expected_bracket(const LieAlgebra& g, std::size_t i, std::size_t j) {
  const auto& labels = g.labels();
  Vector v(g.dim());
  auto z_degree = [&](std::size_t k) -> int {
    return labels[k][0] == 'Z' ? std::stoi(labels[k].substr(1)) : -1;
  };
  const std::string& a = labels[i];
  const std::string& b = labels[j];
  const int zb = z_degree(j);
  if (a == "D" && b == "P") v[idx(g, "P")] = -1;
  if (a == "D" && zb >= 0) v[j] = zb + 1;
  if (a == "P" && zb > 0) v[idx(g, "Z" + std::to_string(zb - 1))] = zb;
  if (a == "J1" && b == "J2") v[idx(g, "J3")] = 1;
  if (a == "J1" && b == "J3") v[idx(g, "J2")] = -1;
  if (a == "J2" && b == "J3") v[idx(g, "J1")] = 1;
  return v;
}

void algebra_section(Report& r, Context& ctx) {
  r.section("algebra");
  const LieAlgebra& g = ctx.g;
  r.text("B" + std::to_string(ctx.config.n_max) + " at Omega = 0, dim " + std::to_string(g.dim()) + ", basis " +
         exactalg::describe(Subspace::full(g.dim()), g.labels()));
  r.check(!g.find_jacobi_violation().has_value(), "Jacobi identity", "exact");
  bool table_ok = true;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto row = g.bracket_of_basis(i, j);
      const Vector got(row.begin(), row.end());
      if (got != expected_bracket(g, i, j)) table_ok = false;
      if (!exactalg::is_zero_vector(got))
        r.text("[" + g.labels()[i] + ", " + g.labels()[j] + "] = " + exactalg::describe_vector(got, g.labels()));
    }
  }
  r.check(table_ok, "[D,P]=-P, [D,Zn]=(n+1)Zn, [P,Zn]=nZ(n-1), so(3), other brackets zero", "exact");
}

void print_series(Report& r, const Context& ctx, const std::string& name, const std::vector<Subspace>& small,
                  const std::vector<Subspace>& large) {
  const auto flags = exactalg::series_stability(ctx.g, small, ctx.g_large, large);
  std::string dims;
  for (const auto& s : small) dims += (dims.empty() ? "" : ", ") + std::to_string(s.dim());
  r.text(name + ": " + dims);
  for (std::size_t k = 0; k < small.size(); ++k) {
    r.text("  [" + std::to_string(k) + "] dim " + std::to_string(small[k].dim()) + (flags[k] ? "  stable    " : "  truncated ") +
           exactalg::describe(small[k], ctx.g.labels()));
  }
}

void series_section(Report& r, Context& ctx) {
  r.section("series");
  const auto& g = ctx.g;
  const auto& gl = ctx.g_large;
  const std::size_t n = ctx.config.n_max;
  const auto derived = exactalg::derived_series(g);
  print_series(r, ctx, "derived", derived, exactalg::derived_series(gl));
  print_series(r, ctx, "lower central", exactalg::lower_central_series(g), exactalg::lower_central_series(gl));
  print_series(r, ctx, "upper central", exactalg::upper_central_series(g), exactalg::upper_central_series(gl));
  std::vector<std::size_t> dims;
  for (const auto& s : derived) dims.push_back(s.dim());
  r.check(dims == std::vector<std::size_t>{n + 6, n + 5, n + 3, 3, 3}, "derived series dimensions", "exact");

  // Stabilizer iteration with i0 = i1 = <P, Z>, starting from <Z0>.
  const Subspace pz = span_of(g, {"P"}, n, true);
  const Subspace pz_large = span_of(gl, {"P"}, n + 1, true);
  auto steps = exactalg::stabilizer_series(g, pz, pz, span_of(g, {}, 0, true));
  auto steps_large = exactalg::stabilizer_series(gl, pz_large, pz_large, span_of(gl, {}, 0, true));
  steps.erase(steps.begin());
  steps_large.erase(steps_large.begin());
  const auto flags = exactalg::series_stability(g, steps, gl, steps_large);
  r.text("stabilizer iteration, i0 = i1 = " + exactalg::describe(pz, g.labels()) + ", i2 = <Z0>:");
  bool ok = steps.size() >= n;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    r.text("  k=" + std::to_string(k) + " dim " + std::to_string(steps[k].dim()) +
           (flags[k] ? "  stable    " : "  truncated ") + exactalg::describe(steps[k], g.labels()));
    if (k + 2 <= n) ok = ok && flags[k] && steps[k] == span_of(g, {}, k + 1, true);
    if (k + 1 == n) ok = ok && !flags[k] && steps[k].contains(exactalg::unit_vector(g.dim(), idx(g, "P")));
  }
  r.check(ok, "steps k <= N-2 give <Z0..Z(k+1)>, step N-1 absorbs P and is flagged", "exact");
}

void megaideal_section(Report& r, Context& ctx) {
  r.section("megaideals");
  const auto small = exactalg::megaideal_closure(ctx.g);
  const auto large = exactalg::megaideal_closure(ctx.g_large);
  r.check(small.complete && large.complete, "closure reached a fixpoint within budget", "exact");
  const auto entries = exactalg::stability_filter(ctx.g, small, ctx.g_large, large);
  for (const auto& e : entries) {
    r.text("dim " + std::to_string(e.subspace.dim()) + (e.stable ? "  stable    " : "  truncated ") +
           exactalg::describe(e.subspace, ctx.g.labels()) + "  <- " + e.provenance.description);
    if (e.stable) ctx.stable_members.push_back(e);
  }
  const std::size_t n = ctx.config.n_max;
  const LieAlgebra& g = ctx.g;
  const std::vector<std::pair<std::string, Subspace>> expected{
      {"<Z0>", span_of(g, {}, 0, true)},
      {"<Z0, Z1>", span_of(g, {}, 1, true)},
      {"<Z0, Z1, Z2>", span_of(g, {}, 2, true)},
      {"so(3)", span_of(g, {"J1", "J2", "J3"})},
      {"<P, Z>", span_of(g, {"P"}, n, true)},
      {"<D, P, Z>", span_of(g, {"D", "P"}, n, true)},
      {"g'", span_of(g, {"P", "J1", "J2", "J3"}, n, true)},
  };
  for (const auto& [name, s] : expected) {
    bool found = false;
    for (const auto& e : entries) found = found || (e.stable && e.subspace == s);
    r.check(found, name + " (dim " + std::to_string(s.dim()) + ") present and stable", "exact");
  }
}

std::string describe_constraints(const exactalg::ConstraintCoefficients& c) {
  return "c=" + c.c.to_string() + " d0=" + c.d0.to_string() + " d1=" + c.d1.to_string() + " a1=" + c.a1.to_string() +
         " B=" + c.b.to_string();
}

void automorphism_section(Report& r, Context& ctx) {
  r.section("automorphisms");
  const auto s1 = sbve::sigma1();
  const auto s2 = sbve::sigma2();
  auto s12 = symvec::compose(s1, s2);
  for (const auto& tr : {s1, s2, s12}) {
    const LinearMap m = sbve::pushforward_matrix(ctx.gs, tr);
    r.text(tr.name + ": " + describe_map(m, ctx.g.labels()));
    r.check(exactalg::is_automorphism(ctx.g, m).ok(), tr.name + " push-forward is an automorphism", "exact");
    bool preserved = true;
    for (const auto& e : ctx.stable_members) preserved = preserved && exactalg::preserves_subspace(m, e.subspace);
    r.check(preserved, tr.name + " preserves all " + std::to_string(ctx.stable_members.size()) + " stable megaideals",
            "exact");
    const auto ex = exactalg::extract_constraint_coefficients(ctx.g, m);
    if (const auto* c = std::get_if<exactalg::ConstraintCoefficients>(&ex)) {
      r.text("  " + describe_constraints(*c));
      r.check(c->a1 * c->d1 == c->c, tr.name + " a1*d1 = c, B special orthogonal", "exact");
    } else {
      const auto& v = std::get<exactalg::ConstraintViolation>(ex);
      r.check(false, tr.name + " constraint extraction: " + exactalg::to_string(v.condition) + ": " + v.detail, "exact");
    }
  }

  const std::vector<sbve::SymmetryParams> family{
      {0, 1, 1, {}},
      {0, -1, 1, {}},
      {0, 1, -1, {}},
      {Rational(1, 2), 3, -1, {1, 2, 3}},
      {-2, Rational(1, 2), 1, {0, Rational(-1, 3)}},
  };
  for (const auto& p : family) {
    const auto tr = sbve::general_symmetry(p);
    const LinearMap m = sbve::pushforward_matrix(ctx.gs, tr);
    const auto ex = exactalg::extract_constraint_coefficients(ctx.g, m);
    const auto* c = std::get_if<exactalg::ConstraintCoefficients>(&ex);
    bool ok = exactalg::is_automorphism(ctx.g, m).ok() && c != nullptr;
    if (c) {
      r.text(tr.name + ": " + describe_constraints(*c));
      ok = ok && c->c == p.c() && c->a1 == p.a1 && c->a1 * c->d1 == c->c;
    }
    r.check(ok, tr.name + " automorphism with c = eps/a1", "exact");
  }
}

void rotation_section(Report& r, Context& ctx) {
  r.section("rotation constraints");
  struct Case {
    std::string name;
    Expr lambda;
    Expr mu;
    bool expect;
  };
  const std::vector<Case> cases{
      {"(lambda, mu)", Expr::lambda(), Expr::mu(), true},
      {"(lambda + pi, -mu)", Expr::lambda() + Expr::pi(), -Expr::mu(), true},
      {"(lambda, mu^2)", Expr::lambda(), Expr::mu() * Expr::mu(), false},
  };
  for (const auto& c : cases) {
    const auto rep = sbve::verify_rotation_constraints(c.lambda, c.mu, ctx.zero);
    for (const auto& e : rep.equations) {
      std::string line = c.name + "  " + e.equation + ": " + e.test.verdict();
      if (!e.test.zero) line += " at " + symvec::describe(*e.test.witness);
      r.text(line);
    }
    const bool holds = rep.ok();
    std::string tag = "symbolic";
    for (const auto& e : rep.equations)
      if (e.test.zero && e.test.certainty == symvec::Certainty::Numeric) tag = "numeric";
    if (c.expect) {
      r.check(holds, c.name + " satisfies all six equations", tag);
    } else {
      const auto* f = rep.first_failure();
      r.check(!holds, c.name + " is rejected" + (f ? " (" + f->equation + ")" : std::string()), "numeric");
    }
  }
}

struct ResidualRow {
  std::string solution;
  std::string transform;
  Expr psi;
  Rational omega;
};

void residual_section(Report& r, Context& ctx) {
  r.section("residuals");
  const Rational w = ctx.config.omega;
  const sbve::Grid grid = sbve::Grid::standard();
  std::vector<ResidualRow> rows;
  const auto s1 = sbve::sigma1();
  const auto s2 = sbve::sigma2();
  auto s12 = symvec::compose(s1, s2);
  s12.name = "sigma1*sigma2";
  const std::vector<PointTransformation> family{
      PointTransformation::identity(), s1, s2, s12,
      sbve::general_symmetry({Rational(1, 2), 3, -1, {1, 2, 3}}),
  };
  for (const auto& sol : sbve::exact_solutions())
    for (const auto& tr : family) rows.push_back({sol.name, tr.name, sbve::transform_solution(sol.psi, tr), 0});

  const auto to_rotating = sbve::omega_elimination(w).inverted();
  const auto to_rest = sbve::omega_elimination(w);
  for (const auto& sol : sbve::exact_solutions())
    rows.push_back({sol.name, "to Omega=" + w.to_string(), sbve::transform_solution(sol.psi, to_rotating), w});
  for (const auto& sol : sbve::rossby_haurwitz(w)) {
    rows.push_back({sol.name, "id", sol.psi, w});
    rows.push_back({sol.name, "to Omega=0", sbve::transform_solution(sol.psi, to_rest), 0});
  }

  r.text("solution | transform | Omega | symbolic | analytic max | fd max");
  bool all_ok = true;
  for (const auto& row : rows) {
    const Expr res = sbve::residual(row.psi, row.omega);
    const double wd = row.omega.to_double();
    const double analytic = sbve::residual_on_grid(row.psi, wd, grid);
    const double fd =
        sbve::residual_on_grid_fd(sbve::as_field(row.psi), sbve::as_field(sbve::vorticity(row.psi)), wd, grid);
    const bool ok = res.is_zero() || analytic < kAnalyticTol || fd < kFdTol;
    all_ok = all_ok && ok;
    r.text(row.solution + " | " + row.transform + " | " + row.omega.to_string() + " | " +
           (res.is_zero() ? "zero" : "nonzero") + " | " + sci(analytic) + " | " + sci(fd) + (ok ? "" : "  <-- FAIL"));
  }
  r.check(all_ok, std::to_string(rows.size()) + " solutions: symbolic zero, analytic < 1e-10 or fd < 1e-8", "numeric");

  const auto base = sbve::standard_test_solution();
  for (const auto& tr : {sbve::time_doubling(), sbve::bare_reflection()}) {
    const Expr psi = sbve::transform_solution(base.psi, tr);
    const double analytic = sbve::residual_on_grid(psi, 0, grid);
    r.text("control " + tr.name + " on " + base.name + ": analytic max " + sci(analytic));
    r.check(analytic > kControlFloor, "non-symmetry " + tr.name + " breaks the solution (> 1e-2)", "numeric");
  }
}

void conjugation_section(Report& r, Context& ctx) {
  r.section("conjugation");
  const Rational w = ctx.config.omega;
  const auto gw = sbve::generators(w, ctx.config.n_max);
  const LieAlgebra aw = sbve::build_truncated_algebra(gw);
  const auto pj2 = aw.bracket_of_basis(idx(aw, "P"), idx(aw, "J2"));
  r.text("Omega = " + w.to_string() + ": [D, P] = " +
         exactalg::describe_vector(aw.bracket_of_basis(idx(aw, "D"), idx(aw, "P")), aw.labels()) +
         ", [P, J2] = " + exactalg::describe_vector(pj2, aw.labels()));
  const LinearMap m = sbve::pushforward_matrix(gw, sbve::omega_elimination(w), ctx.gs);
  r.text("rotating-frame map: " + describe_map(m, aw.labels()));
  r.check(exactalg::is_isomorphism(aw, ctx.g, m).ok(), "push-forward carries the Omega structure constants onto Omega = 0",
          "exact");
  const auto inv = sbve::omega_elimination(w).inverted();
  r.check(symvec::verify_inverse(sbve::omega_elimination(w), ctx.zero).ok && symvec::verify_inverse(inv, ctx.zero).ok,
          "rotating-frame map and its inverse compose to the identity", "symbolic");
}

void factor_group_section(Report& r) {
  r.section("factor group");
  const auto table = sbve::factor_group_table();
  std::string head = "*        ";
  for (const auto& n : table.names) head += " " + n + std::string(14 - n.size(), ' ');
  r.text(head);
  for (std::size_t i = 0; i < 4; ++i) {
    std::string row = table.names[i] + std::string(9 - std::min<std::size_t>(9, table.names[i].size()), ' ');
    for (std::size_t j = 0; j < 4; ++j) {
      const int p = table.product[i][j];
      const std::string cell = p < 0 ? "?" : table.names[static_cast<std::size_t>(p)];
      row += " " + cell + std::string(14 - cell.size(), ' ');
    }
    r.text(row);
  }
  r.check(table.klein_four, "table is the Klein four-group Z2 x Z2", "exact");
}

}  // namespace

void sbve_verify(const VerifyConfig& config, Report& r) {
  symvec::ZeroTestOptions zero;
  zero.seed = config.seed;
  Context ctx{config, zero, sbve::generators(0, config.n_max), sbve::generators(0, config.n_max + 1), {}, {}, {}};
  ctx.g = sbve::build_truncated_algebra(ctx.gs);
  ctx.g_large = sbve::build_truncated_algebra(ctx.gs_large);

  algebra_section(r, ctx);
  series_section(r, ctx);
  megaideal_section(r, ctx);
  automorphism_section(r, ctx);
  rotation_section(r, ctx);
  residual_section(r, ctx);
  conjugation_section(r, ctx);
  factor_group_section(r);
}

}  // namespace megalie::cli
