#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <variant>

#include "megalie/errors.hpp"
#include "megalie/exactalg/closure.hpp"
#include "megalie/exactalg/io.hpp"
#include "megalie/exactalg/structure.hpp"
#include "megalie/sbve/generators.hpp"
#include "megalie/sbve/symmetries.hpp"
#include "report.hpp"
#include "sbve_verify.hpp"

#ifndef MEGALIE_VERSION_STRING
#define MEGALIE_VERSION_STRING "0.0.0"
#endif

namespace megalie::cli {

namespace {

using exactalg::LieAlgebra;
using exactalg::Subspace;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string triple_text(const LieAlgebra& g, const exactalg::JacobiViolation& v) {
  const auto& [a, b, c] = v.triple;
  return "(" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ", " + std::to_string(c + 1) + ") = (" +
         g.labels()[a] + ", " + g.labels()[b] + ", " + g.labels()[c] +
         "): cyclic sum = " + exactalg::describe_vector(v.cyclic_sum, g.labels());
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const LieAlgebra g = exactalg::parse_algebra_unchecked(exactalg::read_file(path));
  if (auto v = g.find_antisymmetry_violation()) {
    out << "invalid: structure constants not antisymmetric at (" << v->i + 1 << ", " << v->j + 1 << ")\n";
    return kCheckFailed;
  }
  if (auto v = g.find_jacobi_violation()) {
    out << "invalid: Jacobi identity fails for basis triple " << triple_text(g, *v) << "\n";
    return kCheckFailed;
  }
  out << "valid: dim " << g.dim() << ", " << exactalg::describe(Subspace::full(g.dim()), g.labels()) << "\n";
  return kOk;
}

void print_terms(std::ostream& out, const LieAlgebra& g, const std::vector<Subspace>& terms) {
  for (std::size_t k = 0; k < terms.size(); ++k)
    out << "  [" << k << "] dim " << terms[k].dim() << "  " << exactalg::describe(terms[k], g.labels()) << "\n";
}

int cmd_series(const std::string& path, const std::string& kind, std::ostream& out) {
  const LieAlgebra g = exactalg::load_algebra(path);
  std::vector<Subspace> terms;
  if (kind == "derived") terms = exactalg::derived_series(g);
  if (kind == "lower") terms = exactalg::lower_central_series(g);
  if (kind == "center") terms = exactalg::upper_central_series(g);
  out << kind << " series:";
  for (std::size_t k = 0; k < terms.size(); ++k) out << (k ? ", " : " ") << terms[k].dim();
  out << "\n";
  print_terms(out, g, terms);
  return kOk;
}

int cmd_megaideals(const std::string& path, std::size_t depth, std::size_t max, const std::string& stability,
                   std::ostream& out) {
  const LieAlgebra g = exactalg::load_algebra(path);
  const exactalg::ClosureOptions opts{depth, max};
  const auto closure = exactalg::megaideal_closure(g, {}, opts);
  bool complete = closure.complete;
  std::vector<exactalg::StabilityEntry> entries;
  if (stability.empty()) {
    for (std::size_t i = 0; i < closure.members.size(); ++i) entries.push_back({closure.members[i], closure.provenance[i], true});
  } else {
    const LieAlgebra large = exactalg::load_algebra(stability);
    const auto large_closure = exactalg::megaideal_closure(large, {}, opts);
    complete = complete && large_closure.complete;
    entries = exactalg::stability_filter(g, closure, large, large_closure);
  }
  out << "megaideals: " << entries.size() << " after " << closure.rounds << " rounds"
      << (complete ? "" : " (incomplete: budget exceeded)") << "\n";
  for (const auto& e : entries) {
    out << "  dim " << e.subspace.dim();
    if (!stability.empty()) out << (e.stable ? "  stable   " : "  truncated");
    out << "  " << exactalg::describe(e.subspace, g.labels()) << "  <- " << e.provenance.description << "\n";
  }
  return complete ? kOk : kBudget;
}

int cmd_check_map(const std::string& alg_path, const std::string& matrix_path, std::ostream& out) {
  const LieAlgebra g = exactalg::load_algebra(alg_path);
  const exactalg::LinearMap m = exactalg::load_linear_map(matrix_path);
  if (m.dim() != g.dim()) {
    throw DimensionError("matrix is " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + " but the algebra has dim " +
                         std::to_string(g.dim()));
  }
  bool ok = true;
  const auto aut = exactalg::is_automorphism(g, m);
  switch (aut.verdict) {
    case exactalg::AutomorphismVerdict::kAutomorphism: out << "automorphism: yes\n"; break;
    case exactalg::AutomorphismVerdict::kSingular: out << "automorphism: no (singular)\n"; break;
    case exactalg::AutomorphismVerdict::kBracketMismatch:
      out << "automorphism: no (bracket of " << g.labels()[aut.witness->first] << ", " << g.labels()[aut.witness->second]
          << " not preserved)\n";
      break;
  }
  ok = ok && aut.ok();

  const auto closure = exactalg::megaideal_closure(g);
  std::size_t preserved = 0;
  for (const auto& s : closure.members) {
    if (exactalg::preserves_subspace(m, s)) {
      ++preserved;
    } else {
      out << "  not preserved: " << exactalg::describe(s, g.labels()) << "\n";
    }
  }
  out << "megaideals preserved: " << preserved << "/" << closure.members.size() << "\n";
  ok = ok && preserved == closure.members.size();

  try {
    const auto ex = exactalg::extract_constraint_coefficients(g, m);
    if (const auto* c = std::get_if<exactalg::ConstraintCoefficients>(&ex)) {
      out << "constraints: c=" << c->c << " d0=" << c->d0 << " d1=" << c->d1 << " a1=" << c->a1
          << " B=" << c->b.to_string() << "\n";
    } else {
      const auto& v = std::get<exactalg::ConstraintViolation>(ex);
      out << "constraints: " << exactalg::to_string(v.condition) << " violated: " << v.detail << "\n";
      ok = false;
    }
  } catch (const SchemaError&) {
    out << "constraints: not applicable (labels D, P, J1-J3, Z0, Z1 not all present)\n";
  }
  out << "result: " << (ok ? "pass" : "fail") << "\n";
  return ok ? kOk : kCheckFailed;
}

exactalg::Rational parse_omega(const std::string& text) {
  try {
    return exactalg::Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--omega: " + std::string(e.what()));
  }
}

std::size_t check_nmax(std::size_t n_max) {
  if (n_max < 2) throw UsageError("--nmax must be at least 2, got " + std::to_string(n_max));
  return n_max;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + output);
  f << text;
}

int cmd_sbve_verify(const std::string& omega_text, std::size_t n_max, std::uint64_t seed, const std::string& output,
                    std::ostream& out, std::ostream& err) {
  VerifyConfig config{parse_omega(omega_text), check_nmax(n_max), seed};
  if (const char* env = std::getenv("MEGALIE_SEED"); env != nullptr && *env != '\0') {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("MEGALIE_SEED is not an unsigned integer: " + std::string(env));
    }
  }
  const std::string inputs = "sbve verify omega=" + config.omega.to_string() + " nmax=" + std::to_string(config.n_max) +
                             " seed=" + std::to_string(config.seed);
  Report r;
  r.header("megalie", MEGALIE_VERSION_STRING);
  r.header("command", "sbve verify");
  r.header("omega", config.omega.to_string());
  r.header("nmax", std::to_string(config.n_max));
  r.header("seed", std::to_string(config.seed) + " (numeric zero-test sampling)");
  r.header("input digest", "fnv1a:" + digest(inputs));
  sbve_verify(config, r);
  emit(r.str(), output, out);
  if (!r.ok()) {
    err << "sbve verify: first failure in section '" << *r.first_failure() << "'\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_sbve_export(const std::string& omega_text, std::size_t n_max, const std::string& map, const std::string& output,
                    std::ostream& out) {
  const exactalg::Rational omega = parse_omega(omega_text);
  const auto gs = sbve::generators(omega, check_nmax(n_max));
  if (map.empty()) {
    emit(exactalg::algebra_to_json(sbve::build_truncated_algebra(gs)), output, out);
    return kOk;
  }
  exactalg::LinearMap m;
  if (map == "sigma1") m = sbve::pushforward_matrix(gs, sbve::sigma1());
  if (map == "sigma2") m = sbve::pushforward_matrix(gs, sbve::sigma2());
  if (map == "sigma12") m = sbve::pushforward_matrix(gs, symvec::compose(sbve::sigma1(), sbve::sigma2()));
  if (map == "rotating-frame") m = sbve::pushforward_matrix(gs, sbve::omega_elimination(omega), sbve::generators(0, n_max));
  emit(exactalg::linear_map_to_json(m), output, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Megaideals, truncated symmetry algebras and discrete symmetries of the spherical vorticity equation",
               "megalie"};
  app.set_version_flag("--version", MEGALIE_VERSION_STRING);
  app.require_subcommand(1);
  std::function<int()> action;

  auto* algebra = app.add_subcommand("algebra", "Operations on algebra files")->require_subcommand(1);
  std::string path;
  auto* validate = algebra->add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
  validate->add_option("file", path, "algebra JSON")->required();
  validate->callback([&] { action = [&] { return cmd_validate(path, out); }; });

  std::string kind = "derived";
  auto* series = algebra->add_subcommand("series", "Derived, lower central or upper central series");
  series->add_option("file", path, "algebra JSON")->required();
  series->add_option("--kind", kind, "derived | lower | center")->check(CLI::IsMember({"derived", "lower", "center"}));
  series->callback([&] { action = [&] { return cmd_series(path, kind, out); }; });

  std::size_t depth = exactalg::ClosureOptions{}.max_depth;
  std::size_t max_count = exactalg::ClosureOptions{}.max_count;
  std::string stability;
  auto* mega = algebra->add_subcommand("megaideals", "Closure of the megaideal constructors");
  mega->add_option("file", path, "algebra JSON")->required();
  mega->add_option("--depth", depth, "maximum number of rounds");
  mega->add_option("--max", max_count, "maximum number of members");
  mega->add_option("--stability", stability, "algebra with the Z-tower extended by one degree");
  mega->callback([&] { action = [&] { return cmd_megaideals(path, depth, max_count, stability, out); }; });

  std::string matrix_path;
  auto* check_map = app.add_subcommand("check-map", "Automorphism, megaideal and constraint checks for a matrix");
  check_map->add_option("algebra", path, "algebra JSON")->required();
  check_map->add_option("matrix", matrix_path, "matrix JSON, column j = image of e_j")->required();
  check_map->callback([&] { action = [&] { return cmd_check_map(path, matrix_path, out); }; });

  auto* sbve_cmd = app.add_subcommand("sbve", "Vorticity-equation pipeline")->require_subcommand(1);
  std::string omega = "0";
  std::size_t n_max = 4;
  std::uint64_t seed = 42;
  std::string output;
  std::string map;
  auto* verify = sbve_cmd->add_subcommand("verify", "Run every check and write the report");
  verify->add_option("--omega", omega, "angular velocity, rational p/q");
  verify->add_option("--nmax", n_max, "degree of the truncated Z-tower");
  verify->add_option("--seed", seed, "seed of the numeric zero test (MEGALIE_SEED overrides)");
  verify->add_option("-o,--output", output, "report file (default stdout)");
  verify->callback([&] { action = [&] { return cmd_sbve_verify(omega, n_max, seed, output, out, err); }; });
  auto* export_cmd = sbve_cmd->add_subcommand("export", "Write the truncated algebra or a push-forward matrix");
  export_cmd->add_option("--omega", omega, "angular velocity, rational p/q");
  export_cmd->add_option("--nmax", n_max, "degree of the truncated Z-tower");
  export_cmd->add_option("--map", map, "sigma1 | sigma2 | sigma12 | rotating-frame")
      ->check(CLI::IsMember({"sigma1", "sigma2", "sigma12", "rotating-frame"}));
  export_cmd->add_option("-o,--output", output, "output file (default stdout)");
  export_cmd->callback([&] { action = [&] { return cmd_sbve_export(omega, n_max, map, output, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const exactalg::ParseError& e) {
    err << "parse error at " << e.location() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const exactalg::AlgebraValidationError& e) {
    err << "invalid algebra: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "shape mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace megalie::cli
