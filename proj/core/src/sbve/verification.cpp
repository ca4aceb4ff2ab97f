#include "megalie/sbve/verification.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "megalie/errors.hpp"

namespace megalie::sbve {

using symvec::Var;
using symvec::ZeroTest;

bool RotationConstraintReport::ok() const { return first_failure() == nullptr; }

const EquationCheck* RotationConstraintReport::first_failure() const {
  for (const auto& e : equations)
    if (!e.test.zero) return &e;
  return nullptr;
}

namespace {

// lhs - rhs sampled numerically, for right-hand sides outside the class.
ZeroTest sample_difference(const Expr& lhs, const std::function<double(const symvec::Point&)>& rhs,
                           const symvec::ZeroTestOptions& opts) {
  ZeroTest out{true, symvec::Certainty::Numeric, std::nullopt, 0.0};
  for (const auto& p : symvec::sample_points(lhs.parameters(), opts)) {
    const double v = lhs.evaluate(p.point, p.params) - rhs(p.point);
    if (!std::isfinite(v) || std::abs(v) >= opts.tolerance) return {false, symvec::Certainty::Numeric, p, v};
    out.value = std::max(out.value, std::abs(v));
  }
  return out;
}

}  // namespace

RotationConstraintReport verify_rotation_constraints(const Expr& lambda_img, const Expr& mu_img,
                                                     const symvec::ZeroTestOptions& opts) {
  const GeneratorSet gs = generators(0, 2);
  const VectorField& j1 = gs.at("J1");
  const VectorField& j2 = gs.at("J2");
  const VectorField& j3 = gs.at("J3");
  const std::array<std::string, 6> names{
      "J1 Lambda = 1",
      "J2 Lambda = M/sqrt(1-M^2) sin Lambda",
      "J3 Lambda = M/sqrt(1-M^2) cos Lambda",
      "J1 M = 0",
      "J2 M = sqrt(1-M^2) cos Lambda",
      "J3 M = -sqrt(1-M^2) sin Lambda",
  };
  const std::array<Expr, 6> lhs{j1.apply(lambda_img), j2.apply(lambda_img), j3.apply(lambda_img),
                                j1.apply(mu_img),     j2.apply(mu_img),     j3.apply(mu_img)};

  RotationConstraintReport report;
  const bool in_class = mu_img == Expr::mu() || mu_img == -Expr::mu();
  if (in_class) {
    // sqrt(1 - mu^2) is the same radical for M = mu and M = -mu.
    const Expr sin = Expr::sin(lambda_img);
    const Expr cos = Expr::cos(lambda_img);
    const std::array<Expr, 6> rhs{Expr(1),
                                  mu_img * Expr::inv_s() * sin,
                                  mu_img * Expr::inv_s() * cos,
                                  Expr(0),
                                  Expr::s() * cos,
                                  -(Expr::s() * sin)};
    for (std::size_t i = 0; i < 6; ++i) report.equations[i] = {names[i], symvec::is_zero(lhs[i] - rhs[i], opts)};
    return report;
  }

  auto radical = [&](const symvec::Point& p) {
    const double m = mu_img.evaluate(p);
    const double r = 1.0 - m * m;
    if (r < 0) throw std::domain_error("1 - M^2 < 0 at mu = " + std::to_string(p[2]) + ": M leaves [-1, 1]");
    return std::sqrt(r);
  };
  auto lam = [&](const symvec::Point& p) { return lambda_img.evaluate(p); };
  auto m = [&](const symvec::Point& p) { return mu_img.evaluate(p); };
  const std::array<std::function<double(const symvec::Point&)>, 6> rhs{
      [](const symvec::Point&) { return 1.0; },
      [&](const symvec::Point& p) { return m(p) / radical(p) * std::sin(lam(p)); },
      [&](const symvec::Point& p) { return m(p) / radical(p) * std::cos(lam(p)); },
      [](const symvec::Point&) { return 0.0; },
      [&](const symvec::Point& p) { return radical(p) * std::cos(lam(p)); },
      [&](const symvec::Point& p) { return -radical(p) * std::sin(lam(p)); },
  };
  for (std::size_t i = 0; i < 6; ++i) {
    // Equations without the radical stay symbolic.
    report.equations[i] = {names[i], i == 0 || i == 3 ? symvec::is_zero(lhs[i] - Expr(i == 0 ? 1 : 0), opts)
                                                         : sample_difference(lhs[i], rhs[i], opts)};
  }
  return report;
}

ExactSolution standard_test_solution() {
  const Expr mu = Expr::mu();
  const Expr theta = Expr::lambda() + Expr(Rational(2, 3)) * Expr::t();
  return {"mu + mu*s*cos(lambda + 2/3*t)", mu + mu * Expr::s() * Expr::cos(theta), 0};
}

std::vector<ExactSolution> exact_solutions() {
  const Expr mu = Expr::mu();
  const Expr s = Expr::s();
  const Expr l = Expr::lambda();
  const Expr one_minus = Expr(1) - mu * mu;
  std::vector<ExactSolution> out{
      {"P1 = mu", mu, 0},
      {"P2 = 3mu^2 - 1", Expr(3) * mu * mu - Expr(1), 0},
      {"P3 = 5mu^3 - 3mu", Expr(5) * mu.pow(3) - Expr(3) * mu, 0},
      {"Y21c = mu*s*cos(lambda)", mu * s * Expr::cos(l), 0},
      {"Y21s = mu*s*sin(lambda)", mu * s * Expr::sin(l), 0},
      {"Y22c = s^2*cos(2lambda)", s * s * Expr::cos(Expr(2) * l), 0},
      {"Y31c = s(5mu^2-1)cos(lambda)", s * (Expr(5) * mu * mu - Expr(1)) * Expr::cos(l), 0},
      {"Y32c = mu(1-mu^2)cos(2lambda)", mu * one_minus * Expr::cos(Expr(2) * l), 0},
      {"Y33c = s^3*cos(3lambda)", s.pow(3) * Expr::cos(Expr(3) * l), 0},
  };
  out.push_back(standard_test_solution());
  return out;
}

std::vector<ExactSolution> rossby_haurwitz(const Rational& omega) {
  const Expr mu = Expr::mu();
  const Expr s = Expr::s();
  struct Wave {
    const char* name;
    Expr amplitude;
    int n;
    int m;
  };
  const std::vector<Wave> waves{
      {"RH21 = mu*s*cos(lambda - ct)", mu * s, 2, 1},
      {"RH22 = s^2*cos(2(lambda - ct))", s * s, 2, 2},
      {"RH31 = s(5mu^2-1)cos(lambda - ct)", s * (Expr(5) * mu * mu - Expr(1)), 3, 1},
      {"RH33 = s^3*cos(3(lambda - ct))", s.pow(3), 3, 3},
  };
  std::vector<ExactSolution> out;
  for (const auto& w : waves) {
    const Rational c = Rational(-2) * omega / Rational(w.n * (w.n + 1));
    const Expr phase = Expr(w.m) * (Expr::lambda() - Expr(c) * Expr::t());
    out.push_back({w.name, w.amplitude * Expr::cos(phase), omega});
  }
  return out;
}

Expr transform_solution(const Expr& psi, const symvec::PointTransformation& tr) {
  const Expr& big_psi = tr.forward[symvec::index(Var::Psi)];
  const auto degree = big_psi.polynomial_degree(Var::Psi);
  if (!degree || *degree > 1) throw UnsupportedError("Psi = " + big_psi.to_string() + " is not affine in psi");
  for (Var v : {Var::T, Var::Lambda, Var::Mu}) {
    if (tr.inverse[symvec::index(v)].depends_on(Var::Psi)) {
      throw UnsupportedError("inverse " + std::string(symvec::var_name(v)) + " component depends on psi");
    }
  }
  std::array<Expr, 4> old = tr.inverse;
  old[symvec::index(Var::Psi)] = Expr::psi();
  const Expr a = big_psi.coefficient(Var::Psi, 0).substitute(old);
  const Expr b = big_psi.coefficient(Var::Psi, 1).substitute(old);
  return a + b * psi.substitute(old);
}

symvec::PointTransformation time_doubling() {
  symvec::PointTransformation tr;
  tr.name = "t->2t";
  tr.forward[symvec::index(Var::T)] = Expr(2) * Expr::t();
  tr.inverse[symvec::index(Var::T)] = Expr::t() / Rational(2);
  return tr;
}

symvec::PointTransformation bare_reflection() {
  symvec::PointTransformation tr;
  tr.name = "mu->-mu";
  tr.forward[symvec::index(Var::Mu)] = -Expr::mu();
  tr.inverse[symvec::index(Var::Mu)] = -Expr::mu();
  return tr;
}

}  // namespace megalie::sbve
