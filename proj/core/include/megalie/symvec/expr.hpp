#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "megalie/exactalg/rational.hpp"

namespace megalie::symvec {

using exactalg::Rational;

/// Chart variables. Order fixes the component order of vector fields.
enum class Var : int { T = 0, Lambda = 1, Mu = 2, Psi = 3 };
inline constexpr std::array<Var, 4> kVars{Var::T, Var::Lambda, Var::Mu, Var::Psi};
std::string_view var_name(Var v);
inline std::size_t index(Var v) { return static_cast<std::size_t>(v); }

/// Product of named parameters, e.g. {Omega: 2}. The name "pi" is reserved
/// for the constant and is reduced inside trigonometric arguments.
using ParamMonomial = std::map<std::string, int>;
inline constexpr std::string_view kPi = "pi";

/// Argument of sin/cos: sum of rational * parameter-monomial * {1, lambda, t}.
struct TrigArg {
  enum class Basis : int { One = 0, Lambda = 1, T = 2 };
  using Key = std::pair<Basis, ParamMonomial>;
  std::map<Key, Rational> terms;

  bool empty() const { return terms.empty(); }
  bool has_variable_part() const;
  TrigArg operator-() const;
  friend TrigArg operator+(const TrigArg& a, const TrigArg& b);
  friend TrigArg operator-(const TrigArg& a, const TrigArg& b) { return a + (-b); }
  friend auto operator<=>(const TrigArg&, const TrigArg&) = default;
  friend bool operator==(const TrigArg&, const TrigArg&) = default;
};

enum class Trig : int { None = 0, Sin = 1, Cos = 2 };

/// params * t^a lambda^b mu^c psi^d * s^e * w^k * trig(arg), with
/// s = sqrt(1 - mu^2) and w = 1/(1 - mu^2).
///
/// Canonical form: e in {0, 1}; mu-degree <= 1 whenever k > 0; at most one
/// trigonometric factor whose argument has a positive leading variable
/// coefficient and a pi-multiple reduced into [0, 1/2).
struct Monomial {
  ParamMonomial params;
  std::array<int, 4> powers{};
  int s = 0;
  int w = 0;
  Trig trig = Trig::None;
  TrigArg arg;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using Point = std::array<double, 4>;
using ParamValues = std::map<std::string, double>;

/// Expression in the closed class: polynomials in t, lambda, mu, psi and
/// parameters, times powers of sqrt(1 - mu^2) (negative powers allowed), times
/// sin/cos of arguments affine in lambda and t. Every operation returns the
/// canonical form.
class Expr {
 public:
  using Terms = std::map<Monomial, Rational>;

  Expr() = default;
  Expr(Rational c);      // NOLINT(google-explicit-constructor)
  Expr(std::int64_t c);  // NOLINT(google-explicit-constructor)
  Expr(int c) : Expr(static_cast<std::int64_t>(c)) {}  // NOLINT(google-explicit-constructor)

  static Expr var(Var v);
  static Expr t() { return var(Var::T); }
  static Expr lambda() { return var(Var::Lambda); }
  static Expr mu() { return var(Var::Mu); }
  static Expr psi() { return var(Var::Psi); }
  /// sqrt(1 - mu^2)
  static Expr s();
  /// 1 / sqrt(1 - mu^2)
  static Expr inv_s();
  /// 1 / (1 - mu^2)
  static Expr inv_one_minus_mu2();
  static Expr param(const std::string& name);
  static Expr pi() { return param(std::string(kPi)); }
  /// Throws UnsupportedError unless `arg` is affine in lambda and t with
  /// parameter coefficients.
  static Expr sin(const Expr& arg);
  static Expr cos(const Expr& arg);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_constant() const;

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Rational& b);
  friend bool operator==(const Expr&, const Expr&) = default;

  Expr pow(unsigned n) const;
  Expr differentiate(Var v) const;

  /// Replaces chart variables by expressions. sqrt(1 - mu^2) follows a mu
  /// substitution only when the new mu is +mu or -mu; anything else throws
  /// UnsupportedError.
  Expr substitute(const std::array<Expr, 4>& values) const;
  Expr substitute_params(const std::map<std::string, Rational>& values) const;

  double evaluate(const Point& p, const ParamValues& params = {}) const;

  bool depends_on(Var v) const;
  /// Parameter names appearing anywhere (excluding "pi").
  std::set<std::string> parameters() const;
  /// Highest power of v in polynomial position; nullopt if v also sits inside
  /// sqrt(1 - mu^2) or a trigonometric argument.
  std::optional<int> polynomial_degree(Var v) const;
  /// Coefficient of v^k in polynomial position (requires polynomial_degree).
  Expr coefficient(Var v, int k) const;

  std::string to_string() const;

 private:
  static Expr from_trig(Trig kind, TrigArg arg);
  void accumulate(Monomial m, Rational c);
  Terms terms_;
};

std::string to_string(const Monomial& m);
std::string to_string(const TrigArg& a);

}  // namespace megalie::symvec
