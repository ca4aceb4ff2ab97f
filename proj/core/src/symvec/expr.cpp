#include "megalie/symvec/expr.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "megalie/errors.hpp"

namespace megalie::symvec {

namespace {

using Basis = TrigArg::Basis;

const ParamMonomial& pi_monomial() {
  static const ParamMonomial m{{std::string(kPi), 1}};
  return m;
}

void merge_params(ParamMonomial& into, const ParamMonomial& from) {
  for (const auto& [name, e] : from) {
    int& slot = into[name];
    slot += e;
    if (slot == 0) into.erase(name);
  }
}

struct TrigNormal {
  Rational factor;
  Trig kind;  // None: the factor alone is the value
  TrigArg arg;
};

// sin/cos(-x) and shifts by multiples of pi/2 are folded into the factor and
// the kind, so the returned argument is canonical.
TrigNormal normalize_trig(Trig kind, TrigArg arg) {
  Rational factor = 1;
  const TrigArg::Key* lead = nullptr;
  for (const auto& [k, c] : arg.terms) {
    if (k.first != Basis::One) {
      lead = &k;
      break;
    }
  }
  if (lead == nullptr) {
    for (const auto& [k, c] : arg.terms) {
      if (k.second != pi_monomial()) {
        lead = &k;
        break;
      }
    }
  }
  if (lead != nullptr && arg.terms.at(*lead).sign() < 0) {
    arg = -arg;
    if (kind == Trig::Sin) factor = -factor;
  }
  const TrigArg::Key pi_key{Basis::One, pi_monomial()};
  if (auto it = arg.terms.find(pi_key); it != arg.terms.end()) {
    Rational q = it->second;
    Rational r = q - Rational(2 * (q / Rational(2)).floor());
    if (r >= Rational(1)) {
      r -= 1;
      factor = -factor;
    }
    if (r >= Rational(1, 2)) {
      r -= Rational(1, 2);
      if (kind == Trig::Sin) {
        kind = Trig::Cos;
      } else {
        kind = Trig::Sin;
        factor = -factor;
      }
    }
    if (r.is_zero()) {
      arg.terms.erase(it);
    } else {
      it->second = r;
    }
  }
  if (arg.terms.empty()) return {kind == Trig::Sin ? Rational(0) : factor, Trig::None, {}};
  return {factor, kind, std::move(arg)};
}

std::string param_factor(const ParamMonomial& pm) {
  std::string out;
  for (const auto& [name, e] : pm) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string coefficient_prefix(const Rational& c, bool has_factors) {
  if (!has_factors) return c.to_string();
  if (c == Rational(1)) return "";
  if (c == Rational(-1)) return "-";
  return c.to_string() + "*";
}

double trig_value(const TrigArg& arg, const Point& p, const ParamValues& params);

double param_value(const ParamMonomial& pm, const ParamValues& params) {
  double v = 1.0;
  for (const auto& [name, e] : pm) {
    double base;
    if (name == kPi) {
      base = std::numbers::pi;
    } else {
      auto it = params.find(name);
      if (it == params.end()) throw ContractError("no value supplied for parameter '" + name + "'");
      base = it->second;
    }
    v *= std::pow(base, e);
  }
  return v;
}

double trig_value(const TrigArg& arg, const Point& p, const ParamValues& params) {
  double x = 0.0;
  for (const auto& [k, c] : arg.terms) {
    double b = 1.0;
    if (k.first == Basis::Lambda) b = p[index(Var::Lambda)];
    if (k.first == Basis::T) b = p[index(Var::T)];
    x += c.to_double() * param_value(k.second, params) * b;
  }
  return x;
}

}  // namespace

std::string_view var_name(Var v) {
  switch (v) {
    case Var::T: return "t";
    case Var::Lambda: return "lambda";
    case Var::Mu: return "mu";
    case Var::Psi: return "psi";
  }
  return "?";
}

bool TrigArg::has_variable_part() const {
  for (const auto& [k, c] : terms)
    if (k.first != Basis::One) return true;
  return false;
}

TrigArg TrigArg::operator-() const {
  TrigArg out = *this;
  for (auto& [k, c] : out.terms) c = -c;
  return out;
}

TrigArg operator+(const TrigArg& a, const TrigArg& b) {
  TrigArg out = a;
  for (const auto& [k, c] : b.terms) {
    if (c.is_zero()) continue;
    auto [it, inserted] = out.terms.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

Expr::Expr(Rational c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Expr::Expr(std::int64_t c) : Expr(Rational(c)) {}

Expr Expr::var(Var v) {
  Monomial m;
  m.powers[index(v)] = 1;
  Expr e;
  e.terms_.emplace(std::move(m), Rational(1));
  return e;
}

Expr Expr::s() {
  Monomial m;
  m.s = 1;
  Expr e;
  e.terms_.emplace(std::move(m), Rational(1));
  return e;
}

Expr Expr::inv_s() {
  Expr e;
  Monomial m;
  m.s = -1;
  e.accumulate(std::move(m), 1);
  return e;
}

Expr Expr::inv_one_minus_mu2() {
  Expr e;
  Monomial m;
  m.w = 1;
  e.accumulate(std::move(m), 1);
  return e;
}

Expr Expr::param(const std::string& name) {
  Monomial m;
  m.params[name] = 1;
  Expr e;
  e.terms_.emplace(std::move(m), Rational(1));
  return e;
}

Expr Expr::from_trig(Trig kind, TrigArg arg) {
  Monomial m;
  m.trig = kind;
  m.arg = std::move(arg);
  Expr e;
  e.accumulate(std::move(m), 1);
  return e;
}

namespace {

TrigArg to_trig_arg(const Expr& e) {
  TrigArg arg;
  for (const auto& [m, c] : e.terms()) {
    const int lam = m.powers[index(Var::Lambda)];
    const int t = m.powers[index(Var::T)];
    if (m.powers[index(Var::Mu)] != 0 || m.powers[index(Var::Psi)] != 0 || m.s != 0 || m.w != 0 ||
        m.trig != Trig::None || lam + t > 1) {
      throw UnsupportedError("trigonometric argument '" + e.to_string() + "' is not affine in lambda and t");
    }
    Basis b = lam ? Basis::Lambda : (t ? Basis::T : Basis::One);
    arg.terms.emplace(TrigArg::Key{b, m.params}, c);
  }
  return arg;
}

}  // namespace

Expr Expr::sin(const Expr& arg) { return from_trig(Trig::Sin, to_trig_arg(arg)); }
Expr Expr::cos(const Expr& arg) { return from_trig(Trig::Cos, to_trig_arg(arg)); }

std::optional<Rational> Expr::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Monomial{}) return terms_.begin()->second;
  return std::nullopt;
}

void Expr::accumulate(Monomial m, Rational c) {
  if (c.is_zero()) return;
  for (auto it = m.params.begin(); it != m.params.end();) {
    if (it->second == 0) {
      it = m.params.erase(it);
    } else {
      ++it;
    }
  }
  if (m.trig != Trig::None) {
    TrigNormal n = normalize_trig(m.trig, std::move(m.arg));
    c *= n.factor;
    if (c.is_zero()) return;
    m.trig = n.kind;
    m.arg = std::move(n.arg);
  }
  while (m.s < 0) {  // 1/s = s/(1 - mu^2)
    m.s += 2;
    m.w += 1;
  }
  if (m.s >= 2) {  // s^2 = 1 - mu^2
    m.s -= 2;
    if (m.w > 0) {
      m.w -= 1;
      accumulate(std::move(m), c);
    } else {
      Monomial shifted = m;
      shifted.powers[index(Var::Mu)] += 2;
      accumulate(std::move(m), c);
      accumulate(std::move(shifted), -c);
    }
    return;
  }
  if (m.w > 0 && m.powers[index(Var::Mu)] >= 2) {  // mu^2 w = w - 1
    Monomial a = m;
    a.powers[index(Var::Mu)] -= 2;
    Monomial b = a;
    b.w -= 1;
    accumulate(std::move(a), c);
    accumulate(std::move(b), -c);
    return;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Expr Expr::operator-() const {
  Expr out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr& Expr::operator*=(const Expr& o) {
  *this = *this * o;
  return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.params = ma.params;
      merge_params(m.params, mb.params);
      for (std::size_t i = 0; i < 4; ++i) m.powers[i] = ma.powers[i] + mb.powers[i];
      m.s = ma.s + mb.s;
      m.w = ma.w + mb.w;
      const Rational c = ca * cb;
      if (ma.trig == Trig::None || mb.trig == Trig::None) {
        const Monomial& src = ma.trig == Trig::None ? mb : ma;
        m.trig = src.trig;
        m.arg = src.arg;
        out.accumulate(std::move(m), c);
        continue;
      }
      // Product-to-sum keeps a single trigonometric factor per monomial.
      const Rational half = c / Rational(2);
      const TrigArg sum = ma.arg + mb.arg;
      const TrigArg diff = ma.arg - mb.arg;
      Monomial m1 = m;
      Monomial m2 = std::move(m);
      Rational c1 = half;
      Rational c2 = half;
      if (ma.trig == Trig::Sin && mb.trig == Trig::Sin) {
        m1.trig = Trig::Cos, m1.arg = diff;
        m2.trig = Trig::Cos, m2.arg = sum, c2 = -half;
      } else if (ma.trig == Trig::Cos && mb.trig == Trig::Cos) {
        m1.trig = Trig::Cos, m1.arg = diff;
        m2.trig = Trig::Cos, m2.arg = sum;
      } else if (ma.trig == Trig::Sin) {  // sin a cos b
        m1.trig = Trig::Sin, m1.arg = sum;
        m2.trig = Trig::Sin, m2.arg = diff;
      } else {  // cos a sin b
        m1.trig = Trig::Sin, m1.arg = sum;
        m2.trig = Trig::Sin, m2.arg = diff, c2 = -half;
      }
      out.accumulate(std::move(m1), c1);
      out.accumulate(std::move(m2), c2);
    }
  }
  return out;
}

Expr operator/(const Expr& a, const Rational& b) {
  Expr out = a;
  for (auto& [m, c] : out.terms_) c /= b;
  return out;
}

Expr Expr::pow(unsigned n) const {
  Expr result(1);
  Expr base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Expr Expr::differentiate(Var v) const {
  Expr out;
  const std::size_t vi = index(v);
  for (const auto& [m, c] : terms_) {
    if (const int p = m.powers[vi]; p > 0) {
      Monomial d = m;
      d.powers[vi] -= 1;
      out.accumulate(std::move(d), c * Rational(p));
    }
    if (v == Var::Mu) {
      if (m.s != 0) {  // d s^e = -e mu s^(e-2)
        Monomial d = m;
        d.s -= 2;
        d.powers[vi] += 1;
        out.accumulate(std::move(d), c * Rational(-m.s));
      }
      if (m.w != 0) {  // d w^k = 2k mu w^(k+1)
        Monomial d = m;
        d.w += 1;
        d.powers[vi] += 1;
        out.accumulate(std::move(d), c * Rational(2 * m.w));
      }
    }
    if (m.trig != Trig::None && (v == Var::Lambda || v == Var::T)) {
      const Basis b = v == Var::Lambda ? Basis::Lambda : Basis::T;
      for (const auto& [key, r] : m.arg.terms) {
        if (key.first != b) continue;
        Monomial d = m;
        merge_params(d.params, key.second);
        Rational sign = 1;
        if (m.trig == Trig::Sin) {
          d.trig = Trig::Cos;
        } else {
          d.trig = Trig::Sin;
          sign = -1;
        }
        out.accumulate(std::move(d), c * r * sign);
      }
    }
  }
  return out;
}

Expr Expr::substitute(const std::array<Expr, 4>& values) const {
  std::optional<std::pair<Expr, Expr>> radical;  // images of s and w
  auto radical_images = [&]() -> const std::pair<Expr, Expr>& {
    if (!radical) {
      const Expr& m = values[index(Var::Mu)];
      if (m != Expr::mu() && m != -Expr::mu()) {
        throw UnsupportedError("sqrt(1 - mu^2) under mu -> " + m.to_string() + " leaves the expression class");
      }
      radical.emplace(Expr::s(), Expr::inv_one_minus_mu2());
    }
    return *radical;
  };
  std::map<std::pair<std::size_t, int>, Expr> power_cache;
  auto power = [&](std::size_t v, int p) -> const Expr& {
    auto key = std::make_pair(v, p);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, values[v].pow(static_cast<unsigned>(p))).first;
    return it->second;
  };

  Expr out;
  for (const auto& [m, c] : terms_) {
    Monomial head;
    head.params = m.params;
    Expr piece;
    piece.terms_.emplace(std::move(head), c);
    for (std::size_t v = 0; v < 4; ++v)
      if (m.powers[v] > 0) piece *= power(v, m.powers[v]);
    if (m.s != 0 || m.w != 0) {
      const auto& [s_img, w_img] = radical_images();
      if (m.s != 0) piece *= s_img.pow(static_cast<unsigned>(m.s));
      if (m.w != 0) piece *= w_img.pow(static_cast<unsigned>(m.w));
    }
    if (m.trig != Trig::None) {
      Expr arg;
      for (const auto& [key, r] : m.arg.terms) {
        Monomial pm;
        pm.params = key.second;
        Expr coeff;
        coeff.terms_.emplace(std::move(pm), r);
        if (key.first == Basis::One) arg += coeff;
        if (key.first == Basis::Lambda) arg += coeff * values[index(Var::Lambda)];
        if (key.first == Basis::T) arg += coeff * values[index(Var::T)];
      }
      piece *= m.trig == Trig::Sin ? Expr::sin(arg) : Expr::cos(arg);
    }
    out += piece;
  }
  return out;
}

Expr Expr::substitute_params(const std::map<std::string, Rational>& values) const {
  auto split = [&](const ParamMonomial& pm, Rational& factor) {
    ParamMonomial kept;
    for (const auto& [name, e] : pm) {
      auto it = values.find(name);
      if (it == values.end()) {
        kept.emplace(name, e);
        continue;
      }
      Rational p = 1;
      for (int i = 0; i < e; ++i) p *= it->second;
      factor *= p;
    }
    return kept;
  };
  Expr out;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    Rational factor = c;
    n.params = split(m.params, factor);
    if (m.trig != Trig::None) {
      TrigArg arg;
      for (const auto& [key, r] : m.arg.terms) {
        Rational f = r;
        ParamMonomial kept = split(key.second, f);
        arg = arg + TrigArg{{{TrigArg::Key{key.first, kept}, f}}};
      }
      n.arg = std::move(arg);
    }
    out.accumulate(std::move(n), factor);
  }
  return out;
}

double Expr::evaluate(const Point& p, const ParamValues& params) const {
  const double mu = p[index(Var::Mu)];
  const double one_minus = 1.0 - mu * mu;
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.to_double() * param_value(m.params, params);
    for (std::size_t i = 0; i < 4; ++i)
      if (m.powers[i] != 0) v *= std::pow(p[i], m.powers[i]);
    if (m.s != 0) v *= std::pow(std::sqrt(one_minus), m.s);
    if (m.w != 0) v *= std::pow(one_minus, -m.w);
    if (m.trig == Trig::Sin) v *= std::sin(trig_value(m.arg, p, params));
    if (m.trig == Trig::Cos) v *= std::cos(trig_value(m.arg, p, params));
    total += v;
  }
  return total;
}

bool Expr::depends_on(Var v) const {
  for (const auto& [m, c] : terms_) {
    if (m.powers[index(v)] != 0) return true;
    if (v == Var::Mu && (m.s != 0 || m.w != 0)) return true;
    if (m.trig != Trig::None && (v == Var::Lambda || v == Var::T)) {
      const Basis b = v == Var::Lambda ? Basis::Lambda : Basis::T;
      for (const auto& [key, r] : m.arg.terms)
        if (key.first == b) return true;
    }
  }
  return false;
}

std::set<std::string> Expr::parameters() const {
  std::set<std::string> out;
  auto add = [&](const ParamMonomial& pm) {
    for (const auto& [name, e] : pm)
      if (name != kPi) out.insert(name);
  };
  for (const auto& [m, c] : terms_) {
    add(m.params);
    for (const auto& [key, r] : m.arg.terms) add(key.second);
  }
  return out;
}

std::optional<int> Expr::polynomial_degree(Var v) const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    if (v == Var::Mu && (m.s != 0 || m.w != 0)) return std::nullopt;
    if (m.trig != Trig::None && (v == Var::Lambda || v == Var::T)) {
      const Basis b = v == Var::Lambda ? Basis::Lambda : Basis::T;
      for (const auto& [key, r] : m.arg.terms)
        if (key.first == b) return std::nullopt;
    }
    deg = std::max(deg, m.powers[index(v)]);
  }
  return deg;
}

Expr Expr::coefficient(Var v, int k) const {
  Expr out;
  for (const auto& [m, c] : terms_) {
    if (m.powers[index(v)] != k) continue;
    Monomial n = m;
    n.powers[index(v)] = 0;
    out.accumulate(std::move(n), c);
  }
  return out;
}

std::string to_string(const TrigArg& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.terms) {
    std::string factors = param_factor(k.second);
    if (k.first != Basis::One) {
      if (!factors.empty()) factors += '*';
      factors += k.first == Basis::Lambda ? "lambda" : "t";
    }
    Rational mag = first ? c : abs(c);
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    os << coefficient_prefix(mag, !factors.empty()) << factors;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string to_string(const Monomial& m) {
  std::vector<std::string> f;
  if (!m.params.empty()) f.push_back(param_factor(m.params));
  for (Var v : kVars) {
    const int p = m.powers[index(v)];
    if (p == 0) continue;
    f.push_back(std::string(var_name(v)) + (p == 1 ? "" : "^" + std::to_string(p)));
  }
  if (m.s != 0) f.emplace_back("s");
  if (m.w != 0) f.push_back("(1-mu^2)^-" + std::to_string(m.w));
  if (m.trig != Trig::None) f.push_back(std::string(m.trig == Trig::Sin ? "sin(" : "cos(") + to_string(m.arg) + ")");
  std::string out;
  for (const auto& s : f) out += (out.empty() ? "" : "*") + s;
  return out;
}

std::string Expr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string body = symvec::to_string(m);
    const Rational mag = first ? c : abs(c);
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    os << coefficient_prefix(mag, !body.empty()) << body;
    first = false;
  }
  return os.str();
}

}  // namespace megalie::symvec
