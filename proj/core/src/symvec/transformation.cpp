#include "megalie/symvec/transformation.hpp"

#include "megalie/errors.hpp"

namespace megalie::symvec {

namespace {

std::array<Expr, 4> substitute_all(const std::array<Expr, 4>& f, const std::array<Expr, 4>& values) {
  std::array<Expr, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = f[i].substitute(values);
  return out;
}

}  // namespace

PointTransformation PointTransformation::instantiate(const std::map<std::string, Rational>& values) const {
  PointTransformation out = *this;
  for (std::size_t i = 0; i < 4; ++i) {
    out.forward[i] = forward[i].substitute_params(values);
    out.inverse[i] = inverse[i].substitute_params(values);
  }
  for (const auto& [name, v] : values) {
    if (auto it = out.params.find(name); it != out.params.end()) it->second = v;
  }
  return out;
}

PointTransformation PointTransformation::inverted() const {
  PointTransformation out = *this;
  out.name = name + "^-1";
  std::swap(out.forward, out.inverse);
  return out;
}

PointTransformation compose(const PointTransformation& outer, const PointTransformation& inner) {
  PointTransformation out;
  out.name = outer.name + "*" + inner.name;
  out.forward = substitute_all(outer.forward, inner.forward);
  out.inverse = substitute_all(inner.inverse, outer.inverse);
  out.params = inner.params;
  for (const auto& [k, v] : outer.params) out.params[k] = v;
  return out;
}

InverseCheck verify_inverse(const PointTransformation& tr, const ZeroTestOptions& opts) {
  InverseCheck out;
  for (Var v : kVars) {
    const Expr diff = tr.forward[index(v)].substitute(tr.inverse) - Expr::var(v);
    const ZeroTest z = is_zero(diff, opts);
    if (!z.zero) {
      out.ok = false;
      out.witness = std::string(var_name(v)) + " component: " + diff.to_string() + " at " + describe(*z.witness);
      return out;
    }
    if (z.certainty == Certainty::Numeric) out.certainty = Certainty::Numeric;
  }
  return out;
}

VectorField pushforward(const VectorField& x, const PointTransformation& tr, const ZeroTestOptions& opts) {
  if (auto check = verify_inverse(tr, opts); !check) {
    throw ContractError("transformation " + tr.name + " does not invert: " + check.witness);
  }
  VectorField out;
  for (Var a : kVars) {
    const Expr image = x.apply(tr.forward[index(a)]);
    out[a] = image.substitute(tr.inverse);
  }
  return out;
}

}  // namespace megalie::symvec
