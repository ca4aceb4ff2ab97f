#include "megalie/exactalg/automorphism.hpp"

#include <array>

#include "megalie/errors.hpp"

namespace megalie::exactalg {

LinearMap::LinearMap(Matrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols()) throw DimensionError("linear map matrix must be square");
}

AutomorphismCheck is_automorphism(const LieAlgebra& g, const LinearMap& m) { return is_isomorphism(g, g, m); }

AutomorphismCheck is_isomorphism(const LieAlgebra& from, const LieAlgebra& to, const LinearMap& m) {
  const std::size_t n = from.dim();
  if (m.dim() != n || to.dim() != n) throw DimensionError("linear map size does not match algebra dimension");
  if (determinant(m.matrix()).is_zero()) return {AutomorphismVerdict::kSingular, std::nullopt};
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(m.image_of_basis(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = m.apply(from.bracket_of_basis(i, j));
      Vector rhs = bracket_element(to, images[i], images[j]);
      if (lhs != rhs) return {AutomorphismVerdict::kBracketMismatch, std::make_pair(i, j)};
    }
  return {};
}

bool preserves_subspace(const LinearMap& m, const Subspace& s) {
  if (m.dim() != s.ambient()) throw DimensionError("linear map size does not match subspace ambient dimension");
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (!s.contains(m.apply(s.basis().row(r)))) return false;
  return true;
}

std::string to_string(ConstraintCondition c) {
  switch (c) {
    case ConstraintCondition::kGaugeUnit: return "gauge-unit";
    case ConstraintCondition::kGaugeLinear: return "gauge-linear";
    case ConstraintCondition::kTimeTranslation: return "time-translation";
    case ConstraintCondition::kRotationBlock: return "rotation-block";
    case ConstraintCondition::kBracketRelation: return "bracket-relation";
  }
  return "unknown";
}

namespace {

std::size_t require_label(const LieAlgebra& g, const std::string& label) {
  auto i = g.index_of(label);
  if (!i) throw SchemaError("algebra lacks basis element '" + label + "' needed for constraint extraction");
  return *i;
}

// True when v vanishes outside the listed coordinates.
bool supported_on(const Vector& v, const std::vector<std::size_t>& allowed) {
  std::vector<bool> ok(v.size(), false);
  for (auto i : allowed) ok[i] = true;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!ok[k] && !v[k].is_zero()) return false;
  return true;
}

}  // namespace

ConstraintExtraction extract_constraint_coefficients(const LieAlgebra& g, const LinearMap& m) {
  if (m.dim() != g.dim()) throw DimensionError("linear map size does not match algebra dimension");
  require_label(g, "D");
  const std::size_t p = require_label(g, "P");
  const std::array<std::size_t, 3> j{require_label(g, "J1"), require_label(g, "J2"), require_label(g, "J3")};
  std::vector<std::size_t> tower;
  for (std::size_t n = 0;; ++n) {
    auto i = g.index_of("Z" + std::to_string(n));
    if (!i) break;
    tower.push_back(*i);
  }
  if (tower.size() < 2) throw SchemaError("algebra needs at least Z0 and Z1 for constraint extraction");
  const std::size_t z0 = tower[0];
  const std::size_t z1 = tower[1];
  auto describe_image = [&](std::size_t col) { return describe_vector(m.image_of_basis(col), g.labels()); };

  ConstraintCoefficients out;

  const Vector img_z0 = m.image_of_basis(z0);
  if (!supported_on(img_z0, {z0}) || img_z0[z0].is_zero())
    return ConstraintViolation{ConstraintCondition::kGaugeUnit, "image(Z0) = " + describe_image(z0)};
  out.c = img_z0[z0];

  const Vector img_z1 = m.image_of_basis(z1);
  if (!supported_on(img_z1, {z0, z1}) || img_z1[z1].is_zero())
    return ConstraintViolation{ConstraintCondition::kGaugeLinear, "image(Z1) = " + describe_image(z1)};
  out.d1 = img_z1[z1];
  out.d0 = img_z1[z0];

  const Vector img_p = m.image_of_basis(p);
  std::vector<std::size_t> p_support = tower;
  p_support.push_back(p);
  if (!supported_on(img_p, p_support) || img_p[p].is_zero())
    return ConstraintViolation{ConstraintCondition::kTimeTranslation, "image(P) = " + describe_image(p)};
  out.a1 = img_p[p];

  out.b = Matrix(3, 3);
  std::vector<std::size_t> j_support(j.begin(), j.end());
  for (std::size_t r = 0; r < 3; ++r) {
    const Vector img = m.image_of_basis(j[r]);
    if (!supported_on(img, j_support)) {
      return ConstraintViolation{ConstraintCondition::kRotationBlock,
                                 "image(J" + std::to_string(r + 1) + ") = " + describe_image(j[r])};
    }
    for (std::size_t c = 0; c < 3; ++c) out.b(r, c) = img[j[c]];
  }
  if (out.b.transpose() * out.b != Matrix::identity(3))
    return ConstraintViolation{ConstraintCondition::kRotationBlock, "J-block " + out.b.to_string() + " is not orthogonal"};
  if (determinant(out.b) != Rational(1))
    return ConstraintViolation{ConstraintCondition::kRotationBlock, "J-block " + out.b.to_string() + " has determinant -1"};

  if (out.a1 * out.d1 != out.c) {
    return ConstraintViolation{ConstraintCondition::kBracketRelation,
                               "a1*d1 = " + (out.a1 * out.d1).to_string() + " but c = " + out.c.to_string()};
  }
  return out;
}

}  // namespace megalie::exactalg
