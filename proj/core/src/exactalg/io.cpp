#include "megalie/exactalg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "megalie/errors.hpp"

namespace megalie::exactalg {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
}

const json& field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'", where);
  return doc.at(key);
}

std::size_t as_index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError("expected a non-negative integer", where);
  return v.get<std::size_t>();
}

Rational as_rational(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  } catch (const std::exception& e) {
    throw ParseError(e.what(), where);
  }
  throw ParseError("expected a rational as \"p/q\" string or integer", where);
}

}  // namespace

LieAlgebra parse_algebra_unchecked(const std::string& text) {
  const json doc = parse_json(text);
  const std::size_t dim = as_index(field(doc, "dim", "$"), "$.dim");
  const json& labels_json = field(doc, "labels", "$");
  if (!labels_json.is_array() || labels_json.size() != dim) throw ParseError("labels must list dim names", "$.labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!labels_json[i].is_string()) throw ParseError("label must be a string", "$.labels[" + std::to_string(i) + "]");
    labels.push_back(labels_json[i].get<std::string>());
  }
  std::vector<Rational> c(dim * dim * dim);
  const json& brackets = field(doc, "brackets", "$");
  if (!brackets.is_array()) throw ParseError("brackets must be an array", "$.brackets");
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string where = "$.brackets[" + std::to_string(e) + "]";
    const json& entry = brackets[e];
    if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array())
      throw ParseError("bracket entry must be [i, j, [[k, coeff], ...]]", where);
    const std::size_t i = as_index(entry[0], where + "[0]");
    const std::size_t j = as_index(entry[1], where + "[1]");
    if (i >= dim || j >= dim) throw ParseError("bracket index out of range", where);
    if (i >= j) throw ParseError("only i < j entries are allowed", where);
    for (std::size_t t = 0; t < entry[2].size(); ++t) {
      const std::string tw = where + "[2][" + std::to_string(t) + "]";
      const json& term = entry[2][t];
      if (!term.is_array() || term.size() != 2) throw ParseError("term must be [k, coeff]", tw);
      const std::size_t k = as_index(term[0], tw + "[0]");
      if (k >= dim) throw ParseError("result index out of range", tw);
      const Rational coeff = as_rational(term[1], tw + "[1]");
      c[(i * dim + j) * dim + k] += coeff;
      c[(j * dim + i) * dim + k] -= coeff;
    }
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

LieAlgebra parse_algebra(const std::string& text) {
  LieAlgebra g = parse_algebra_unchecked(text);
  return LieAlgebra::create(g.labels(), g.structure());
}

LieAlgebra load_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

std::string algebra_to_json(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Written by hand so that the layout (one bracket per line) is stable.
  std::ostringstream os;
  os << "{\n  \"dim\": " << n << ",\n  \"labels\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << json(g.labels()[i]).dump();
  os << "],\n  \"brackets\": [";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto row = g.bracket_of_basis(i, j);
      if (is_zero_vector(row)) continue;
      os << (first ? "\n" : ",\n") << "    [" << i << ", " << j << ", [";
      bool first_term = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (row[k].is_zero()) continue;
        os << (first_term ? "" : ", ") << "[" << k << ", \"" << row[k] << "\"]";
        first_term = false;
      }
      os << "]]";
      first = false;
    }
  os << (first ? "" : "\n  ") << "]\n}\n";
  return os.str();
}

LinearMap parse_linear_map(const std::string& text) {
  const json doc = parse_json(text);
  const std::size_t dim = as_index(field(doc, "dim", "$"), "$.dim");
  const json& rows = field(doc, "rows", "$");
  if (!rows.is_array() || rows.size() != dim) throw DimensionError("matrix file must have dim rows");
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim)
      throw DimensionError("row " + std::to_string(r) + " of matrix file must have dim entries");
    for (std::size_t c = 0; c < dim; ++c)
      m(r, c) = as_rational(rows[r][c], "$.rows[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return LinearMap(std::move(m));
}

LinearMap load_linear_map(const std::filesystem::path& path) { return parse_linear_map(read_file(path)); }

std::string linear_map_to_json(const LinearMap& m) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << m.dim() << ",\n  \"rows\": [";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? ", " : "") << '"' << m.matrix()(r, c) << '"';
    os << ']';
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace megalie::exactalg
