#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "megalie/exactalg/automorphism.hpp"
#include "megalie/exactalg/lie_algebra.hpp"

namespace megalie::exactalg {

/// Malformed JSON or a document that does not follow the expected layout.
/// `location` is a byte offset or a JSON path, whichever applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string location)
      : std::runtime_error(what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// Algebra files:
//   { "dim": n, "labels": [..], "brackets": [ [i, j, [ [k, "p/q"], ... ] ], ... ] }
// 0-based indices, only i < j, omitted pairs bracket to zero.

/// Parses and structurally checks an algebra document without validating
/// Jacobi; use `LieAlgebra::find_jacobi_violation` or `load_algebra`.
LieAlgebra parse_algebra_unchecked(const std::string& text);
/// Parses and validates (throws AlgebraValidationError on Jacobi failure).
LieAlgebra parse_algebra(const std::string& text);
LieAlgebra load_algebra(const std::filesystem::path& path);
std::string algebra_to_json(const LieAlgebra& g);

// Matrix files: { "dim": n, "rows": [ ["p/q", ...], ... ] }
LinearMap parse_linear_map(const std::string& text);
LinearMap load_linear_map(const std::filesystem::path& path);
std::string linear_map_to_json(const LinearMap& m);

std::string read_file(const std::filesystem::path& path);

}  // namespace megalie::exactalg
