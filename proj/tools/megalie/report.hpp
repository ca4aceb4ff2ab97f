#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "megalie/exactalg/automorphism.hpp"
#include "megalie/exactalg/subspace.hpp"

namespace megalie::cli {

/// Plain-text report with a fixed section order. Every check line carries a
/// certainty tag: exact, symbolic or numeric.
class Report {
 public:
  void header(const std::string& key, const std::string& value);
  void section(const std::string& name);
  void text(const std::string& line);
  void check(bool pass, const std::string& what, const std::string& tag);

  bool ok() const { return !first_failure_; }
  const std::optional<std::string>& first_failure() const { return first_failure_; }
  std::string str() const;

 private:
  std::vector<std::string> lines_;
  std::string current_;
  std::optional<std::string> first_failure_;
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
};

/// 64-bit FNV-1a, as 16 hex digits.
std::string digest(std::string_view bytes);

/// Scientific notation with three decimals, e.g. "1.234e-09".
std::string sci(double v);

/// "D->D, P->-P, ..." listing the image of every basis element.
std::string describe_map(const exactalg::LinearMap& m, const std::vector<std::string>& labels);

}  // namespace megalie::cli
