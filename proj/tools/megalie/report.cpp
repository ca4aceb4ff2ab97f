#include "report.hpp"

#include <cstdint>
#include <cstdio>

namespace megalie::cli {

void Report::header(const std::string& key, const std::string& value) { lines_.push_back(key + ": " + value); }

void Report::section(const std::string& name) {
  current_ = name;
  lines_.emplace_back();
  lines_.push_back("== " + name);
}

void Report::text(const std::string& line) { lines_.push_back("  " + line); }

void Report::check(bool pass, const std::string& what, const std::string& tag) {
  ++checks_;
  if (!pass) {
    ++failed_;
    if (!first_failure_) first_failure_ = current_;
  }
  lines_.push_back(std::string(pass ? "  PASS " : "  FAIL ") + what + " [" + tag + "]");
}

std::string Report::str() const {
  std::string out;
  for (const auto& l : lines_) out += l + "\n";
  out += "\n== summary\n";
  out += "  checks: " + std::to_string(checks_) + ", failed: " + std::to_string(failed_) + "\n";
  out += std::string("  result: ") + (ok() ? "PASS" : "FAIL (first failure in " + *first_failure_ + ")") + "\n";
  return out;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string describe_map(const exactalg::LinearMap& m, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (j) out += ", ";
    out += labels[j] + "->" + exactalg::describe_vector(m.image_of_basis(j), labels);
  }
  return out;
}

}  // namespace megalie::cli
