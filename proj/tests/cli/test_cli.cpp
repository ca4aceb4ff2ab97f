#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

std::string data(const std::string& name) { return std::string(MEGALIE_DATA_DIR) + "/" + name; }

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "megalie");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = megalie::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    auto r = run({"algebra", "validate", data("so3.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "valid: dim 3"));
    r = run({"algebra", "validate", data("jacobi_broken.json")});
    CHECK(r.code == 1);
    CHECK(has(r.out, "Jacobi identity fails for basis triple (1, 2, 3)"));
    r = run({"algebra", "validate", data("malformed.json")});
    CHECK(r.code == 2);
    CHECK(has(r.err, "parse error at"));
    CHECK(run({"algebra", "validate", data("no_such_file.json")}).code == 2);
  }

  TEST_CASE("series") {
    auto r = run({"algebra", "series", data("b4.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "derived series: 10, 9, 7, 3, 3"));
    r = run({"algebra", "series", data("so3.json")});
    CHECK(has(r.out, "derived series: 3, 3"));
    r = run({"algebra", "series", data("abelian3.json"), "--kind", "lower"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "lower series: 3, 0"));
    r = run({"algebra", "series", data("abelian3.json"), "--kind", "center"});
    CHECK(has(r.out, "center series: 0, 3"));
    CHECK(run({"algebra", "series", data("b4.json"), "--kind", "radical"}).code == 2);
  }

  TEST_CASE("megaideals") {
    auto r = run({"algebra", "megaideals", data("dp.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "megaideals: 3"));
    CHECK(has(r.out, "{0}"));
    CHECK(has(r.out, "<P>"));
    r = run({"algebra", "megaideals", data("b4.json"), "--stability", data("b5.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "stable"));
    r = run({"algebra", "megaideals", data("b4.json"), "--max", "5"});
    CHECK(r.code == 3);
    CHECK(has(r.out, "incomplete"));
  }

  TEST_CASE("check-map") {
    auto r = run({"check-map", data("b4.json"), data("sigma2_b4.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "automorphism: yes"));
    CHECK(has(r.out, "result: pass"));
    r = run({"check-map", data("b4.json"), data("counterexample_b4.json")});
    CHECK(r.code == 1);
    CHECK(has(r.out, "gauge-unit violated: image(Z0) = Z0 + Z1"));
    CHECK(has(r.out, "result: fail"));
    r = run({"check-map", data("so3.json"), data("sigma2_b4.json")});
    CHECK(r.code == 2);
    CHECK(has(r.err, "shape mismatch"));
  }

  TEST_CASE("sbve verify and export") {
    auto r = run({"sbve", "verify"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "seed: 42"));
    CHECK(run({"sbve", "verify", "--nmax", "1"}).code == 2);
    CHECK(run({"sbve", "verify", "--omega", "x/0"}).code == 2);
    const auto a = run({"sbve", "verify", "--omega", "7/3"});
    const auto b = run({"sbve", "verify", "--omega", "7/3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    ::setenv("MEGALIE_SEED", "7", 1);
    r = run({"sbve", "verify"});
    ::unsetenv("MEGALIE_SEED");
    CHECK(r.code == 0);
    CHECK(has(r.out, "seed: 7"));

    r = run({"sbve", "export", "--map", "sigma2"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "["));
    CHECK(run({"sbve", "export", "--map", "sigma3"}).code == 2);
  }

  TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--version"}).code == 0);
  }
}
