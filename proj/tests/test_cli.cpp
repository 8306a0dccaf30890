#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eddeg/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
  json doc;        // parsed stdout (null unless stdout is nonempty)
  json error_doc;  // parsed stderr (null unless stderr is nonempty JSON)
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("eddeg");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = eddeg::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out[0] == '{') r.doc = json::parse(r.out);
  if (!r.err.empty() && r.err[0] == '{') r.error_doc = json::parse(r.err);
  return r;
}

}  // namespace

TEST_CASE("usage errors exit 2 with a machine-readable report") {
  CliResult none = run({});
  CHECK(none.code == 2);
  CHECK(none.out.empty());
  REQUIRE(!none.error_doc.is_null());
  CHECK(none.error_doc["error"]["type"] == "usage");
  CHECK(none.error_doc["error"]["exit_code"] == 2);

  CHECK(run({"formula", "hurwitz", "--n", "5", "--bogus"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);

  // post-parse validation uses the same exit code
  CliResult missing = run({"formula", "hurwitz"});
  CHECK(missing.code == 2);
  CHECK(missing.error_doc["error"]["type"] == "usage");
  CHECK(run({"toric"}).code == 2);
  CHECK(run({"toric", "--cube", "2", "--segment", "3"}).code == 2);
  CHECK(run({"solve", "--curve", "x^2+y^2-1", "--param", "x;y"}).code == 2);
}

TEST_CASE("domain errors exit 3") {
  CliResult bad_model = run({"aed", "--model", "circle"});
  CHECK(bad_model.code == 3);
  CHECK(bad_model.error_doc["error"]["type"] == "domain");

  CHECK(run({"table", "bogus"}).code == 3);
  CHECK(run({"formula", "hurwitz", "--n", "2"}).code == 3);
  CHECK(run({"toric", "--cube", "5"}).code == 3);
}

TEST_CASE("degenerate explicit data exits 4") {
  CliResult center = run({"solve", "--curve", "x^2+y^2-1", "--data", "0,0"});
  CHECK(center.code == 4);
  CHECK(center.out.empty());
  CHECK(center.error_doc["error"]["type"] == "retry");
  CHECK(center.error_doc["error"]["exit_code"] == 4);
}

TEST_CASE("help exits 0") {
  CliResult top = run({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("formula") != std::string::npos);
  CHECK(top.out.find("aed") != std::string::npos);

  CliResult sub = run({"solve", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--curve") != std::string::npos);
}

TEST_CASE("formula subcommand") {
  CliResult h = run({"formula", "hurwitz", "--n", "5"});
  REQUIRE(h.code == 0);
  CHECK(h.doc["result"]["ed_degree"] == 13);
  CHECK(h.doc["command"]["subcommand"] == "formula");
  CHECK(h.doc["version"].is_string());

  CHECK(run({"formula", "hurwitz", "--n", "5", "--homogeneous"}).doc["result"]["ed_degree"] == 6);
  CHECK(run({"formula", "cayley_menger", "--p", "4"}).doc["result"]["ed_degree"] == 13);
  CHECK(run({"formula", "generic_ci", "--n", "3", "--degrees", "5", "--projective"})
            .doc["result"]["ed_degree"] == 25);
  CHECK(run({"formula", "veronese", "--m", "2", "--d", "2"}).doc["result"]["ed_degree"] == 13);
  CHECK(run({"formula", "discriminant", "--kind", "plane_curve", "--d", "4"})
            .doc["result"]["ed_degree"] == 36);
  CHECK(run({"formula", "eckart_young", "--s", "4", "--t", "6", "--r", "2"})
            .doc["result"]["ed_degree"] == 6);
}

TEST_CASE("toric subcommand") {
  CliResult cube = run({"toric", "--cube", "3"});
  REQUIRE(cube.code == 0);
  CHECK(cube.doc["result"]["ed_degree"] == 34);
  CHECK(cube.doc["result"]["f_vector"] == json::array({8, 12, 6, 1}));
  CHECK(cube.doc["result"]["dim"] == 3);

  CHECK(run({"toric", "--segment", "5"}).doc["result"]["ed_degree"] == 13);
  CHECK(run({"toric", "--simplex", "4"}).doc["result"]["ed_degree"] == 1);
  CHECK(run({"toric", "--simplex-product", "2,2"}).doc["result"]["ed_degree"] == 39);
  CHECK(run({"toric", "--simplex", "2", "--dilate", "2"}).doc["result"]["ed_degree"] == 13);
}

TEST_CASE("segre subcommand") {
  CHECK(run({"segre", "--dims", "2,2,2"}).doc["result"]["ed_degree"] == 6);
  CHECK(run({"segre", "--dims", "3,4"}).doc["result"]["ed_degree"] == 3);
  CHECK(run({"segre", "--dims", "2,3", "--weights", "3,2"}).doc["result"]["ed_degree"] == 27);
  CHECK(run({"segre", "--dims", "2,3", "--weights", "1"}).code == 2);
  CHECK(run({"segre", "--dims", "2,3", "--weights", "3"}).code == 3);
}

TEST_CASE("solve subcommand on the cuspidal quartic") {
  CliResult r = run({"solve", "--curve", "x^4+2*x^2*y^2+y^4+2*x^3+2*x*y^2-y^2",
                     "--singular", "0,0", "--seed", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["complex_count"] == 3);
  CHECK(r.doc["result"]["points"].size() == r.doc["result"]["complex_count"].get<size_t>());
  CHECK(r.doc["result"]["data"].size() == 2);
  CHECK(r.doc["diagnostics"]["attempts"].get<int>() >= 1);
  CHECK(r.doc["diagnostics"]["data_source"] == "drawn");

  // explicit rational data reproduces the known count, exactly
  CliResult e = run({"solve", "--curve", "x^4+2*x^2*y^2+y^4+2*x^3+2*x*y^2-y^2",
                     "--singular", "0,0", "--data", "1/4,1/3", "--count-only"});
  REQUIRE(e.code == 0);
  CHECK(e.doc["result"]["complex_count"] == 3);
  CHECK(e.doc["result"]["real_count"] == 3);
  CHECK(!e.doc["result"].contains("points"));
  CHECK(e.doc["diagnostics"]["data_source"] == "provided");
}

TEST_CASE("solve subcommand closure comparison") {
  CliResult r = run({"solve", "--curve", "x^2+y^2-2*x-4*y+4", "--closure",
                     "--data", "5/7,3/11", "--count-only"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["affine"]["complex_count"] == 2);
  CHECK(r.doc["result"]["closure"]["complex_count"] == 4);
  CHECK(r.doc["result"]["lemma_checked"] == true);
  CHECK(r.doc["result"]["lemma_residual"].get<double>() <= 1e-8);
}

TEST_CASE("solve subcommand with a parametrization") {
  CliResult r = run({"solve", "--param", "x^3;x^2*y;x*y^2;y^3", "--map-degree", "3",
                     "--data", "1/2,1/3,1/5,1/7", "--count-only"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["complex_count"] == 7);

  CliResult w = run({"solve", "--param", "x^3;x^2*y;x*y^2;y^3", "--map-degree", "3",
                     "--weights", "1,3,3,1", "--data", "1/2,1/3,1/5,1/7", "--count-only"});
  REQUIRE(w.code == 0);
  CHECK(w.doc["result"]["complex_count"] == 3);
}

TEST_CASE("hurwitz subcommand agrees with its formula") {
  for (int n = 3; n <= 5; ++n) {
    CliResult a = run({"hurwitz", "--n", std::to_string(n), "--seed", "2"});
    REQUIRE(a.code == 0);
    CHECK(a.doc["result"]["agree"] == true);
    CHECK(a.doc["result"]["count"] == a.doc["result"]["formula"]);
    CliResult h = run({"hurwitz", "--n", std::to_string(n), "--homogeneous", "--seed", "2"});
    REQUIRE(h.code == 0);
    CHECK(h.doc["result"]["agree"] == true);
  }
}

TEST_CASE("matrix subcommand") {
  const char* path = "cli_matrix_fixture.txt";
  {
    std::ofstream f(path);
    f << "3 1\n1 2\n";
  }
  CliResult r = run({"matrix", "--file", path, "--rank", "1", "--check-duality"});
  std::remove(path);
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["critical_count"] == 2);
  REQUIRE(r.doc["result"]["critical"].size() == 2);
  double d0 = r.doc["result"]["critical"][0]["distance"].get<double>();
  double d1 = r.doc["result"]["critical"][1]["distance"].get<double>();
  CHECK(d0 <= d1);
  CHECK(r.doc["result"]["duality"]["order_reversed"] == true);
  CHECK(r.doc["result"]["duality"]["max_inner_residual"].get<double>() <= 1e-9);
  CHECK(r.doc["result"]["duality"]["max_pythagoras_residual"].get<double>() <= 1e-9);

  CHECK(run({"matrix", "--file", "no_such_file.txt", "--rank", "1"}).code == 3);
}

TEST_CASE("aed subcommand output is worker-count independent") {
  std::vector<std::string> base = {"aed", "--model", "ellipse", "--samples", "500",
                                   "--seed", "3"};
  CliResult one = run(base);
  std::vector<std::string> four = base;
  four.push_back("--workers");
  four.push_back("4");
  CliResult quad = run(four);

  REQUIRE(one.code == 0);
  REQUIRE(quad.code == 0);
  CHECK(one.out == quad.out);  // bit-identical document

  CHECK(one.doc["result"]["samples"] == 500);
  CHECK(one.doc["result"]["seed"] == 3);
  CHECK(one.doc["diagnostics"]["dyadic_bits"] == 40);
  for (const auto& [key, freq] : one.doc["result"]["histogram"].items()) {
    CHECK((key == "2" || key == "4"));
    CHECK(freq.get<long long>() > 0);
  }
  double mean = one.doc["result"]["mean"].get<double>();
  CHECK(mean >= 2.0);
  CHECK(mean <= 4.0);
}

TEST_CASE("aed quadrature mode") {
  CliResult q = run({"aed", "--model", "ellipse", "--quadrature"});
  REQUIRE(q.code == 0);
  CHECK(q.doc["result"]["method"] == "quadrature");
  CHECK(std::abs(q.doc["result"]["value"].get<double>() - 3.046578) <= 1e-3);

  CHECK(run({"aed", "--model", "cardioid", "--quadrature"}).code == 2);
}

TEST_CASE("seed resolution prefers the flag over the environment") {
  setenv("EDDEG_SEED", "7", 1);
  CliResult env = run({"aed", "--model", "matrix:2,2,1", "--samples", "100"});
  REQUIRE(env.code == 0);
  CHECK(env.doc["command"]["seed"] == 7);
  CHECK(env.doc["result"]["seed"] == 7);

  CliResult flag = run({"aed", "--model", "matrix:2,2,1", "--samples", "100", "--seed", "2"});
  REQUIRE(flag.code == 0);
  CHECK(flag.doc["command"]["seed"] == 2);

  setenv("EDDEG_SEED", "x7", 1);
  CHECK(run({"aed", "--model", "matrix:2,2,1", "--samples", "100"}).code == 2);
  unsetenv("EDDEG_SEED");
}

TEST_CASE("progress goes to standard error only") {
  CliResult r = run({"--progress", "toric", "--cube", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["ed_degree"] == 34);  // stdout still pure JSON
  CHECK(r.err.find("toric started") != std::string::npos);
  CHECK(r.err.find("finished in") != std::string::npos);

  CliResult quiet = run({"toric", "--cube", "3"});
  CHECK(quiet.err.empty());
}

TEST_CASE("reference tables are served, not recomputed") {
  CliResult list = run({"table"});
  REQUIRE(list.code == 0);
  CHECK(list.doc["result"]["source"] == "reference");
  CHECK(list.doc["result"]["available"].size() == 5);

  CliResult mv = run({"table", "multiview"});
  REQUIRE(mv.code == 0);
  CHECK(mv.doc["result"]["source"] == "reference");
  CHECK(mv.doc["result"]["rows"][0] == json::array({"2", "6"}));
  CHECK(mv.doc["result"]["columns"].size() == 2);

  // every advertised name resolves
  for (const auto& name : list.doc["result"]["available"]) {
    CliResult t = run({"table", name.get<std::string>()});
    CHECK(t.code == 0);
    CHECK(t.doc["result"]["rows"].size() > 0);
  }
}

TEST_CASE("documents are stable across repeated invocations") {
  std::vector<std::string> cmd = {"solve", "--curve", "x^2+4*y^2-4", "--seed", "11"};
  CliResult a = run(cmd);
  CliResult b = run(cmd);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}
