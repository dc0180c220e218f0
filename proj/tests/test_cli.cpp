#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "polyform/cli.hpp"

namespace {
struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = polyform::run_command(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("dual command on the worked examples") {
  auto r = run({"dual", "--n", "2", "--form", "y*dy"});
  CHECK(r.code == 0);
  CHECK(r.out == "x*y^2*dz - y^2*z*dx\n");

  auto r2 = run({"dual", "--n", "2", "--form", "x*dy - y*dx", "--flavor", "Pminus"});
  CHECK(r2.code == 0);
  CHECK(r2.out == "x*y*dz\n");

  auto r3 = run({"dual", "--n", "2", "--form", "x*y^2*dz - y^2*z*dx", "--inverse"});
  CHECK(r3.code == 0);
  CHECK(r3.out == "y*dy\n");

  auto r4 = run({"dual", "--n", "2", "--form", "x*y*dz", "--inverse"});
  CHECK(r4.code == 0);
  CHECK(r4.out == "x*dy - y*dx\n");
}

TEST_CASE("dual json document") {
  auto r = run({"dual", "--n", "2", "--form", "y*dy", "--json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["command"] == "dual");
  CHECK(doc["parameters"]["n"] == 2);
  CHECK(doc["parameters"]["inverse"] == false);
  REQUIRE(doc["result"].is_array());
  CHECK(doc["result"].size() == 2);
  CHECK(doc["result"][0]["indices"] == nlohmann::json::array({1}));
  CHECK(doc["result"][0]["coeff"][0]["num"] == "-1");

  // Byte-identical across runs.
  auto again = run({"dual", "--n", "2", "--form", "y*dy", "--json"});
  CHECK(again.out == r.out);
}

TEST_CASE("basis command") {
  auto r = run({"basis", "--n", "2", "--r", "1", "--k", "1", "--flavor", "P",
                "--context", "simplex"});
  REQUIRE(r.code == 0);
  CHECK(r.out.substr(0, 6) == "dim 6\n");
  // One representative per line after the header.
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 7);

  auto rm = run({"basis", "--n", "2", "--r", "1", "--k", "1", "--flavor",
                 "Pminus", "--context", "simplex"});
  CHECK(rm.out.substr(0, 6) == "dim 3\n");

  auto rj = run({"basis", "--n", "1", "--r", "1", "--k", "1", "--flavor",
                 "Pminus", "--context", "ambient", "--json"});
  REQUIRE(rj.code == 0);
  auto doc = nlohmann::json::parse(rj.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["command"] == "basis");
  CHECK(doc["dim"] == 1);
  REQUIRE(doc["elements"].size() == 1);
  // u1 du2 - u2 du1, serialized in index-set order.
  CHECK(doc["elements"][0][0]["indices"] == nlohmann::json::array({1}));
  CHECK(doc["elements"][0][0]["coeff"][0]["num"] == "-1");

  // Sphere-only and simplex-only flavors are rejected as usage errors.
  auto bad = run({"basis", "--n", "2", "--r", "1", "--k", "1", "--flavor",
                  "ring_P", "--context", "sphere"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
}

TEST_CASE("dims command") {
  auto r = run({"dims", "--n", "1", "--rmax", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("discrepancies: 0\n") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  auto rj = run({"dims", "--n", "1", "--rmax", "1", "--json"});
  REQUIRE(rj.code == 0);
  auto doc = nlohmann::json::parse(rj.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["clean"] == true);
  REQUIRE(doc["rows"].is_array());
  bool found = false;
  for (const auto& row : doc["rows"])
    if (row["flavor"] == "P" && row["context"] == "simplex" && row["r"] == 1 &&
        row["k"] == 1) {
      CHECK(row["dim"] == 2);
      CHECK(row["formula"] == 2);
      CHECK(row["oracle"] == 2);
      CHECK(row["clean"] == true);
      found = true;
    }
  CHECK(found);
  // Flavors without a closed-form dimension serialize the formula as null.
  bool saw_null = false;
  for (const auto& row : doc["rows"])
    if (row["formula"].is_null()) saw_null = true;
  CHECK(saw_null);
}

TEST_CASE("gram command") {
  auto r = run({"gram", "--n", "2", "--r", "1", "--k", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("positive_definite: true\n") != std::string::npos);
  CHECK(r.out.substr(0, 6) == "dim 6\n");

  auto rj = run({"gram", "--n", "2", "--r", "1", "--k", "1", "--flavor",
                 "Pminus", "--json"});
  REQUIRE(rj.code == 0);
  auto doc = nlohmann::json::parse(rj.out);
  CHECK(doc["positive_definite"] == true);
  REQUIRE(doc["entries"].size() == 3);
  // Entries are exact rational strings, the diagonal frozen.
  CHECK(doc["entries"][0][0] == "1/30");
  CHECK(doc["entries"][1][1] == "1/30");
  CHECK(doc["entries"][0][1] == "1/120");
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--suite", "parity", "--n", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "pass  parity-laws  n=1 trials=100 seed=2026\n1 checks, 0 failures\n");

  auto rj = run({"verify", "--suite", "examples", "--n", "1", "--json"});
  REQUIRE(rj.code == 0);
  auto doc = nlohmann::json::parse(rj.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["all_pass"] == true);
  // The document carries no timing and no floating point numbers.
  CHECK(rj.out.find("seconds") == std::string::npos);
  for (const auto& rep : doc["reports"]) {
    CHECK(rep["verdict"] == "pass");
    CHECK(rep.find("seconds") == rep.end());
  }

  // Byte-identical documents across runs.
  auto again = run({"verify", "--suite", "examples", "--n", "1", "--json"});
  CHECK(again.out == rj.out);
}

TEST_CASE("exit codes follow the contract") {
  // 0: success, including help.
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"dual", "--help"}).code == 0);

  // 2: usage and input errors.
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dual", "--n", "2"}).code == 2);
  CHECK(run({"dual", "--n", "99", "--form", "y*dy"}).code == 2);
  CHECK(run({"dual", "--n", "2", "--form", "y*dy + "}).code == 2);
  CHECK(run({"dual", "--n", "2", "--form", "u*dv"}).code == 2);
  CHECK(run({"dual", "--n", "2", "--form", "x*du"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus", "--n", "1"}).code == 2);
  CHECK(run({"basis", "--n", "2", "--r", "1", "--k", "9", "--flavor", "P",
             "--context", "simplex"}).code == 2);

  // Errors land on stderr, never stdout.
  auto bad = run({"dual", "--n", "2", "--form", "x*(y+"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(!bad.err.empty());
  CHECK(bad.err.find("position 6") != std::string::npos);
}

TEST_CASE("dual rejects u-coordinate input") {
  auto r = run({"dual", "--n", "2", "--form", "2*u^2*v*dv - 2*u*v^2*du"});
  CHECK(r.code == 2);
  CHECK(r.err.find("x-coordinates") != std::string::npos);
}
