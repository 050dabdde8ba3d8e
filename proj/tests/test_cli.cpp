#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ualg/cli.hpp"

using namespace ualg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json machine(const Run& r) {
  const auto pos = r.out.find("--- machine ---\n");
  REQUIRE(pos != std::string::npos);
  return nlohmann::json::parse(r.out.substr(pos + 16));
}

std::string fixture(const std::string& name) { return std::string(UALG_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("con lists Con(Z4) from a file") {
  const auto r = run({"con", "--alg", fixture("z4.alg")});
  CHECK(r.code == exit_ok);
  CHECK(machine(r)["congruences"].size() == 3);
  CHECK(machine(r)["status"] == 0);
}

TEST_CASE("con writes a DOT file") {
  const std::string path = "ualg_test_klein.dot";
  const auto r = run({"con", "--alg", "klein4", "--dot", path});
  CHECK(r.code == exit_ok);
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(text.str().find("digraph") == 0);
  std::remove(path.c_str());
}

TEST_CASE("query verbs") {
  const auto comm = run({"comm", "--alg", "d4", "--alpha", "1", "--beta", "1"});
  CHECK(comm.code == exit_ok);
  CHECK(machine(comm)["commutator"] == "0,2|1,3|4,6|5,7");

  const auto center = run({"center", "--alg", "s3"});
  CHECK(machine(center)["centerless"] == true);

  const auto dense = run({"dense", "--alg", "z6", "--theta", "0,2,4|1,3,5"});
  CHECK(dense.code == exit_ok);
  CHECK(machine(dense)["dense"] == false);

  CHECK(run({"fsi", "--alg", "z6"}).code == exit_ok);
  CHECK(run({"si", "--alg", "z4"}).code == exit_ok);
  CHECK(machine(run({"decompose", "--alg", "z6"}))["factors"].size() == 2);
  CHECK(machine(run({"split", "--alg", "d4"}))["outcome"] == "hypothesis failure");
  CHECK(machine(run({"ufp", "--alg", "klein4"}))["unique"] == true);
  CHECK(run({"oracle", "--alg", "q8"}).code == exit_ok);
  CHECK(run({"show", "--alg", "z4"}).out.find("op mul 2") != std::string::npos);
}

TEST_CASE("cube on D4 reports a proper essential extension") {
  const auto r = run({"cube", "--alg", fixture("d4.alg"), "--term", "group_d"});
  CHECK(r.code == exit_ok);
  const auto m = machine(r);
  CHECK(m["proper"] == true);
  CHECK(m["essential"] == true);
}

TEST_CASE("verify a single check") {
  const auto r = run({"verify", "--check", "lemma21"});
  CHECK(r.code == exit_ok);
  CHECK(machine(r)["failed"] == 0);
}

TEST_CASE("usage and refusal exit with 2") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"con"}).code == exit_usage);
  CHECK(run({"con", "--alg", "no_such_algebra"}).code == exit_usage);
  CHECK(run({"con", "--alg", fixture("bad_range.alg")}).code == exit_usage);
  CHECK(run({"comm", "--alg", "set4", "--alpha", "1", "--beta", "1"}).code == exit_usage);
  CHECK(run({"comm", "--alg", "z4", "--alpha", "0,1", "--beta", "1"}).code == exit_usage);
  CHECK(run({"con", "--alg", "z8", "--max-size", "4"}).code == exit_usage);
  CHECK(run({"con", "--alg", "z4", "--max-size", "0"}).code == exit_usage);
  CHECK(run({"verify", "--check", "no_such_check"}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("theorem verbs need a difference term") {
  CHECK(run({"decompose", "--alg", "set3"}).code == exit_usage);
  CHECK(run({"split", "--alg", "set3", "--term", "x"}).code == exit_usage);
  CHECK(run({"cube", "--alg", "s3", "--term", "proj_d"}).code == exit_usage);
  CHECK(run({"decompose", "--alg", fixture("z6.alg")}).code == exit_ok);
  CHECK(run({"decompose", "--alg", "chain3", "--term", "proj_d"}).code == exit_ok);
}

TEST_CASE("size limit from the flag stops the cube") {
  const auto r = run({"cube", "--alg", "d4", "--max-size", "100"});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("size limit") != std::string::npos);
}

TEST_CASE("global options work before or after the verb") {
  const auto a = run({"--alg", "z4", "con"});
  const auto b = run({"con", "--alg", "z4"});
  CHECK(a.code == exit_ok);
  CHECK(a.out == b.out);
}

TEST_CASE("a falsified algebra file is still a valid input") {
  const auto r = run({"con", "--alg", fixture("nonhom_copy.alg")});
  CHECK(r.code == exit_ok);
}
