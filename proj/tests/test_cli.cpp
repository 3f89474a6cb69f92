#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ordlim/cli.hpp"
#include "ordlim/json_io.hpp"
#include "ordlim/rng.hpp"
#include "ordlim/samplers.hpp"

using namespace ordlim;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_test_") + name + ".json";
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("every operation is reachable from exactly one subcommand") {
  std::map<std::string, int> seen;
  for (const SubcommandSpec& sub : cli_dispatch_table())
    for (const char* op : sub.covers) ++seen[op];
  std::set<std::string> expected;
  for (const std::string& op : all_operation_names()) expected.insert(op);
  for (const auto& [op, count] : seen) {
    CHECK_MESSAGE(expected.count(op) == 1, "unknown operation in table: ", op);
    CHECK_MESSAGE(count == 1, "operation covered more than once: ", op);
  }
  for (const std::string& op : expected)
    CHECK_MESSAGE(seen.count(op) == 1, "operation not reachable: ", op);
}

TEST_CASE("level 1 JSON output lists the two strict pairs") {
  RunResult r = run({"level", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["elements"] == Json({"0", "1", "2", "3"}));
  CHECK(j["le"] == Json({{0, 1}, {2, 3}}));
}

TEST_CASE("same seed and flags give byte-identical output") {
  std::vector<std::string> args{"verify-square", "2", "--samples", "200", "--seed", "99"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  RunResult c = run({"level", "2", "--format", "json"});
  RunResult d = run({"level", "2", "--format", "json"});
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes: usage 2, parse 3") {
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"level"}).code == 2);
  CHECK(run({"level", "9"}).code == 2);  // outside default depth bound

  std::string bad = write_temp("bad", "{ not json");
  CHECK(run({"ideals", bad}).code == 3);
  CHECK(run({"ideals", "does_not_exist.json"}).code == 3);
}

TEST_CASE("validate reports axioms through the CLI") {
  std::string ok = write_temp("chain", R"({"elements": ["a", "b"], "le": [[0, 1]]})");
  RunResult r = run({"validate", ok});
  CHECK(r.code == 0);
  CHECK(r.out == "ok\n");

  std::string anti = write_temp("anti", R"({"elements": ["a", "b"], "le": [[0, 1], [1, 0]]})");
  r = run({"validate", anti});
  CHECK(r.code == 0);
  CHECK(r.out.find("antisymmetry") != std::string::npos);
}

TEST_CASE("classify and sticks round through JSON files") {
  std::string map = write_temp("map", R"({
    "domain": {"elements": ["a", "b"], "le": []},
    "codomain": {"elements": ["x"], "le": []},
    "assignment": [0, 0]
  })");
  RunResult r = run({"classify", map});
  CHECK(r.code == 0);
  CHECK(r.out.find("quotient: yes") != std::string::npos);

  std::string chain3 = write_temp("c3", R"({"elements": ["1", "2", "3"], "le": [[0,1],[1,2],[0,2]]})");
  r = run({"sticks", chain3});
  CHECK(r.code == 0);
  CHECK(r.out.find("components: 3") != std::string::npos);
}

TEST_CASE("verify-square succeeds at n=1") {
  RunResult r = run({"verify-square", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mismatches: 0") != std::string::npos);
}

TEST_CASE("poset and ternary JSON round-trips are exact") {
  Rng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    PosetPtr p = random_poset(rng, rng.range(1, 7), 40);
    PosetPtr back = poset_from_json(poset_to_json(*p));
    CHECK(back->equals(*p));
  }
  ComponentIndex t(3);
  for (int trial = 0; trial < 25; ++trial) {
    TernaryFunction f = ternary_zero(3);
    for (auto& v : f.values) v = static_cast<std::uint8_t>(rng.below(3));
    CHECK(ternary_from_json(ternary_to_json(f)) == f);
  }
}

TEST_CASE("ideal thread commands work end to end") {
  std::string a = write_temp("ta", R"({"coords": [[0], [0, 1]]})");
  std::string b = write_temp("tb", R"({"coords": [[0, 2], [0, 2, 8]]})");
  RunResult r = run({"ideal-sup", a, b});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["coords"][0] == Json({0, 2}));

  r = run({"ideal-inf", a, b});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["coords"][1] == Json({0}));
}
