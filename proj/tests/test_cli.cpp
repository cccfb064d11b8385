#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "posetgames");
  std::ostringstream out, err;
  const int code = pgames::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("compare") {
  auto r = run({"compare", "G(0)", "G(1)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "G <= H: true"));
  CHECK(contains(r.out, "verdict: <"));

  r = run({"compare", "star", "-2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: incomparable"));

  r = run({"--json", "compare", "{0,-3|-2}", "{0|-2}"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "equivalent");
  CHECK(j["g"] == "{0,-3|-2}");
}

TEST_CASE("usage and parse errors exit with 2") {
  auto r = run({"compare", "{|0}", "0"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "1:2"));
  CHECK(contains(r.err, "empty left option set"));

  r = run({"parse", "{0|9}"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "unknown atom label 9"));

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"compare", "0"}).code == 2);
  CHECK(run({"--poset", "X5", "parse", "0"}).code == 2);
  CHECK(run({"--poset", "L3", "parse", "star"}).code == 2);
  CHECK(run({"enumerate", "--max-rounds", "abc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--n-max", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "0 failed"));

  r = run({"verify", "--n-max", "3", "--negate-expectations"});
  CHECK(r.code == 1);

  r = run({"--json", "verify", "--n-max", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("claim"));
    CHECK(j["ok"] != false);
    ++rows;
  }
  CHECK(rows == 8 * 3 + 4 * 3);
}

TEST_CASE("np") {
  auto r = run({"np", "0", "star"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "G <= H: false"));
  CHECK(contains(r.out, "np(G) <= np(H): false"));
  CHECK(contains(r.out, "agree: true"));
  CHECK(contains(r.err, "different mean values"));

  r = run({"--json", "np", "G(1)", "G(2)"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["leq"] == true);
  CHECK(j["np_leq"] == true);
  CHECK(j["mean_g"] == 0);
}

TEST_CASE("parse") {
  auto r = run({"parse", "G(1)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "{1|{0|{-1|-3}}}"));
  CHECK(contains(r.out, "mean value: 0"));
  CHECK(contains(r.out, "monotone: true"));

  r = run({"--json", "parse", "{1|1}"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mean"].is_null());
  CHECK(j["positions"] == 2);
}

TEST_CASE("enumerate") {
  auto r = run({"--poset", "L2", "--json", "enumerate"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(POSETGAMES_GOLDEN_DIR "/enumerate_L2.json"));

  r = run({"--poset", "L4", "enumerate"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "final: 31 values, saturated"));

  // Out of budget before saturation on a chain with finitely many values.
  r = run({"--poset", "L4", "enumerate", "--max-rounds", "2"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "max_rounds"));

  // Longer chains are explored up to the budget.
  r = run({"--poset", "L5", "enumerate", "--max-rounds", "1", "--domination-trials", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "final: 15 values, not saturated"));
}
