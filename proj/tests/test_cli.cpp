#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "subshift/cli.hpp"
#include "subshift/io.hpp"

using namespace subshift;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("lang reports factors and complexity") {
  auto r = run({"lang", "--preset", "fibonacci", "--max-len", "3"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["source"] == "sub{ab;a>ab;b>a}");
  CHECK(j["kind"] == "substitutive");
  CHECK(j["config"].get<std::string>().size() == 16);
  CHECK(j["factors"]["3"] == Json::array({"aab", "aba", "baa", "bab"}));
  CHECK(j["complexity"] == Json::array({{1, 2}, {2, 3}, {3, 4}}));
}

TEST_CASE("outputs are byte-identical across runs") {
  auto a = run({"lang", "--preset", "tribonacci", "--max-len", "4"});
  auto b = run({"lang", "--preset", "tribonacci", "--max-len", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  auto c = run({"rauzy", "--preset", "fibonacci", "--n", "2", "--dot"});
  auto d = run({"rauzy", "--preset", "fibonacci", "--n", "2", "--dot"});
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("rauzy graph artifacts") {
  auto dot = run({"rauzy", "--preset", "fibonacci", "--n", "2", "--dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.find("// config ") == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(count_occurrences(dot.out, "->") == 4);
  CHECK(dot.out.find("aab / a") != std::string::npos);

  auto json = run({"rauzy", "--preset", "fibonacci", "--n", "2"});
  REQUIRE(json.code == 0);
  auto j = Json::parse(json.out);
  CHECK(j["order"] == 2);
  CHECK(j["vertex_count"] == 3);
  CHECK(j["edge_count"] == 4);
  CHECK(j["vertices"] == Json::array({"aa", "ab", "ba"}));
  CHECK(j["edges"][0]["word"] == "aab");
  CHECK(j["edges"][0]["central"] == "a");

  auto multi = run({"rauzy", "--preset", "fibonacci", "--n-range", "1..3"});
  REQUIRE(multi.code == 0);
  auto jm = Json::parse(multi.out);
  REQUIRE(jm["graphs"].size() == 3);
  CHECK(jm["graphs"][0]["order"] == 1);
  CHECK(jm["graphs"][2]["order"] == 3);

  auto csv = run({"rauzy", "--preset", "fibonacci", "--n", "1", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("order,word,source,target,central") != std::string::npos);
  CHECK(csv.out.find("1,aa,a,a,") != std::string::npos);
}

TEST_CASE("explicit horizons are honored or refused") {
  auto ok = run({"rauzy", "--preset", "fibonacci", "--n", "2", "--horizon", "8"});
  CHECK(ok.code == 0);

  auto low = run({"rauzy", "--preset", "fibonacci", "--n", "6", "--horizon", "4"});
  CHECK(low.code == 2);
  CHECK(low.err.find("below the 7") != std::string::npos);
}

TEST_CASE("return-word artifacts") {
  auto r = run({"returns", "--preset", "fibonacci", "--u1", "a", "--u2", "b"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["mode"] == "delayed");
  CHECK(j["u1"] == "a");
  CHECK(j["u2"] == "b");
  CHECK(j["words"] == Json::array({"ba", "baa"}));
  CHECK(j["complete"] == true);
  CHECK(j["code"]["is_code"] == true);
  CHECK(j["code"]["circular_unambiguous"] == true);

  auto plain = run({"returns", "--preset", "fibonacci", "--u", "aa"});
  REQUIRE(plain.code == 0);
  CHECK(Json::parse(plain.out)["words"] == Json::array({"aab", "aabab"}));

  auto window = run({"returns", "--preset", "fibonacci", "--n", "2"});
  REQUIRE(window.code == 0);
  CHECK(Json::parse(window.out)["words"] == Json::array({"aab", "aabab"}));

  auto profile =
      run({"returns", "--preset", "fibonacci", "--profile", "1..4", "--format", "csv"});
  REQUIRE(profile.code == 0);
  CHECK(profile.out.find("n,min_length\n1,2\n2,3\n3,3\n4,5\n") != std::string::npos);
}

TEST_CASE("returns mode selection is strict") {
  CHECK(run({"returns", "--preset", "fibonacci"}).code == 2);
  CHECK(run({"returns", "--preset", "fibonacci", "--u", "a", "--n", "2"}).code == 2);
  CHECK(run({"returns", "--preset", "fibonacci", "--u1", "a"}).code == 2);
  // an unstabilized scan is a computation error, not bad input
  CHECK(run({"returns", "--preset", "fibonacci", "--u", "aa", "--scan-budget", "10"}).code == 1);
}

TEST_CASE("tree scans and their verdicts") {
  auto tm = run({"tree", "--preset", "thue-morse", "--max-center", "2"});
  REQUIRE(tm.code == 0);  // a failed condition is still a successful scan
  auto j = Json::parse(tm.out);
  CHECK(j["verdict"] == "fail");
  CHECK(j["witness"] == "");
  CHECK(j["reason"] == "has-cycle");

  auto fib = run({"tree", "--preset", "fibonacci", "--max-center", "6"});
  REQUIRE(fib.code == 0);
  auto jf = Json::parse(fib.out);
  CHECK(jf["verdict"] == "pass-up-to-horizon");
  CHECK(jf["centers_checked"] == Json::array({1, 2, 3, 4, 5, 6, 7}));

  auto dot = run({"tree", "--preset", "thue-morse", "--max-center", "2", "--dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.find("graph extensions") != std::string::npos);
}

TEST_CASE("fundamental-group artifacts") {
  auto r = run({"fg", "--preset", "fibonacci", "--n-range", "1..2"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j["levels"].size() == 2);
  CHECK(j["levels"][0]["n"] == 1);
  CHECK(j["levels"][0]["order"] == 2);
  CHECK(j["levels"][0]["base"] == "ba");
  CHECK(j["levels"][0]["rank"] == 2);
  CHECK(j["levels"][1]["base"] == "abaa");
  CHECK(j["levels"][1]["rank"] == 2);
  REQUIRE(j["maps"].size() == 1);
  CHECK(j["maps"][0]["from_n"] == 2);
  CHECK(j["maps"][0]["to_n"] == 1);
  CHECK(j["maps"][0]["images"].size() == 2);
  CHECK(j["maps"][0]["abelianization"].size() == 2);
  CHECK(j["maps"][0].contains("det_abs"));
  CHECK(j["rank_profile"] == Json::array({{1, 2}, {2, 2}}));

  auto dot = run({"fg", "--preset", "fibonacci", "--n", "1", "--dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.find("digraph spanning_tree_order2") != std::string::npos);
  CHECK(dot.out.find("penwidth=2") != std::string::npos);
}

TEST_CASE("artifact files land in the output directory") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "subshift-cli-test";
  fs::remove_all(dir);
  auto streamed = run({"rauzy", "--preset", "fibonacci", "--n", "2", "--dot"});
  auto filed = run({"rauzy", "--preset", "fibonacci", "--n", "2", "--dot", "--out", dir.string()});
  REQUIRE(filed.code == 0);
  auto path = dir / "rauzy-2.dot";
  CHECK(filed.out == path.string() + "\n");
  CHECK(read_file(path.string()) == streamed.out);
  fs::remove_all(dir);
}

TEST_CASE("source selection rules") {
  CHECK(run({"lang"}).code == 2);
  CHECK(run({"lang", "--preset", "fibonacci", "--periodic", "ab"}).code == 2);
  CHECK(run({"lang", "--preset", "nope"}).code == 2);
  CHECK(run({"lang", "--sub", "/nonexistent/missing.json"}).code == 2);

  auto periodic = run({"lang", "--periodic", "ab", "--max-len", "2"});
  REQUIRE(periodic.code == 0);
  CHECK(Json::parse(periodic.out)["kind"] == "periodic");
}

TEST_CASE("bad substitution files are input errors") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "subshift-cli-sub";
  fs::create_directories(dir);
  auto path = (dir / "nonprimitive.json").string();
  write_file(path, R"({"alphabet": "ab", "rules": {"a": "ab", "b": "b"}})");
  auto r = run({"lang", "--sub", path});
  CHECK(r.code == 2);
  fs::remove_all(dir);
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run({}).code == 2);                       // a subcommand is required
  CHECK(run({"frobnicate"}).code == 2);           // unknown subcommand
  CHECK(run({"lang", "--bogus"}).code == 2);      // unknown flag
  CHECK(run({"rauzy", "--preset", "fibonacci", "--n", "x..y"}).code == 2);
  CHECK(run({"rauzy", "--preset", "fibonacci", "--n", "3..1"}).code == 2);
  CHECK(run({"rauzy", "--preset", "fibonacci", "--n", "0"}).code == 2);
  CHECK(run({"lang", "--preset", "fibonacci", "--format", "yaml"}).code == 2);
  CHECK(run({"lang", "--preset", "fibonacci", "--dot"}).code == 2);  // lang has no DOT form
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK((r.out + r.err).find("subshift") != std::string::npos);
}

TEST_CASE("verify runs the suite for one preset") {
  auto bad = run({"verify", "nope"});
  CHECK(bad.code == 2);

  auto r = run({"verify", "periodic-ab"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["preset"] == "periodic-ab");
  CHECK(j["seed"] == 1);
  CHECK(j["criteria"].size() == 10);
  CHECK(j["all_pass"] == true);
  for (const auto& c : j["criteria"]) {
    CHECK(c["pass"] == true);  // non-applicable criteria count as vacuous passes
  }
}
