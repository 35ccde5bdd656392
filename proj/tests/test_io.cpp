#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "subshift/error.hpp"
#include "subshift/io.hpp"
#include "subshift/presets.hpp"

using namespace subshift;

TEST_CASE("parsing substitutive sources") {
  auto spec = parse_source_json(R"({"alphabet": "ab", "rules": {"a": "ab", "b": "a"}})");
  CHECK(spec.kind == SourceKind::Substitutive);
  CHECK(spec.alphabet == "ab");
  REQUIRE(spec.rules.size() == 2);
  CHECK(spec.rules[0] == std::pair<char, Word>{'a', "ab"});
  CHECK(spec.rules[1] == std::pair<char, Word>{'b', "a"});

  // rule order in the file does not matter; declaration order wins
  auto swapped = parse_source_json(R"({"alphabet": "ba", "rules": {"a": "b", "b": "ab"}})");
  CHECK(swapped.rules[0].first == 'b');
  CHECK(swapped.rules[1].first == 'a');
  CHECK(canonical_source(swapped) == "sub{ba;b>ab;a>b}");
}

TEST_CASE("parsing periodic sources") {
  auto spec = parse_source_json(R"({"periodic": "ab"})");
  CHECK(spec.kind == SourceKind::Periodic);
  CHECK(spec.period == "ab");
  CHECK(canonical_source(spec) == "periodic{ab}");
  CHECK_THROWS_AS(to_substitution(spec), SubshiftError);
}

TEST_CASE("malformed sources are rejected") {
  CHECK_THROWS_AS(parse_source_json("not json"), SubshiftError);
  CHECK_THROWS_AS(parse_source_json("[1,2]"), SubshiftError);
  CHECK_THROWS_AS(parse_source_json("{}"), SubshiftError);
  CHECK_THROWS_AS(parse_source_json(R"({"periodic": ""})"), SubshiftError);
  CHECK_THROWS_AS(parse_source_json(R"({"periodic": 3})"), SubshiftError);
  CHECK_THROWS_AS(parse_source_json(R"({"alphabet": "ab"})"), SubshiftError);
  CHECK_THROWS_AS(parse_source_json(R"({"alphabet": "aa", "rules": {}})"), SubshiftError);
  CHECK_THROWS_AS(
      parse_source_json(R"({"alphabet": "ab", "rules": {"c": "a", "a": "ab", "b": "a"}})"),
      SubshiftError);
  CHECK_THROWS_AS(parse_source_json(R"({"alphabet": "ab", "rules": {"a": 1, "b": "a"}})"),
                  SubshiftError);
  // missing rule for b surfaces when the substitution is built
  auto partial = parse_source_json(R"({"alphabet": "ab", "rules": {"a": "ab"}})");
  CHECK_THROWS_AS(to_substitution(partial), SubshiftError);
}

TEST_CASE("language construction from specs") {
  auto sub = parse_source_json(R"({"alphabet": "ab", "rules": {"a": "ab", "b": "a"}})");
  auto lang = build_language(sub, 6);
  CHECK(lang.source_kind() == SourceKind::Substitutive);
  CHECK(lang.factors(2) == std::vector<Word>{"aa", "ab", "ba"});

  auto periodic = parse_source_json(R"({"periodic": "ab"})");
  auto plang = build_language(periodic, 6);
  CHECK(plang.source_kind() == SourceKind::Periodic);
  CHECK(plang.factors(2) == std::vector<Word>{"ab", "ba"});
}

TEST_CASE("fnv-1a digests match the reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
  CHECK(to_hex(0) == "0000000000000000");
  CHECK(to_hex(0xdeadbeefull) == "00000000deadbeef");
  CHECK(to_hex(fnv1a64("")) == "cbf29ce484222325");
}

TEST_CASE("config digests are stable and parameter-sensitive") {
  auto spec = parse_source_json(R"({"alphabet": "ab", "rules": {"a": "ab", "b": "a"}})");
  auto d1 = config_digest(spec, "rauzy|n=2|horizon=24");
  CHECK(d1.size() == 16);
  CHECK(d1 == config_digest(spec, "rauzy|n=2|horizon=24"));
  CHECK(d1 != config_digest(spec, "rauzy|n=3|horizon=24"));
  auto periodic = parse_source_json(R"({"periodic": "ab"})");
  CHECK(d1 != config_digest(periodic, "rauzy|n=2|horizon=24"));
}

TEST_CASE("file round trips") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "subshift-io-test";
  auto path = (dir / "nested" / "out.txt").string();
  write_file(path, "round trip\n");
  CHECK(read_file(path) == "round trip\n");
  fs::remove_all(dir);

  CHECK_THROWS_AS(read_file((dir / "missing.json").string()), SubshiftError);
}

TEST_CASE("preset table") {
  const auto& names = preset_names();
  CHECK(names == std::vector<std::string>{"fibonacci", "tribonacci", "thue-morse",
                                          "paper-example", "periodic-ab"});
  for (const auto& n : names) CHECK(is_preset(n));
  CHECK(!is_preset("unknown"));
  CHECK_THROWS_AS(preset_source("unknown"), SubshiftError);

  CHECK(canonical_source(preset_source("fibonacci")) == "sub{ab;a>ab;b>a}");
  CHECK(canonical_source(preset_source("tribonacci")) == "sub{abc;a>ab;b>ac;c>a}");
  CHECK(canonical_source(preset_source("thue-morse")) == "sub{ab;a>ab;b>ba}");
  CHECK(canonical_source(preset_source("paper-example")) == "sub{abcd;a>ab;b>cda;c>cd;d>abc}");
  CHECK(canonical_source(preset_source("periodic-ab")) == "periodic{ab}");

  // every preset builds a language
  for (const auto& n : names) CHECK_NOTHROW(build_language(preset_source(n), 8));
}

TEST_CASE("preset files mirror the built-in table") {
  for (const auto& name : preset_names()) {
    auto from_file = parse_source_file("presets/" + name + ".json");
    CHECK(canonical_source(from_file) == canonical_source(preset_source(name)));
  }
}
