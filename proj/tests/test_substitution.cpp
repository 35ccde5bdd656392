#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subshift/error.hpp"
#include "subshift/substitution.hpp"

using namespace subshift;

namespace {

Substitution fib() { return Substitution(Alphabet("ab"), {{'a', "ab"}, {'b', "a"}}); }

Substitution four_letter() {
  return Substitution(Alphabet("abcd"),
                      {{'a', "ab"}, {'b', "cda"}, {'c', "cd"}, {'d', "abc"}});
}

}  // namespace

TEST_CASE("construction validates the rule table") {
  Alphabet ab("ab");
  CHECK_THROWS_AS(Substitution(ab, {{'a', "ab"}}), SubshiftError);                  // missing b
  CHECK_THROWS_AS(Substitution(ab, {{'a', "ab"}, {'a', "a"}}), SubshiftError);      // duplicate
  CHECK_THROWS_AS(Substitution(ab, {{'a', "ab"}, {'b', ""}}), SubshiftError);       // empty image
  CHECK_THROWS_AS(Substitution(ab, {{'a', "ab"}, {'b', "ac"}}), SubshiftError);     // foreign letter
  CHECK_THROWS_AS(Substitution(ab, {{'a', "ab"}, {'b', "a"}, {'c', "a"}}), SubshiftError);
  CHECK_NOTHROW(fib());
}

TEST_CASE("apply and power") {
  auto phi = fib();
  CHECK(phi.rule('a') == "ab");
  CHECK(phi.rule('b') == "a");
  CHECK(phi.apply("") == "");
  CHECK(phi.apply("a") == "ab");
  CHECK(phi.apply("ab") == "aba");
  CHECK(phi.apply("aba") == "abaab");

  CHECK(phi.power(0).apply("ab") == "ab");
  CHECK(phi.power(1).apply("a") == "ab");
  CHECK(phi.power(2).apply("a") == "aba");
  CHECK(phi.power(3).apply("a") == "abaab");
  CHECK(phi.power(4).apply("a") == "abaababa");

  CHECK(phi.max_rule_len() == 2);
  CHECK(phi.min_rule_len() == 1);
}

TEST_CASE("primitivity of known substitutions") {
  auto r = check_primitive(fib());
  CHECK(r.primitive);
  CHECK(r.exponent == 2);  // incidence matrix [[1,1],[1,0]] turns positive at power 2

  Substitution tm(Alphabet("ab"), {{'a', "ab"}, {'b', "ba"}});
  auto rtm = check_primitive(tm);
  CHECK(rtm.primitive);
  CHECK(rtm.exponent == 1);

  auto r4 = check_primitive(four_letter());
  CHECK(r4.primitive);
  CHECK(r4.exponent == 2);

  Substitution single(Alphabet("a"), {{'a', "aa"}});
  auto rs = check_primitive(single);
  CHECK(rs.primitive);
  CHECK(rs.exponent == 1);
}

TEST_CASE("non-primitive substitutions are detected") {
  Substitution bad(Alphabet("ab"), {{'a', "ab"}, {'b', "b"}});  // b never reaches a
  auto r = check_primitive(bad);
  CHECK(!r.primitive);
  CHECK(r.exponent == 0);

  Substitution split(Alphabet("ab"), {{'a', "aa"}, {'b', "bb"}});
  CHECK(!check_primitive(split).primitive);
}

TEST_CASE("seed resolution picks the smallest prolonging power") {
  auto s = resolve_seed(fib());
  CHECK(s.exponent == 1);
  CHECK(s.seed == 'a');

  // Neither letter is prolonged by the first power here, both by the second.
  Substitution swapped(Alphabet("ab"), {{'a', "ba"}, {'b', "ab"}});
  REQUIRE(check_primitive(swapped).primitive);
  auto s2 = resolve_seed(swapped);
  CHECK(s2.exponent == 2);
  CHECK(s2.seed == 'a');
  CHECK(s2.power.apply("a").substr(0, 1) == "a");
}

TEST_CASE("fixed point prefixes are stable and correct") {
  auto s = resolve_seed(fib());
  CHECK(fixed_point_prefix(s, 0) == "");
  CHECK(fixed_point_prefix(s, 1) == "a");
  CHECK(fixed_point_prefix(s, 2) == "ab");
  CHECK(fixed_point_prefix(s, 13) == "abaababaabaab");
  // prefix property: shorter requests are prefixes of longer ones
  auto p21 = fixed_point_prefix(s, 21);
  CHECK(p21.substr(0, 13) == "abaababaabaab");
  CHECK(p21 == "abaababaabaababaababa");

  Substitution single(Alphabet("a"), {{'a', "aa"}});
  auto ss = resolve_seed(single);
  CHECK(fixed_point_prefix(ss, 5) == "aaaaa");
}

TEST_CASE("fixed point is invariant under the resolved power") {
  auto s = resolve_seed(fib());
  auto p = fixed_point_prefix(s, 30);
  auto image = s.power.apply(p);
  CHECK(image.substr(0, 30) == p);
}
