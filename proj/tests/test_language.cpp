#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "subshift/error.hpp"
#include "subshift/language.hpp"

using namespace subshift;

namespace {

Substitution fib_sub() { return Substitution(Alphabet("ab"), {{'a', "ab"}, {'b', "a"}}); }
FactorLanguage fib(std::size_t h = 10) { return build_language(fib_sub(), h); }

}  // namespace

TEST_CASE("golden-mean factor lists") {
  auto lang = fib();
  CHECK(lang.horizon() == 10);
  CHECK(lang.source_kind() == SourceKind::Substitutive);
  CHECK(lang.factors(1) == std::vector<Word>{"a", "b"});
  CHECK(lang.factors(2) == std::vector<Word>{"aa", "ab", "ba"});
  CHECK(lang.factors(3) == std::vector<Word>{"aab", "aba", "baa", "bab"});
  for (std::size_t k = 1; k <= 10; ++k) CHECK(lang.complexity(k) == k + 1);
}

TEST_CASE("membership and horizon guard") {
  auto lang = fib(6);
  CHECK(lang.contains(""));
  CHECK(lang.contains("aa"));
  CHECK(lang.contains("abaaba"));
  CHECK(!lang.contains("bb"));
  CHECK(!lang.contains("aaa"));
  CHECK(!lang.contains("abc"));  // foreign letters are simply not members
  CHECK_THROWS_AS(lang.contains("abaabab"), SubshiftError);
  try {
    lang.contains("abaabab");
  } catch (const SubshiftError& e) {
    CHECK(e.kind() == ErrorKind::HorizonExceeded);
  }
}

TEST_CASE("point prefix reproduces the fixed point") {
  auto lang = fib();
  CHECK(lang.point_prefix(13) == "abaababaabaab");
  CHECK(lang.point_prefix(2) == "ab");
  REQUIRE(lang.seed().has_value());
  CHECK(lang.seed()->seed == 'a');
}

TEST_CASE("non-primitive input is rejected") {
  Substitution bad(Alphabet("ab"), {{'a', "ab"}, {'b', "b"}});
  CHECK_THROWS_AS(build_language(bad, 5), SubshiftError);
  try {
    build_language(bad, 5);
  } catch (const SubshiftError& e) {
    CHECK(e.kind() == ErrorKind::NonPrimitive);
    CHECK(e.is_validation());
  }
}

TEST_CASE("periodic language") {
  auto lang = build_language(Word("ab"), 7);
  CHECK(lang.source_kind() == SourceKind::Periodic);
  CHECK(lang.period() == "ab");
  CHECK(lang.factors(1) == std::vector<Word>{"a", "b"});
  CHECK(lang.factors(2) == std::vector<Word>{"ab", "ba"});
  CHECK(lang.factors(3) == std::vector<Word>{"aba", "bab"});
  for (std::size_t k = 1; k <= 7; ++k) CHECK(lang.complexity(k) == 2);
  CHECK(!lang.contains("aa"));
  CHECK(lang.point_prefix(5) == "ababa");

  CHECK_THROWS_AS(build_language(Word(""), 5), SubshiftError);
}

TEST_CASE("thue-morse has all four two-letter factors") {
  Substitution tm(Alphabet("ab"), {{'a', "ab"}, {'b', "ba"}});
  auto lang = build_language(tm, 8);
  CHECK(lang.factors(2) == std::vector<Word>{"aa", "ab", "ba", "bb"});
  CHECK(!lang.contains("aaa"));
  CHECK(!lang.contains("bbb"));
}

TEST_CASE("factoriality: every subword of a factor is a factor") {
  auto lang = fib(8);
  for (std::size_t k = 1; k <= 8; ++k) {
    for (const auto& w : lang.factors(k)) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
          CHECK(lang.contains(w.substr(i, len)));
        }
      }
    }
  }
}

TEST_CASE("prolongability: factors extend on both sides") {
  auto lang = fib(8);
  const auto& letters = lang.alphabet().letters();
  for (std::size_t k = 1; k < 8; ++k) {
    for (const auto& w : lang.factors(k)) {
      bool right = false, left = false;
      for (char c : letters) {
        if (lang.contains(w + c)) right = true;
        if (lang.contains(c + w)) left = true;
      }
      CHECK(right);
      CHECK(left);
    }
  }
}

TEST_CASE("language is invariant under the substitution") {
  auto lang = fib(10);
  auto phi = fib_sub();
  for (const auto& w : lang.factors(4)) {
    Word image = phi.apply(w);
    for (std::size_t len = 1; len <= std::min<std::size_t>(image.size(), 10); ++len) {
      for (std::size_t i = 0; i + len <= image.size(); ++i) {
        CHECK(lang.contains(image.substr(i, len)));
      }
    }
  }
}

TEST_CASE("horizon only extends, never changes, the short factors") {
  auto small = fib(6);
  auto large = fib(12);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(small.factors(k) == large.factors(k));
}

TEST_CASE("uniform recurrence probe") {
  auto lang = fib(10);
  auto r6 = check_uniform_recurrence(lang, "aa", 6);
  CHECK(r6.holds);
  REQUIRE(r6.least_len.has_value());
  CHECK(*r6.least_len == 6);

  auto r2 = check_uniform_recurrence(lang, "aa", 2);
  CHECK(!r2.holds);
  REQUIRE(r2.least_len.has_value());
  CHECK(*r2.least_len == 6);

  CHECK_THROWS_AS(check_uniform_recurrence(lang, "bb", 4), SubshiftError);
  CHECK_THROWS_AS(check_uniform_recurrence(lang, "aa", 11), SubshiftError);
}

TEST_CASE("local admissibility") {
  auto lang = fib(6);
  CHECK(is_locally_admissible(lang, "abaab", 3));
  CHECK(is_locally_admissible(lang, "", 3));
  CHECK(!is_locally_admissible(lang, "abba", 2));   // bb is not a factor
  CHECK(is_locally_admissible(lang, "b", 4));       // shorter than the window length
  CHECK_THROWS_AS(is_locally_admissible(lang, "ab", 7), SubshiftError);
}

TEST_CASE("windows and central restriction") {
  auto lang = fib(8);
  auto w2 = default_window(lang, 2);
  CHECK(w2.word == "abaa");
  CHECK(w2.n() == 2);
  CHECK(w2.left() == "ab");
  CHECK(w2.right() == "aa");

  auto w1 = project(w2, 1);
  CHECK(w1.word == "ba");
  CHECK(w1.left() == "b");
  CHECK(w1.right() == "a");

  CHECK(project(w2, 2).word == w2.word);
  CHECK_THROWS_AS(project(w2, 3), SubshiftError);
  CHECK_THROWS_AS(default_window(lang, 5), SubshiftError);  // needs horizon 10
}
