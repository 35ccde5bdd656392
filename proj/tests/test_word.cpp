#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subshift/error.hpp"
#include "subshift/word.hpp"

using namespace subshift;

TEST_CASE("alphabet basics") {
  Alphabet ab("ab");
  CHECK(ab.size() == 2);
  CHECK(ab.letter(0) == 'a');
  CHECK(ab.letter(1) == 'b');
  CHECK(ab.contains('a'));
  CHECK(ab.contains('b'));
  CHECK(!ab.contains('c'));
  CHECK(ab.rank('a') == 0);
  CHECK(ab.rank('b') == 1);
  CHECK_THROWS_AS(ab.rank('c'), SubshiftError);
}

TEST_CASE("alphabet construction rejects bad inputs") {
  CHECK_THROWS_AS(Alphabet(""), SubshiftError);
  CHECK_THROWS_AS(Alphabet("aa"), SubshiftError);
  CHECK_THROWS_AS(Alphabet("aba"), SubshiftError);
  CHECK_THROWS_AS(Alphabet("a b"), SubshiftError);
  CHECK_THROWS_AS(Alphabet("a,b"), SubshiftError);
  CHECK_THROWS_AS(Alphabet("a\"b"), SubshiftError);
  CHECK_THROWS_AS(Alphabet("a\\b"), SubshiftError);
  CHECK_NOTHROW(Alphabet("abcdefgh"));
  CHECK_NOTHROW(Alphabet("01"));
}

TEST_CASE("word validation") {
  Alphabet ab("ab");
  CHECK(ab.word_valid(""));
  CHECK(ab.word_valid("abba"));
  CHECK(!ab.word_valid("abc"));
  CHECK_NOTHROW(ab.require_word("ab"));
  try {
    ab.require_word("axb");
    FAIL("expected a throw");
  } catch (const SubshiftError& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
    CHECK(e.is_validation());
  }
}

TEST_CASE("word order follows declaration order, not ASCII") {
  Alphabet ba("ba");  // b declared before a
  CHECK(ba.word_less("b", "a"));
  CHECK(!ba.word_less("a", "b"));
  CHECK(ba.word_less("bb", "ba"));

  Alphabet ab("ab");
  CHECK(ab.word_less("a", "b"));
  CHECK(ab.word_less("a", "ab"));   // proper prefix first
  CHECK(ab.word_less("ab", "b"));
  CHECK(!ab.word_less("ab", "ab"));
  CHECK(ab.word_less("", "a"));
}

TEST_CASE("sorted_unique_words sorts and dedups") {
  Alphabet ab("ab");
  auto out = sorted_unique_words({"ba", "ab", "a", "ba", "aa"}, ab);
  CHECK(out == std::vector<Word>{"a", "aa", "ab", "ba"});

  Alphabet ba("ba");
  auto out2 = sorted_unique_words({"ab", "ba", "aa", "bb"}, ba);
  CHECK(out2 == std::vector<Word>{"bb", "ba", "ab", "aa"});
}

TEST_CASE("error taxonomy") {
  SubshiftError e(ErrorKind::NotAdmissible, "window left the language", "bb");
  CHECK(e.kind() == ErrorKind::NotAdmissible);
  CHECK(e.witness() == "bb");
  CHECK(!e.is_validation());
  CHECK(std::string(e.what()).find("window left the language") != std::string::npos);

  CHECK(SubshiftError(ErrorKind::InvalidInput, "x").is_validation());
  CHECK(SubshiftError(ErrorKind::NonPrimitive, "x").is_validation());
  CHECK(SubshiftError(ErrorKind::NoSeedLetter, "x").is_validation());
  CHECK(!SubshiftError(ErrorKind::HorizonExceeded, "x").is_validation());
  CHECK(!SubshiftError(ErrorKind::Incomplete, "x").is_validation());
}
