// word.hpp -- alphabets and finite words
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "subshift/error.hpp"

namespace subshift {

/// Words are strings over the letters of an Alphabet.  The empty word is "".
using Word = std::string;

/// Ordered set of distinct single-character letters.  The declaration order
/// fixes the total order used for every lexicographic comparison downstream,
/// so two runs over the same input always enumerate words identically.
class Alphabet {
 public:
  explicit Alphabet(std::string letters);

  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t i) const { return letters_[i]; }
  const std::string& letters() const { return letters_; }

  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }

  /// Position of c in declaration order; throws InvalidInput if absent.
  std::size_t rank(char c) const;

  bool word_valid(const Word& w) const;

  /// Throws InvalidInput naming the first foreign letter.
  void require_word(const Word& w) const;

  /// Lexicographic comparison by declaration-order ranks.
  bool word_less(const Word& a, const Word& b) const;

  bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

 private:
  std::string letters_;
  std::array<int, 256> rank_{};
};

/// Sorts and deduplicates words by declaration-order lexicographic order.
std::vector<Word> sorted_unique_words(std::vector<Word> words, const Alphabet& alphabet);

}  // namespace subshift
