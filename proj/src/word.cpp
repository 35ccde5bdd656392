#include "subshift/word.hpp"

#include <algorithm>
#include <cctype>

namespace subshift {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonPrimitive: return "NonPrimitive";
    case ErrorKind::NoSeedLetter: return "NoSeedLetter";
    case ErrorKind::HorizonExceeded: return "HorizonExceeded";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::Incomplete: return "Incomplete";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotALoop: return "NotALoop";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
  }
  return "UnknownError";
}

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw SubshiftError(ErrorKind::InvalidInput, "alphabet must be nonempty");
  }
  rank_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(letters_[i]);
    // Letters must be graphical and safe inside CSV cells and DOT quoting.
    if (!std::isgraph(c) || c == ',' || c == '"' || c == '\\') {
      throw SubshiftError(ErrorKind::InvalidInput,
                          "alphabet letter is not a printable token");
    }
    if (rank_[c] >= 0) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          std::string("duplicate alphabet letter '") + letters_[i] + "'");
    }
    rank_[c] = static_cast<int>(i);
  }
}

std::size_t Alphabet::rank(char c) const {
  int r = rank_[static_cast<unsigned char>(c)];
  if (r < 0) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        std::string("letter '") + c + "' is not in the alphabet");
  }
  return static_cast<std::size_t>(r);
}

bool Alphabet::word_valid(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
}

void Alphabet::require_word(const Word& w) const {
  for (char c : w) {
    if (!contains(c)) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          std::string("word '") + w + "' uses letter '" + c +
                              "' outside the alphabet");
    }
  }
}

bool Alphabet::word_less(const Word& a, const Word& b) const {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
  }
  return a.size() < b.size();
}

std::vector<Word> sorted_unique_words(std::vector<Word> words, const Alphabet& alphabet) {
  std::sort(words.begin(), words.end(),
            [&](const Word& a, const Word& b) { return alphabet.word_less(a, b); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace subshift
