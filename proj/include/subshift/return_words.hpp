// return_words.hpp -- return words, delayed return words, code checks
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "subshift/language.hpp"
#include "subshift/rauzy.hpp"
#include "subshift/word.hpp"

namespace subshift {

struct ReturnWordSet {
  enum class Kind { Plain, Delayed };
  Kind kind = Kind::Plain;
  Word u1;  ///< for Plain this is all of u; for Delayed the left part
  Word u2;  ///< empty for Plain
  std::vector<Word> words;  ///< sorted
  bool complete = false;    ///< scan stabilized within the budget
  std::size_t occurrences = 0;
  std::size_t max_gap = 0;
};

/// Return words of u: the v with vu in the language, vu starting with u, and
/// u occurring in vu only as prefix and suffix.  Computed by scanning the
/// one-sided point (fixed-point prefix, or one period repeated): the blocks
/// between consecutive occurrences of u are exactly the return words.
/// Completeness heuristic: at least two occurrences, no new word discovered
/// in the last quarter of the scan, and budget >= 4 * (max gap + |u|).
ReturnWordSet try_return_words(const FactorLanguage& lang, const Word& u,
                               std::size_t scan_budget);

/// As try_return_words but throws Incomplete when the scan did not stabilize.
ReturnWordSet return_words(const FactorLanguage& lang, const Word& u,
                           std::size_t scan_budget);

/// Delayed return words R(u1,u2) = u1^-1 (R(u1u2) u1): the v with u1.v.u2 in
/// the language and u1.v a return word of u1u2 followed by u1.  Computed from
/// the plain set by the conjugation identity; same cardinality.
/// Both parts must be nonempty.
ReturnWordSet try_delayed_return_words(const FactorLanguage& lang, const Word& u1,
                                       const Word& u2, std::size_t scan_budget);
ReturnWordSet delayed_return_words(const FactorLanguage& lang, const Word& u1,
                                   const Word& u2, std::size_t scan_budget);

/// Return words of the window: R at (left half, right half).  These label the
/// cycles of the order-2n Rauzy graph rooted at the window vertex.
ReturnWordSet return_set_at(const FactorLanguage& lang, const PointWindow& window,
                            std::size_t scan_budget);

/// Cycle of g rooted at the window vertex whose central-label word is r: the
/// path traced by left.r.right.  Throws NotAdmissible if a window of the
/// traced word leaves the language, NotALoop if the result is not a cycle at
/// the window vertex, OrderMismatch unless the graph order is 2 * window.n().
GraphPath lift_return_word(const RauzyGraph& g, const FactorLanguage& lang,
                           const PointWindow& window, const Word& r);

struct CodeCheckResult {
  bool is_code = false;
  Word ambiguous_word;                  ///< set when not a code
  std::vector<Word> factorization_a;    ///< two distinct codeword sequences
  std::vector<Word> factorization_b;    ///< concatenating to ambiguous_word
};

/// Sardinas-Patterson test with an explicit double-factorization witness.
/// Input is treated as a set (duplicates removed); empty words are invalid.
CodeCheckResult is_code(std::vector<Word> words);

struct CircularCheckResult {
  bool unambiguous = true;
  Word witness_cycle;                 ///< canonical rotation of the ambiguous cycle
  std::vector<std::size_t> cuts_a;    ///< two distinct cut sets on that cycle
  std::vector<std::size_t> cuts_b;
};

/// Brute-force circular-ambiguity search over all concatenations of codewords
/// with total length <= max_total_len: two factorizations of the same cyclic
/// word that induce different cut sets witness failure.
CircularCheckResult check_circular_bruteforce(std::vector<Word> words,
                                              std::size_t max_total_len);

/// (n, min |r| over the return set at the default window), for n in range.
std::vector<std::pair<std::size_t, std::size_t>> min_return_length_profile(
    const FactorLanguage& lang, std::size_t n_from, std::size_t n_to,
    std::size_t scan_budget);

}  // namespace subshift
