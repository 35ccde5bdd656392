// substitution.hpp -- substitutions on free monoids, primitivity, fixed points
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

/// Monoid endomorphism determined by one nonempty image word per letter.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<std::pair<char, Word>> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& rule(char c) const { return rules_[alphabet_.rank(c)]; }

  Word apply(const Word& w) const;

  /// Composition power; exponent 0 is the identity.
  Substitution power(std::size_t k) const;

  std::size_t max_rule_len() const;
  std::size_t min_rule_len() const;

 private:
  Substitution(Alphabet alphabet, std::vector<Word> rules_by_rank)
      : alphabet_(std::move(alphabet)), rules_(std::move(rules_by_rank)) {}

  Alphabet alphabet_;
  std::vector<Word> rules_;  // indexed by letter rank
};

struct PrimitivityResult {
  bool primitive = false;
  /// Smallest k with the k-th incidence power entrywise positive (0 if none).
  std::size_t exponent = 0;
};

/// Primitivity via boolean incidence-matrix powers up to |A|^2 (that bound
/// dominates Wielandt's (|A|-1)^2 + 1, so no larger power can help).
PrimitivityResult check_primitive(const Substitution& sub);

struct SeedInfo {
  Substitution power;     ///< phi^exponent, the substitution actually iterated
  std::size_t exponent;   ///< smallest e such that some letter a has phi^e(a) in aA*
  char seed;              ///< first such letter in alphabet order
};

/// Resolves the fixed-point seed, replacing the substitution by its smallest
/// power that prolongs some letter.  Throws NoSeedLetter if none exists
/// (unreachable for primitive input: the first-letter map is eventually
/// periodic, and any letter on one of its cycles works).
SeedInfo resolve_seed(const Substitution& sub);

/// Prefix of length len of the one-sided fixed point of seed.power started at
/// seed.seed.  Each iterate extends the previous one, so prefixes are stable.
Word fixed_point_prefix(const SeedInfo& seed, std::size_t len);

}  // namespace subshift
