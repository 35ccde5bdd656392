// language.hpp -- factor languages of substitutive and periodic subshifts
#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <variant>
#include <vector>

#include "subshift/substitution.hpp"
#include "subshift/word.hpp"

namespace subshift {

enum class SourceKind { Substitutive, Periodic };

/// All factors of the subshift up to a fixed horizon, stored per length in
/// declaration-order lexicographic order.  Immutable after construction, so
/// concurrent readers need no synchronization.
class FactorLanguage {
 public:
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t horizon() const { return horizon_; }
  SourceKind source_kind() const { return kind_; }

  /// Factors of length exactly k, sorted.  1 <= k <= horizon.
  const std::vector<Word>& factors(std::size_t k) const;

  /// Membership for |w| <= horizon; longer queries throw HorizonExceeded
  /// rather than silently answering false.
  bool contains(const Word& w) const;

  /// Complexity p(k) = |factors(k)|.
  std::size_t complexity(std::size_t k) const;

  /// Prefix of the one-sided point the language was built from: the fixed
  /// point of the resolved substitution power, or the periodic repetition.
  Word point_prefix(std::size_t len) const;

  /// Resolved seed data for substitutive sources.
  const std::optional<SeedInfo>& seed() const { return seed_; }
  const Word& period() const { return period_; }

 private:
  friend FactorLanguage build_language(const Substitution&, std::size_t);
  friend FactorLanguage build_language(const Word&, std::size_t);
  FactorLanguage() = default;

  Alphabet alphabet_{"?"};
  std::size_t horizon_ = 0;
  SourceKind kind_ = SourceKind::Periodic;
  std::vector<std::vector<Word>> by_len_;  // index k, 1-based; [0] unused
  std::unordered_set<Word> members_;
  std::optional<SeedInfo> seed_;
  Word period_;
};

/// Language of the minimal subshift defined by a primitive substitution.
/// Throws NonPrimitive, NoSeedLetter.
FactorLanguage build_language(const Substitution& sub, std::size_t horizon);

/// Language of the periodic orbit of period^inf.
FactorLanguage build_language(const Word& period, std::size_t horizon);

struct RecurrenceResult {
  bool holds = false;                       ///< every factor of searchLen contains u
  std::optional<std::size_t> least_len;     ///< least such length within the horizon
};

/// Uniform-recurrence probe: does every window of length searchLen contain u?
/// Throws NotAFactor if u is not in the language, HorizonExceeded if
/// searchLen exceeds the horizon.
RecurrenceResult check_uniform_recurrence(const FactorLanguage& lang, const Word& u,
                                          std::size_t search_len);

/// True iff every factor of u of length <= k lies in the language.
/// Requires k <= horizon.
bool is_locally_admissible(const FactorLanguage& lang, const Word& u, std::size_t k);

/// Two-sided window of even length 2n around a point position: word = left
/// half (positions -n..-1) followed by right half (positions 0..n-1).
struct PointWindow {
  Word word;
  std::size_t n() const { return word.size() / 2; }
  Word left() const { return word.substr(0, n()); }
  Word right() const { return word.substr(n()); }
};

/// Default window: the length-2n factor centered at the first admissible
/// position of the point, i.e. its prefix of length 2n split in the middle.
PointWindow default_window(const FactorLanguage& lang, std::size_t n);

/// Central restriction of a window to half-length n (strips both ends).
PointWindow project(const PointWindow& w, std::size_t n);

}  // namespace subshift
