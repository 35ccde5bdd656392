#include "subshift/language.hpp"

#include <algorithm>
#include <deque>

namespace subshift {

namespace {

// Inserts every factor of w with length <= max_len; returns true if new.
bool add_factors(const Word& w, std::size_t max_len, std::unordered_set<Word>& into,
                 std::deque<Word>* worklist) {
  bool added = false;
  const std::size_t limit = std::min(max_len, w.size());
  for (std::size_t len = 1; len <= limit; ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      Word f = w.substr(i, len);
      if (into.insert(f).second) {
        added = true;
        if (worklist) worklist->push_back(std::move(f));
      }
    }
  }
  return added;
}

}  // namespace

const std::vector<Word>& FactorLanguage::factors(std::size_t k) const {
  if (k < 1 || k > horizon_) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "factor length " + std::to_string(k) + " outside horizon " +
                            std::to_string(horizon_));
  }
  return by_len_[k];
}

bool FactorLanguage::contains(const Word& w) const {
  if (w.empty()) return true;
  if (w.size() > horizon_) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "membership query of length " + std::to_string(w.size()) +
                            " beyond horizon " + std::to_string(horizon_));
  }
  return members_.count(w) > 0;
}

std::size_t FactorLanguage::complexity(std::size_t k) const { return factors(k).size(); }

Word FactorLanguage::point_prefix(std::size_t len) const {
  if (kind_ == SourceKind::Substitutive) {
    return fixed_point_prefix(*seed_, len);
  }
  Word w;
  w.reserve(len);
  while (w.size() < len) w += period_;
  w.resize(len);
  return w;
}

FactorLanguage build_language(const Substitution& sub, std::size_t horizon) {
  if (horizon < 1) {
    throw SubshiftError(ErrorKind::InvalidInput, "horizon must be at least 1");
  }
  PrimitivityResult prim = check_primitive(sub);
  if (!prim.primitive) {
    throw SubshiftError(ErrorKind::NonPrimitive,
                        "substitution incidence matrix has no positive power");
  }
  SeedInfo seed = resolve_seed(sub);

  // Phase 1: iterate the prefix until one extra application adds no factor.
  // Prefixes of the fixed point are nested, so the factor set only grows.
  const std::size_t collect_len = std::max<std::size_t>(horizon, 2);
  const std::size_t threshold = horizon + seed.power.max_rule_len() * horizon;
  std::unordered_set<Word> factors;
  Word w(1, seed.seed);
  bool growing = true;
  while (w.size() < threshold && growing) {
    Word next = seed.power.apply(w);
    growing = next.size() > w.size();
    w = std::move(next);
  }
  if (!growing) {
    // Image lengths froze, so the point is the periodic repetition of w.
    Word rep = w;
    while (rep.size() < w.size() + collect_len) rep += w;
    w = std::move(rep);
  }
  add_factors(w, collect_len, factors, nullptr);
  std::size_t iter_guard = 0;
  for (int stable = 0; stable < 1 && growing;) {
    w = seed.power.apply(w);
    if (!add_factors(w, collect_len, factors, nullptr)) {
      ++stable;
    }
    if (++iter_guard > 48 || w.size() > 50'000'000) {
      throw SubshiftError(ErrorKind::Incomplete,
                          "factor collection failed to stabilize");
    }
  }

  // Phase 2: close under factors of images.  Images of factors are factors,
  // so the sweep only adds valid words; with the seeded prefix it guarantees
  // the sets are complete even when the stabilization above plateaued early.
  // A power with all images of length >= 2 keeps covering windows within the
  // collected horizon.
  Substitution closer = seed.power;
  std::size_t guard = 0;
  while (closer.min_rule_len() < 2 && sub.alphabet().size() > 1) {
    closer = Substitution(closer.alphabet(), [&] {
      std::vector<std::pair<char, Word>> rules;
      for (std::size_t r = 0; r < closer.alphabet().size(); ++r) {
        char c = closer.alphabet().letter(r);
        rules.emplace_back(c, seed.power.apply(closer.rule(c)));
      }
      return rules;
    }());
    if (++guard > sub.alphabet().size() * sub.alphabet().size()) {
      throw SubshiftError(ErrorKind::NonPrimitive, "substitution images fail to grow");
    }
  }
  std::deque<Word> worklist(factors.begin(), factors.end());
  while (!worklist.empty()) {
    Word z = std::move(worklist.front());
    worklist.pop_front();
    add_factors(closer.apply(z), collect_len, factors, &worklist);
  }

  FactorLanguage lang;
  lang.alphabet_ = sub.alphabet();
  lang.horizon_ = horizon;
  lang.kind_ = SourceKind::Substitutive;
  lang.seed_ = std::move(seed);
  lang.by_len_.assign(horizon + 1, {});
  for (const Word& f : factors) {
    if (f.size() <= horizon) lang.by_len_[f.size()].push_back(f);
  }
  for (std::size_t k = 1; k <= horizon; ++k) {
    lang.by_len_[k] = sorted_unique_words(std::move(lang.by_len_[k]), lang.alphabet_);
    for (const Word& f : lang.by_len_[k]) lang.members_.insert(f);
  }
  return lang;
}

FactorLanguage build_language(const Word& period, std::size_t horizon) {
  if (period.empty()) {
    throw SubshiftError(ErrorKind::InvalidInput, "periodic word must be nonempty");
  }
  if (horizon < 1) {
    throw SubshiftError(ErrorKind::InvalidInput, "horizon must be at least 1");
  }
  std::string letters = period;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  FactorLanguage lang;
  lang.alphabet_ = Alphabet(letters);
  lang.horizon_ = horizon;
  lang.kind_ = SourceKind::Periodic;
  lang.period_ = period;
  lang.by_len_.assign(horizon + 1, {});
  // Every window of period^inf starts within the first period.
  Word big;
  while (big.size() < period.size() + horizon) big += period;
  for (std::size_t k = 1; k <= horizon; ++k) {
    std::vector<Word> words;
    for (std::size_t i = 0; i < period.size(); ++i) words.push_back(big.substr(i, k));
    lang.by_len_[k] = sorted_unique_words(std::move(words), lang.alphabet_);
    for (const Word& f : lang.by_len_[k]) lang.members_.insert(f);
  }
  return lang;
}

RecurrenceResult check_uniform_recurrence(const FactorLanguage& lang, const Word& u,
                                          std::size_t search_len) {
  if (u.empty() || !lang.contains(u)) {
    throw SubshiftError(ErrorKind::NotAFactor, "'" + u + "' is not a factor", u);
  }
  if (search_len < 1 || search_len > lang.horizon()) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "search length " + std::to_string(search_len) +
                            " outside horizon " + std::to_string(lang.horizon()));
  }
  auto all_contain = [&](std::size_t k) {
    if (k < u.size()) return false;
    const auto& words = lang.factors(k);
    return std::all_of(words.begin(), words.end(),
                       [&](const Word& w) { return w.find(u) != Word::npos; });
  };
  RecurrenceResult res;
  res.holds = all_contain(search_len);
  for (std::size_t k = u.size(); k <= lang.horizon(); ++k) {
    if (all_contain(k)) {
      res.least_len = k;
      break;
    }
  }
  return res;
}

bool is_locally_admissible(const FactorLanguage& lang, const Word& u, std::size_t k) {
  if (k < 1 || k > lang.horizon()) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "window length " + std::to_string(k) + " outside horizon " +
                            std::to_string(lang.horizon()));
  }
  if (u.empty()) return true;
  if (u.size() <= k) return lang.contains(u);
  // The language is factorial: checking the maximal windows suffices.
  for (std::size_t i = 0; i + k <= u.size(); ++i) {
    if (!lang.contains(u.substr(i, k))) return false;
  }
  return true;
}

PointWindow default_window(const FactorLanguage& lang, std::size_t n) {
  if (n < 1 || 2 * n > lang.horizon()) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "window half-length " + std::to_string(n) +
                            " outside horizon " + std::to_string(lang.horizon()));
  }
  return PointWindow{lang.point_prefix(2 * n)};
}

PointWindow project(const PointWindow& w, std::size_t n) {
  const std::size_t m = w.n();
  if (n < 1 || n > m) {
    throw SubshiftError(ErrorKind::OrderMismatch,
                        "cannot restrict window of half-length " + std::to_string(m) +
                            " to half-length " + std::to_string(n));
  }
  return PointWindow{w.word.substr(m - n, 2 * n)};
}

}  // namespace subshift
