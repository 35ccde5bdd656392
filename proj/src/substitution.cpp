#include "subshift/substitution.hpp"

#include <algorithm>

namespace subshift {

Substitution::Substitution(Alphabet alphabet, std::vector<std::pair<char, Word>> rules)
    : alphabet_(std::move(alphabet)) {
  rules_.resize(alphabet_.size());
  std::vector<bool> seen(alphabet_.size(), false);
  for (auto& [letter, image] : rules) {
    std::size_t r = alphabet_.rank(letter);
    if (seen[r]) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          std::string("duplicate rule for letter '") + letter + "'");
    }
    if (image.empty()) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          std::string("empty image for letter '") + letter + "'");
    }
    alphabet_.require_word(image);
    seen[r] = true;
    rules_[r] = std::move(image);
  }
  for (std::size_t r = 0; r < alphabet_.size(); ++r) {
    if (!seen[r]) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          std::string("missing rule for letter '") + alphabet_.letter(r) + "'");
    }
  }
}

Word Substitution::apply(const Word& w) const {
  Word out;
  std::size_t total = 0;
  for (char c : w) total += rule(c).size();
  out.reserve(total);
  for (char c : w) out += rule(c);
  return out;
}

Substitution Substitution::power(std::size_t k) const {
  std::vector<Word> rules;
  rules.reserve(alphabet_.size());
  for (std::size_t r = 0; r < alphabet_.size(); ++r) {
    Word w(1, alphabet_.letter(r));
    for (std::size_t i = 0; i < k; ++i) w = apply(w);
    rules.push_back(std::move(w));
  }
  return Substitution(alphabet_, std::move(rules));
}

std::size_t Substitution::max_rule_len() const {
  std::size_t m = 0;
  for (const Word& w : rules_) m = std::max(m, w.size());
  return m;
}

std::size_t Substitution::min_rule_len() const {
  std::size_t m = rules_.empty() ? 0 : rules_[0].size();
  for (const Word& w : rules_) m = std::min(m, w.size());
  return m;
}

PrimitivityResult check_primitive(const Substitution& sub) {
  const std::size_t n = sub.alphabet().size();
  // bools[i][j] = letter j occurs in the image of letter i.
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (char c : sub.rule(sub.alphabet().letter(i))) {
      m[i][sub.alphabet().rank(c)] = true;
    }
  }
  auto positive = [n](const std::vector<std::vector<bool>>& a) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!a[i][j]) return false;
    return true;
  };
  std::vector<std::vector<bool>> acc = m;
  for (std::size_t k = 1; k <= n * n; ++k) {
    if (positive(acc)) return {true, k};
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (acc[i][l])
          for (std::size_t j = 0; j < n; ++j)
            if (m[l][j]) next[i][j] = true;
    acc = std::move(next);
  }
  return {false, 0};
}

SeedInfo resolve_seed(const Substitution& sub) {
  const Alphabet& a = sub.alphabet();
  Substitution p = sub;  // p == sub^e throughout
  for (std::size_t e = 1; e <= a.size(); ++e) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      char c = a.letter(r);
      if (p.rule(c).front() == c) {
        return {p, e, c};
      }
    }
    std::vector<std::pair<char, Word>> next;
    next.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
      char c = a.letter(r);
      next.emplace_back(c, sub.apply(p.rule(c)));
    }
    p = Substitution(a, std::move(next));
  }
  throw SubshiftError(ErrorKind::NoSeedLetter,
                      "no power of the substitution prolongs a letter on the left");
}

Word fixed_point_prefix(const SeedInfo& seed, std::size_t len) {
  Word w(1, seed.seed);
  while (w.size() < len) {
    Word next = seed.power.apply(w);
    if (next.size() == w.size()) {
      // Degenerate growth (e.g. one-letter identity): the point is periodic.
      while (w.size() < len) w += next;
      break;
    }
    w = std::move(next);
  }
  w.resize(len);
  return w;
}

}  // namespace subshift
