#include "subshift/return_words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace subshift {

namespace {

void require_factor(const FactorLanguage& lang, const Word& u) {
  if (u.empty() || !lang.contains(u)) {
    throw SubshiftError(ErrorKind::NotAFactor, "'" + u + "' is not a factor", u);
  }
}

}  // namespace

ReturnWordSet try_return_words(const FactorLanguage& lang, const Word& u,
                               std::size_t scan_budget) {
  require_factor(lang, u);
  if (scan_budget < 2 * u.size() + 2) scan_budget = 2 * u.size() + 2;
  const Word prefix = lang.point_prefix(scan_budget);

  ReturnWordSet res;
  res.kind = ReturnWordSet::Kind::Plain;
  res.u1 = u;
  std::unordered_set<Word> seen;
  std::size_t last_discovery_end = 0;
  std::size_t prev = Word::npos;
  for (std::size_t pos = prefix.find(u); pos != Word::npos;
       pos = prefix.find(u, pos + 1)) {
    ++res.occurrences;
    if (prev != Word::npos) {
      const std::size_t gap = pos - prev;
      res.max_gap = std::max(res.max_gap, gap);
      Word v = prefix.substr(prev, gap);
      if (seen.insert(v).second) {
        last_discovery_end = pos + u.size();
      }
    }
    prev = pos;
  }
  res.words.assign(seen.begin(), seen.end());
  res.words = sorted_unique_words(std::move(res.words), lang.alphabet());
  res.complete = res.occurrences >= 2 &&
                 last_discovery_end <= (prefix.size() / 4) * 3 &&
                 prefix.size() >= 4 * (res.max_gap + u.size());
  return res;
}

ReturnWordSet return_words(const FactorLanguage& lang, const Word& u,
                           std::size_t scan_budget) {
  ReturnWordSet res = try_return_words(lang, u, scan_budget);
  if (!res.complete) {
    throw SubshiftError(ErrorKind::Incomplete,
                        "return-word scan for '" + u + "' did not stabilize within " +
                            std::to_string(scan_budget) + " letters; raise the budget",
                        u);
  }
  return res;
}

namespace {

ReturnWordSet conjugate_to_delayed(ReturnWordSet plain, const Word& u1, const Word& u2,
                                   const Alphabet& alphabet) {
  ReturnWordSet res;
  res.kind = ReturnWordSet::Kind::Delayed;
  res.u1 = u1;
  res.u2 = u2;
  res.complete = plain.complete;
  res.occurrences = plain.occurrences;
  res.max_gap = plain.max_gap;
  res.words.reserve(plain.words.size());
  for (const Word& r : plain.words) {
    // r.u1u2 starts with u1u2, so r.u1 starts with u1 and the quotient below
    // is always defined.
    Word w = r + u1;
    res.words.push_back(w.substr(u1.size()));
  }
  res.words = sorted_unique_words(std::move(res.words), alphabet);
  return res;
}

}  // namespace

ReturnWordSet try_delayed_return_words(const FactorLanguage& lang, const Word& u1,
                                       const Word& u2, std::size_t scan_budget) {
  if (u1.empty() || u2.empty()) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        "both parts of a delayed return query must be nonempty");
  }
  return conjugate_to_delayed(try_return_words(lang, u1 + u2, scan_budget), u1, u2,
                              lang.alphabet());
}

ReturnWordSet delayed_return_words(const FactorLanguage& lang, const Word& u1,
                                   const Word& u2, std::size_t scan_budget) {
  ReturnWordSet res = try_delayed_return_words(lang, u1, u2, scan_budget);
  if (!res.complete) {
    throw SubshiftError(ErrorKind::Incomplete,
                        "return-word scan for '" + u1 + "'.'" + u2 +
                            "' did not stabilize within " + std::to_string(scan_budget) +
                            " letters; raise the budget",
                        u1 + u2);
  }
  return res;
}

ReturnWordSet return_set_at(const FactorLanguage& lang, const PointWindow& window,
                            std::size_t scan_budget) {
  if (window.n() == 0 || window.word.size() % 2 != 0) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        "point window must have positive even length");
  }
  require_factor(lang, window.word);
  return delayed_return_words(lang, window.left(), window.right(), scan_budget);
}

GraphPath lift_return_word(const RauzyGraph& g, const FactorLanguage& lang,
                           const PointWindow& window, const Word& r) {
  if (g.order() != 2 * window.n()) {
    throw SubshiftError(ErrorKind::OrderMismatch,
                        "graph order " + std::to_string(g.order()) +
                            " does not match window half-length " +
                            std::to_string(window.n()));
  }
  const auto base = g.require_vertex(window.word);
  GraphPath path = path_from_traced_word(g, lang, window.left() + r + window.right());
  if (path.empty() || path_source(g, path) != base || path_target(g, path) != base) {
    throw SubshiftError(ErrorKind::NotALoop,
                        "'" + r + "' does not label a cycle at '" + window.word + "'", r);
  }
  return path;
}

CodeCheckResult is_code(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (const Word& w : words) {
    if (w.empty()) {
      throw SubshiftError(ErrorKind::InvalidInput, "code words must be nonempty");
    }
  }
  CodeCheckResult res;
  res.is_code = true;

  // Sardinas-Patterson with parent tracking.  A dangling suffix d carries two
  // codeword sequences L, R with cat(L) = cat(R).d; reaching d inside the
  // code closes a genuine double factorization.
  struct State {
    std::vector<Word> left, right;
  };
  std::map<Word, State> states;
  std::deque<Word> queue;
  auto offer = [&](const Word& d, State s) {
    if (states.emplace(d, std::move(s)).second) queue.push_back(d);
  };
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (x.size() < y.size() && y.compare(0, x.size(), x) == 0) {
        offer(y.substr(x.size()), State{{y}, {x}});
      }
    }
  }
  while (!queue.empty()) {
    Word d = std::move(queue.front());
    queue.pop_front();
    const State& st = states.at(d);
    for (const Word& c : words) {
      if (c == d) {
        std::vector<Word> fa = st.left;
        std::vector<Word> fb = st.right;
        fb.push_back(c);
        if (fa != fb) {
          res.is_code = false;
          Word w;
          for (const Word& p : fa) w += p;
          res.ambiguous_word = std::move(w);
          res.factorization_a = std::move(fa);
          res.factorization_b = std::move(fb);
          return res;
        }
      } else if (c.size() < d.size() && d.compare(0, c.size(), c) == 0) {
        State next = st;
        next.right.push_back(c);
        offer(d.substr(c.size()), std::move(next));
      } else if (d.size() < c.size() && c.compare(0, d.size(), d) == 0) {
        State next;
        next.left = st.right;
        next.left.push_back(c);
        next.right = st.left;
        offer(c.substr(d.size()), std::move(next));
      }
    }
  }
  return res;
}

namespace {

Word min_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r = w.substr(k) + w.substr(0, k);
    if (r < best) best = r;
  }
  return best;
}

// All factorizations of w into codewords, as sorted cut-boundary lists
// (boundary 0 included, |w| excluded: cuts live on the cycle).
void factorizations(const Word& w, const std::vector<Word>& words, std::size_t pos,
                    std::vector<std::size_t>& cuts,
                    std::vector<std::vector<std::size_t>>& out) {
  if (pos == w.size()) {
    out.push_back(cuts);
    return;
  }
  for (const Word& c : words) {
    if (pos + c.size() <= w.size() && w.compare(pos, c.size(), c) == 0) {
      cuts.push_back(pos);
      factorizations(w, words, pos + c.size(), cuts, out);
      cuts.pop_back();
    }
  }
}

}  // namespace

CircularCheckResult check_circular_bruteforce(std::vector<Word> words,
                                              std::size_t max_total_len) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  CircularCheckResult res;
  for (const Word& w : words) {
    if (w.empty()) {
      throw SubshiftError(ErrorKind::InvalidInput, "code words must be nonempty");
    }
  }
  // Distinct concatenations of codewords up to the length bound.
  std::set<Word> closure;
  std::deque<Word> queue{Word{}};
  std::set<Word> visited{Word{}};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (const Word& c : words) {
      Word next = cur + c;
      if (next.size() > max_total_len) continue;
      if (visited.insert(next).second) {
        closure.insert(next);
        queue.push_back(next);
      }
      if (visited.size() > 2'000'000) {
        throw SubshiftError(ErrorKind::Incomplete,
                            "circular check exceeded its enumeration cap");
      }
    }
  }
  // For each cyclic word, collect the cut sets of every factorization of
  // every rotation, normalized to the canonical rotation's coordinates.
  std::map<Word, std::set<std::vector<std::size_t>>> cut_sets;
  for (const Word& w : closure) {
    const std::size_t n = w.size();
    const Word canon = min_rotation(w);
    std::size_t t = 0;
    while (w.substr(t) + w.substr(0, t) != canon) ++t;
    for (std::size_t k = 0; k < n; ++k) {
      Word rot = w.substr(k) + w.substr(0, k);
      std::vector<std::vector<std::size_t>> found;
      std::vector<std::size_t> cuts;
      factorizations(rot, words, 0, cuts, found);
      for (auto& f : found) {
        for (auto& b : f) b = (k + b + n - t) % n;
        std::sort(f.begin(), f.end());
        cut_sets[canon].insert(std::move(f));
      }
    }
    const auto& sets = cut_sets[canon];
    if (sets.size() >= 2) {
      res.unambiguous = false;
      res.witness_cycle = canon;
      auto it = sets.begin();
      res.cuts_a = *it;
      res.cuts_b = *std::next(it);
      return res;
    }
  }
  return res;
}

std::vector<std::pair<std::size_t, std::size_t>> min_return_length_profile(
    const FactorLanguage& lang, std::size_t n_from, std::size_t n_to,
    std::size_t scan_budget) {
  if (n_from < 1 || n_from > n_to || 2 * n_to > lang.horizon()) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "profile range outside horizon " + std::to_string(lang.horizon()));
  }
  std::vector<std::pair<std::size_t, std::size_t>> profile;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    ReturnWordSet set = return_set_at(lang, default_window(lang, n), scan_budget);
    std::size_t min_len = 0;
    for (const Word& w : set.words) {
      if (min_len == 0 || w.size() < min_len) min_len = w.size();
    }
    profile.emplace_back(n, min_len);
  }
  return profile;
}

}  // namespace subshift
