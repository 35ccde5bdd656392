#include "subshift/free_group.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {

FreeGroupWord to_group_word(const Word& w) {
  std::vector<Sym<char>> syms;
  syms.reserve(w.size());
  for (char c : w) syms.push_back({c, 1});
  return FreeGroupWord::raw(std::move(syms));
}

std::string format_word(const FreeGroupWord& w) {
  if (w.identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syms()) {
    if (!first) os << ' ';
    first = false;
    os << s.letter;
    if (s.exp < 0) os << "^-1";
  }
  return os.str();
}

FreeGroupWord parse_word(const std::string& text) {
  std::vector<Sym<char>> syms;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;  // identity token
    int exp = 1;
    if (tok.size() > 1) {
      auto caret = tok.find('^');
      if (caret == std::string::npos || tok.substr(caret) != "^-1" || caret != 1) {
        throw SubshiftError(ErrorKind::InvalidInput,
                            "cannot parse group-word token '" + tok + "'");
      }
      exp = -1;
      tok = tok.substr(0, 1);
    }
    syms.push_back({tok[0], exp});
  }
  return FreeGroupWord::raw(std::move(syms));
}

namespace {

// Mutable multigraph used during folding; vertices are union-find classes.
struct FoldArena {
  std::vector<int> parent;
  // edges as (src, letter, tgt); dead entries are marked by src < 0.
  std::vector<std::array<int, 3>> edges;

  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  // Merges the class of b into the class of a (lower root wins for
  // determinism when no shuffle seed is given).
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

StallingsGraph StallingsGraph::fold(std::span<const FreeGroupWord> generators,
                                    std::optional<std::uint64_t> shuffle_seed) {
  FoldArena arena;
  arena.parent.push_back(0);  // base
  for (const FreeGroupWord& g : generators) {
    int at = 0;
    const auto& syms = g.syms();
    for (std::size_t i = 0; i < syms.size(); ++i) {
      int next;
      if (i + 1 == syms.size()) {
        next = 0;
      } else {
        next = static_cast<int>(arena.parent.size());
        arena.parent.push_back(next);
      }
      if (syms[i].exp > 0) {
        arena.edges.push_back({at, syms[i].letter, next});
      } else {
        arena.edges.push_back({next, syms[i].letter, at});
      }
      at = next;
    }
  }

  std::mt19937_64 rng(shuffle_seed.value_or(0));
  // Fold to a deterministic and co-deterministic graph: any two edges that
  // share a label and an endpoint on the same side get their other endpoints
  // identified; parallel duplicates collapse.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> order(arena.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t ii = 0; ii < order.size() && !changed; ++ii) {
      auto& e = arena.edges[order[ii]];
      if (e[0] < 0) continue;
      const int es = arena.find(e[0]);
      const int et = arena.find(e[2]);
      for (std::size_t jj = 0; jj < order.size(); ++jj) {
        if (order[jj] == order[ii]) continue;
        auto& f = arena.edges[order[jj]];
        if (f[0] < 0 || f[1] != e[1]) continue;
        const int fs = arena.find(f[0]);
        const int ft = arena.find(f[2]);
        if (es == fs && et == ft) {
          f[0] = -1;  // parallel duplicate
          changed = true;
          break;
        }
        if (es == fs) {
          arena.unite(et, ft);
          changed = true;
          break;
        }
        if (et == ft) {
          arena.unite(es, fs);
          changed = true;
          break;
        }
      }
    }
  }

  // Normalize classes and strip hair: a non-base vertex of total degree one
  // is never visited by a reduced word, so it does not affect membership.
  auto degree_prune = [&] {
    bool pruned = true;
    while (pruned) {
      pruned = false;
      std::map<int, int> degree;
      for (auto& e : arena.edges) {
        if (e[0] < 0) continue;
        degree[arena.find(e[0])]++;
        degree[arena.find(e[2])]++;
      }
      for (auto& e : arena.edges) {
        if (e[0] < 0) continue;
        const int s = arena.find(e[0]);
        const int t = arena.find(e[2]);
        const int b = arena.find(0);
        if ((degree[s] == 1 && s != b) || (degree[t] == 1 && t != b)) {
          e[0] = -1;
          pruned = true;
        }
      }
    }
  };
  degree_prune();

  // Canonical renumbering: BFS from the base, letters ascending, outgoing
  // before incoming.
  std::map<int, std::map<char, int>> out, in;
  for (auto& e : arena.edges) {
    if (e[0] < 0) continue;
    out[arena.find(e[0])][static_cast<char>(e[1])] = arena.find(e[2]);
    in[arena.find(e[2])][static_cast<char>(e[1])] = arena.find(e[0]);
  }
  std::map<int, int> id;
  std::vector<int> bfs{arena.find(0)};
  id[arena.find(0)] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const int v = bfs[head];
    auto visit = [&](int w) {
      if (id.emplace(w, static_cast<int>(bfs.size())).second) bfs.push_back(w);
    };
    std::vector<char> letters;
    for (auto& [c, _] : out[v]) letters.push_back(c);
    for (auto& [c, _] : in[v]) letters.push_back(c);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    for (char c : letters) {
      if (auto it = out[v].find(c); it != out[v].end()) visit(it->second);
      if (auto it = in[v].find(c); it != in[v].end()) visit(it->second);
    }
  }

  StallingsGraph g;
  g.out_.resize(bfs.size());
  g.in_.resize(bfs.size());
  for (auto& [v, m] : out) {
    for (auto& [c, w] : m) {
      g.out_[id.at(v)][c] = id.at(w);
      g.in_[id.at(w)][c] = id.at(v);
    }
  }
  return g;
}

std::size_t StallingsGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& m : out_) n += m.size();
  return n;
}

std::vector<std::tuple<int, char, int>> StallingsGraph::edges() const {
  std::vector<std::tuple<int, char, int>> es;
  for (std::size_t v = 0; v < out_.size(); ++v) {
    for (const auto& [c, w] : out_[v]) es.emplace_back(static_cast<int>(v), c, w);
  }
  return es;
}

bool StallingsGraph::member(const FreeGroupWord& w) const {
  if (out_.empty()) return w.identity();
  int at = 0;
  for (const auto& s : w.syms()) {
    const auto& table = s.exp > 0 ? out_[at] : in_[at];
    auto it = table.find(s.letter);
    if (it == table.end()) return false;
    at = it->second;
  }
  return at == 0;
}

std::size_t StallingsGraph::rank() const {
  return edge_count() - vertex_count() + 1;
}

std::string StallingsGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph stallings {\n  rankdir=LR;\n";
  os << "  0 [shape=doublecircle];\n";
  for (std::size_t v = 1; v < out_.size(); ++v) {
    os << "  " << v << " [shape=circle];\n";
  }
  for (const auto& [s, c, t] : edges()) {
    os << "  " << s << " -> " << t << " [label=\"" << c << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

bool is_basis_of_full_group(std::span<const FreeGroupWord> words, const Alphabet& alphabet) {
  if (words.size() != alphabet.size()) return false;
  StallingsGraph g = StallingsGraph::fold(words);
  if (g.vertex_count() != 1) return false;
  for (std::size_t r = 0; r < alphabet.size(); ++r) {
    if (!g.member(FreeGroupWord::generator(alphabet.letter(r)))) return false;
  }
  return true;
}

bool is_basis_of_full_group(std::span<const Word> words, const Alphabet& alphabet) {
  std::vector<FreeGroupWord> gens;
  gens.reserve(words.size());
  for (const Word& w : words) {
    alphabet.require_word(w);
    gens.push_back(to_group_word(w));
  }
  return is_basis_of_full_group(std::span<const FreeGroupWord>(gens), alphabet);
}

bool subgroup_equals(std::span<const FreeGroupWord> a, std::span<const FreeGroupWord> b) {
  return StallingsGraph::fold(a) == StallingsGraph::fold(b);
}

}  // namespace subshift
