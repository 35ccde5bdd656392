#include "subshift/fundamental.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "subshift/error.hpp"

namespace subshift {

SpanningTreeBasis SpanningTreeBasis::build(const RauzyGraph& g, const Word& base) {
  if (g.vertex_count() == 0) {
    throw SubshiftError(ErrorKind::EmptyGraph, "cannot root a spanning tree in an empty graph");
  }
  SpanningTreeBasis t(g);
  t.base_ = g.require_vertex(base);
  t.in_tree_.assign(g.edge_count(), false);
  t.gen_index_.assign(g.edge_count(), -1);
  t.delta_.assign(g.vertex_count(), {});

  std::vector<bool> visited(g.vertex_count(), false);
  std::vector<RauzyGraph::VertexId> discovery;  // visit order, for the fallback scan
  std::deque<RauzyGraph::VertexId> queue;
  visited[t.base_] = true;
  discovery.push_back(t.base_);
  queue.push_back(t.base_);

  auto claim = [&](RauzyGraph::EdgeId e, RauzyGraph::VertexId from, RauzyGraph::VertexId v,
                   int sign) {
    t.in_tree_[e] = true;
    t.delta_[v] = t.delta_[from];
    t.delta_[v].push_back(SignedEdge{e, sign});
    visited[v] = true;
    discovery.push_back(v);
    queue.push_back(v);
  };

  for (;;) {
    while (!queue.empty()) {
      RauzyGraph::VertexId u = queue.front();
      queue.pop_front();
      for (RauzyGraph::EdgeId e : g.out_edges(u)) {
        if (!visited[g.target(e)]) claim(e, u, g.target(e), +1);
      }
    }
    if (discovery.size() == g.vertex_count()) break;
    // Forward edges alone do not reach everything; walk one incoming edge
    // backwards (first by discovery, then lexicographic) and resume.
    bool found = false;
    for (RauzyGraph::VertexId u : discovery) {
      for (RauzyGraph::EdgeId e : g.in_edges(u)) {
        if (!visited[g.source(e)]) {
          claim(e, u, g.source(e), -1);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      Word missing;
      for (RauzyGraph::VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!visited[v]) {
          missing = g.vertex_word(v);
          break;
        }
      }
      throw SubshiftError(ErrorKind::Disconnected,
                          "vertex \"" + missing + "\" is unreachable from the base", missing);
    }
  }

  for (RauzyGraph::EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!t.in_tree_[e]) t.basis_edges_.push_back(e);
  }
  std::sort(t.basis_edges_.begin(), t.basis_edges_.end(),
            [&](RauzyGraph::EdgeId a, RauzyGraph::EdgeId b) {
              return g.alphabet().word_less(g.edge_word(a), g.edge_word(b));
            });
  for (std::size_t i = 0; i < t.basis_edges_.size(); ++i) {
    t.gen_index_[t.basis_edges_[i]] = static_cast<int>(i);
  }
  return t;
}

std::vector<SignedEdge> SpanningTreeBasis::path_to_base(RauzyGraph::VertexId v) const {
  std::vector<SignedEdge> rev;
  const auto& fwd = delta_[v];
  rev.reserve(fwd.size());
  for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) {
    rev.push_back(SignedEdge{it->edge, -it->sign});
  }
  return rev;
}

GroupoidWord SpanningTreeBasis::class_of_edge(RauzyGraph::EdgeId e) const {
  if (e >= graph_.edge_count()) {
    throw SubshiftError(ErrorKind::UnknownEdge, "edge id out of range");
  }
  if (in_tree_[e]) return {};
  return GroupoidWord::generator(gen_index_[e]);
}

GroupoidWord SpanningTreeBasis::class_of_edge(const Word& edge_word) const {
  return class_of_edge(graph_.require_edge(edge_word));
}

GroupoidWord SpanningTreeBasis::expand_loop(const GraphPath& loop) const {
  if (loop.empty()) return {};
  if (!is_path(graph_, loop)) {
    throw SubshiftError(ErrorKind::NotALoop, "edge sequence is not a path");
  }
  if (path_source(graph_, loop) != path_target(graph_, loop)) {
    throw SubshiftError(ErrorKind::NotALoop, "path endpoints differ");
  }
  GroupoidWord w;
  for (RauzyGraph::EdgeId e : loop.edges) w = w * class_of_edge(e);
  return w;
}

GroupoidWord SpanningTreeBasis::expand_signed(const std::vector<SignedEdge>& path) const {
  GroupoidWord w;
  for (const SignedEdge& s : path) {
    if (s.edge >= graph_.edge_count()) {
      throw SubshiftError(ErrorKind::UnknownEdge, "edge id out of range");
    }
    if (in_tree_[s.edge]) continue;
    w = w * GroupoidWord::generator(gen_index_[s.edge], s.sign < 0 ? -1 : 1);
  }
  return w;
}

ConnectingMap connecting_map(const SpanningTreeBasis& from, const SpanningTreeBasis& to) {
  const RauzyGraph& gm = from.graph();
  const RauzyGraph& gn = to.graph();
  if (!gm.has_central_labels() || !gn.has_central_labels()) {
    throw SubshiftError(ErrorKind::OddOrder, "connecting maps are defined between even orders");
  }
  if (gm.order() < gn.order()) {
    throw SubshiftError(ErrorKind::OrderMismatch, "map runs from the higher order to the lower");
  }
  Word projected_base = project_item(gm, gn.order(), from.base_word());
  if (projected_base != to.base_word()) {
    throw SubshiftError(ErrorKind::BaseMismatch,
                        "base \"" + from.base_word() + "\" restricts to \"" + projected_base +
                            "\", not \"" + to.base_word() + "\"",
                        projected_base);
  }

  ConnectingMap map;
  map.order_from = gm.order();
  map.order_to = gn.order();
  map.rank_from = from.rank();
  map.rank_to = to.rank();
  map.images.reserve(from.rank());
  for (RauzyGraph::EdgeId s : from.basis_edges()) {
    // Defining loop of the generator: base -> source(s), s, target(s) -> base.
    std::vector<SignedEdge> loop = from.path_from_base(gm.source(s));
    loop.push_back(SignedEdge{s, +1});
    auto back = from.path_to_base(gm.target(s));
    loop.insert(loop.end(), back.begin(), back.end());

    std::vector<SignedEdge> projected;
    projected.reserve(loop.size());
    for (const SignedEdge& se : loop) {
      Word w = project_item(gm, gn.order(), gm.edge_word(se.edge));
      projected.push_back(SignedEdge{gn.require_edge(w), se.sign});
    }
    map.images.push_back(to.expand_signed(projected));
  }
  return map;
}

GroupoidWord apply(const ConnectingMap& map, const GroupoidWord& w) {
  GroupoidWord out;
  for (const auto& sym : w.syms()) {
    if (sym.letter < 0 || static_cast<std::size_t>(sym.letter) >= map.rank_from) {
      throw SubshiftError(ErrorKind::InvalidInput, "generator index outside the source rank");
    }
    const GroupoidWord& img = map.images[static_cast<std::size_t>(sym.letter)];
    GroupoidWord factor = sym.exp < 0 ? img.inverse() : img;
    for (int k = std::abs(sym.exp); k > 0; --k) out = out * factor;
  }
  return out;
}

std::vector<std::vector<long long>> abelianization_matrix(const ConnectingMap& map) {
  std::vector<std::vector<long long>> m(map.rank_to, std::vector<long long>(map.rank_from, 0));
  for (std::size_t i = 0; i < map.rank_from; ++i) {
    for (std::size_t j = 0; j < map.rank_to; ++j) {
      m[j][i] = map.images[i].exponent_sum(static_cast<int>(j));
    }
  }
  return m;
}

long long det(std::vector<std::vector<long long>> m) {
  std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw SubshiftError(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    }
  }
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division below is exact.
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::string format_word(const SpanningTreeBasis& basis, const GroupoidWord& w) {
  if (w.identity()) return "1";
  std::string out;
  for (const auto& sym : w.syms()) {
    if (!out.empty()) out += ' ';
    std::size_t ordinal = static_cast<std::size_t>(sym.letter);
    out += basis.graph().edge_word(basis.basis_edges()[ordinal]);
    if (sym.exp != 1) out += "^" + std::to_string(sym.exp);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> rank_profile(const FactorLanguage& lang,
                                                              std::size_t n_from,
                                                              std::size_t n_to) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    std::size_t rank = lang.complexity(2 * n + 1) - lang.complexity(2 * n) + 1;
    out.emplace_back(n, rank);
  }
  return out;
}

}  // namespace subshift
