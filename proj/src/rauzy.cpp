#include "subshift/rauzy.hpp"

#include <algorithm>
#include <sstream>

namespace subshift {

RauzyGraph::RauzyGraph(std::size_t order, std::vector<Word> vertices,
                       std::vector<Word> edges, Alphabet alphabet)
    : order_(order), alphabet_(std::move(alphabet)) {
  vertices_ = sorted_unique_words(std::move(vertices), alphabet_);
  edges_ = sorted_unique_words(std::move(edges), alphabet_);
  for (const Word& v : vertices_) {
    alphabet_.require_word(v);
    if (v.size() != order_) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          "vertex word '" + v + "' does not have length " +
                              std::to_string(order_));
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_idx_[vertices_[i]] = i;
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  src_.reserve(edges_.size());
  tgt_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Word& w = edges_[e];
    alphabet_.require_word(w);
    if (w.size() != order_ + 1) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          "edge word '" + w + "' does not have length " +
                              std::to_string(order_ + 1));
    }
    auto s = vertex_idx_.find(w.substr(0, order_));
    auto t = vertex_idx_.find(w.substr(1, order_));
    if (s == vertex_idx_.end() || t == vertex_idx_.end()) {
      throw SubshiftError(ErrorKind::InvalidInput,
                          "edge word '" + w + "' has an endpoint outside the vertex set");
    }
    edge_idx_[w] = e;
    src_.push_back(s->second);
    tgt_.push_back(t->second);
    out_[s->second].push_back(e);
    in_[t->second].push_back(e);
  }
}

std::optional<RauzyGraph::VertexId> RauzyGraph::find_vertex(const Word& w) const {
  auto it = vertex_idx_.find(w);
  if (it == vertex_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<RauzyGraph::EdgeId> RauzyGraph::find_edge(const Word& w) const {
  auto it = edge_idx_.find(w);
  if (it == edge_idx_.end()) return std::nullopt;
  return it->second;
}

RauzyGraph::VertexId RauzyGraph::require_vertex(const Word& w) const {
  auto v = find_vertex(w);
  if (!v) {
    throw SubshiftError(ErrorKind::UnknownEdge, "'" + w + "' is not a vertex", w);
  }
  return *v;
}

RauzyGraph::EdgeId RauzyGraph::require_edge(const Word& w) const {
  auto e = find_edge(w);
  if (!e) {
    throw SubshiftError(ErrorKind::UnknownEdge, "'" + w + "' is not an edge", w);
  }
  return *e;
}

char RauzyGraph::central_label(EdgeId e) const {
  if (!has_central_labels()) {
    throw SubshiftError(ErrorKind::OddOrder,
                        "central labels require an even graph order, got " +
                            std::to_string(order_));
  }
  return edges_[e][order_ / 2];
}

RauzyGraph build_rauzy(const FactorLanguage& lang, std::size_t n) {
  if (n + 1 > lang.horizon()) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "order " + std::to_string(n) + " needs horizon at least " +
                            std::to_string(n + 1));
  }
  std::vector<Word> vertices =
      n == 0 ? std::vector<Word>{Word{}} : lang.factors(n);
  return RauzyGraph(n, std::move(vertices), lang.factors(n + 1), lang.alphabet());
}

bool is_path(const RauzyGraph& g, const GraphPath& p) {
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
    if (g.target(p.edges[i]) != g.source(p.edges[i + 1])) return false;
  }
  return true;
}

RauzyGraph::VertexId path_source(const RauzyGraph& g, const GraphPath& p) {
  if (p.empty()) {
    throw SubshiftError(ErrorKind::InvalidInput, "empty path has no endpoints");
  }
  return g.source(p.edges.front());
}

RauzyGraph::VertexId path_target(const RauzyGraph& g, const GraphPath& p) {
  if (p.empty()) {
    throw SubshiftError(ErrorKind::InvalidInput, "empty path has no endpoints");
  }
  return g.target(p.edges.back());
}

Word traced_word(const RauzyGraph& g, const GraphPath& p) {
  if (p.empty()) return {};
  Word w = g.vertex_word(g.source(p.edges.front()));
  for (auto e : p.edges) w += g.edge_word(e).back();
  return w;
}

Word extension_word(const RauzyGraph& g, const GraphPath& p) {
  Word w;
  for (auto e : p.edges) w += g.edge_word(e).back();
  return w;
}

Word central_word(const RauzyGraph& g, const GraphPath& p) {
  Word w;
  for (auto e : p.edges) w += g.central_label(e);
  return w;
}

namespace {

// Shortest, leftmost factor of `window` outside the language, as
// (word, offset within window).
std::pair<Word, std::size_t> minimal_offender(const FactorLanguage& lang,
                                              const Word& window) {
  for (std::size_t len = 1; len <= window.size(); ++len) {
    for (std::size_t off = 0; off + len <= window.size(); ++off) {
      Word f = window.substr(off, len);
      if (!lang.contains(f)) return {f, off};
    }
  }
  return {window, 0};
}

}  // namespace

GraphPath path_from_traced_word(const RauzyGraph& g, const FactorLanguage& lang,
                                const Word& traced) {
  const std::size_t w = g.order() + 1;
  GraphPath path;
  if (traced.size() < g.order()) {
    throw SubshiftError(ErrorKind::InvalidInput,
                        "traced word shorter than the graph order");
  }
  for (std::size_t i = 0; i + w <= traced.size(); ++i) {
    Word window = traced.substr(i, w);
    auto e = g.find_edge(window);
    if (!e) {
      auto [word, off] = minimal_offender(lang, window);
      throw SubshiftError(ErrorKind::NotAdmissible,
                          "window '" + word + "' at offset " +
                              std::to_string(i + off) + " is not in the language",
                          word);
    }
    path.edges.push_back(*e);
  }
  return path;
}

GraphPath lift_word_to_path(const RauzyGraph& g, const FactorLanguage& lang,
                            const Word& start, const Word& u) {
  g.require_vertex(start);
  g.alphabet().require_word(u);
  return path_from_traced_word(g, lang, start + u);
}

bool strongly_connected(const RauzyGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<RauzyGraph::VertexId> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto e : forward ? g.out_edges(v) : g.in_edges(v)) {
        auto w = forward ? g.target(e) : g.source(e);
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reach(true) && reach(false);
}

Word project_item(const RauzyGraph& g, std::size_t target_order, const Word& item) {
  if (target_order > g.order() || (g.order() - target_order) % 2 != 0) {
    throw SubshiftError(ErrorKind::OrderMismatch,
                        "cannot project order " + std::to_string(g.order()) +
                            " onto order " + std::to_string(target_order));
  }
  const std::size_t d = (g.order() - target_order) / 2;
  if (item.size() == g.order()) {
    g.require_vertex(item);
    return item.substr(d, target_order);
  }
  if (item.size() == g.order() + 1) {
    g.require_edge(item);
    return item.substr(d, target_order + 1);
  }
  throw SubshiftError(ErrorKind::OrderMismatch,
                      "item '" + item + "' is neither a vertex nor an edge word of order " +
                          std::to_string(g.order()));
}

GraphPath project_path(const RauzyGraph& gm, const RauzyGraph& gn, const GraphPath& p) {
  if (gn.order() > gm.order() || (gm.order() - gn.order()) % 2 != 0) {
    throw SubshiftError(ErrorKind::OrderMismatch,
                        "cannot project paths from order " + std::to_string(gm.order()) +
                            " onto order " + std::to_string(gn.order()));
  }
  GraphPath out;
  out.edges.reserve(p.edges.size());
  for (auto e : p.edges) {
    out.edges.push_back(gn.require_edge(project_item(gm, gn.order(), gm.edge_word(e))));
  }
  return out;
}

std::string export_dot(const RauzyGraph& g) {
  std::ostringstream os;
  os << "digraph rauzy_order" << g.order() << " {\n";
  os << "  rankdir=LR;\n  node [shape=circle];\n";
  for (const Word& v : g.vertex_words()) {
    os << "  \"" << (v.empty() ? "~" : v) << "\";\n";
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Word& sw = g.vertex_word(g.source(e));
    const Word& tw = g.vertex_word(g.target(e));
    os << "  \"" << (sw.empty() ? "~" : sw) << "\" -> \"" << (tw.empty() ? "~" : tw)
       << "\" [label=\"" << g.edge_word(e);
    if (g.has_central_labels()) os << " / " << g.central_label(e);
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace subshift
