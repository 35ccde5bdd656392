// rauzy.hpp -- Rauzy graphs of a factor language
//
// The graph of order n has the length-n factors as vertices and the
// length-(n+1) factors as edges; the edge a1..a(n+1) runs from a1..an to
// a2..a(n+1).  Even orders 2n additionally carry the central labeling that
// reads the middle letter of an edge.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "subshift/language.hpp"
#include "subshift/word.hpp"

namespace subshift {

class RauzyGraph {
 public:
  using VertexId = std::size_t;
  using EdgeId = std::size_t;

  /// Explicit construction; build_rauzy is the language-driven factory.
  /// Vertex words must have length order, edge words order+1, and both
  /// endpoint words of every edge must appear among the vertices.
  RauzyGraph(std::size_t order, std::vector<Word> vertices, std::vector<Word> edges,
             Alphabet alphabet);

  std::size_t order() const { return order_; }
  const Alphabet& alphabet() const { return alphabet_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Word>& vertex_words() const { return vertices_; }
  const std::vector<Word>& edge_words() const { return edges_; }
  const Word& vertex_word(VertexId v) const { return vertices_[v]; }
  const Word& edge_word(EdgeId e) const { return edges_[e]; }

  std::optional<VertexId> find_vertex(const Word& w) const;
  std::optional<EdgeId> find_edge(const Word& w) const;
  VertexId require_vertex(const Word& w) const;  ///< throws UnknownEdge
  EdgeId require_edge(const Word& w) const;      ///< throws UnknownEdge

  VertexId source(EdgeId e) const { return src_[e]; }
  VertexId target(EdgeId e) const { return tgt_[e]; }

  /// Edge ids in lexicographic edge-word order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }

  bool has_central_labels() const { return order_ % 2 == 0; }

  /// Middle letter of the edge word; defined only for even orders.
  char central_label(EdgeId e) const;  ///< throws OddOrder

 private:
  std::size_t order_;
  Alphabet alphabet_;
  std::vector<Word> vertices_;
  std::vector<Word> edges_;
  std::vector<VertexId> src_, tgt_;
  std::vector<std::vector<EdgeId>> out_, in_;
  std::unordered_map<Word, VertexId> vertex_idx_;
  std::unordered_map<Word, EdgeId> edge_idx_;
};

/// Graph of order n for the language; requires n + 1 <= horizon.
RauzyGraph build_rauzy(const FactorLanguage& lang, std::size_t n);

/// Edge sequence; consecutive edges must be composable (target = source).
struct GraphPath {
  std::vector<RauzyGraph::EdgeId> edges;
  std::size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
};

bool is_path(const RauzyGraph& g, const GraphPath& p);
RauzyGraph::VertexId path_source(const RauzyGraph& g, const GraphPath& p);
RauzyGraph::VertexId path_target(const RauzyGraph& g, const GraphPath& p);

/// Word traced by the path: source word followed by the last letter of each
/// edge.  Empty for the empty path.
Word traced_word(const RauzyGraph& g, const GraphPath& p);

/// Last letter of each edge; the traced word minus its start vertex.
Word extension_word(const RauzyGraph& g, const GraphPath& p);

/// Concatenated central labels; even orders only.
Word central_word(const RauzyGraph& g, const GraphPath& p);

/// Path whose traced word is exactly `traced`: one edge per window of length
/// order+1 read at stride 1.  Throws NotAdmissible naming the shortest
/// leftmost factor outside the language together with its absolute offset.
GraphPath path_from_traced_word(const RauzyGraph& g, const FactorLanguage& lang,
                                const Word& traced);

/// Unique path that starts at `start` and appends the letters of u, one edge
/// per letter; its traced word is start.u and its length is |u|.
GraphPath lift_word_to_path(const RauzyGraph& g, const FactorLanguage& lang,
                            const Word& start, const Word& u);

bool strongly_connected(const RauzyGraph& g);

/// Central restriction of a vertex or edge word of g to the target order;
/// requires same parity and target <= order.  Length-preserving on nothing:
/// strips (order - target)/2 letters from both ends.
Word project_item(const RauzyGraph& g, std::size_t target_order, const Word& item);

/// Edge-wise projection of a path of gm onto gn.
GraphPath project_path(const RauzyGraph& gm, const RauzyGraph& gn, const GraphPath& p);

/// Deterministic DOT rendering (vertices, then edges, in stored order).
std::string export_dot(const RauzyGraph& g);

}  // namespace subshift
