// fundamental.hpp -- fundamental groups of Rauzy graphs via spanning trees
//
// A spanning tree T of the graph turns every edge s outside T into a free
// generator g_s of the fundamental group at the base vertex: g_s is the class
// of (tree path base->source(s)) . s . (tree path target(s)->base).  Edges
// inside T expand to the identity.  A loop factors as the product of the
// generators of the non-tree edges it crosses, in order.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "subshift/free_group.hpp"
#include "subshift/language.hpp"
#include "subshift/rauzy.hpp"

namespace subshift {

/// Tree edge traversed forward (+1) or backward (-1).
struct SignedEdge {
  RauzyGraph::EdgeId edge;
  int sign;
};

class SpanningTreeBasis {
 public:
  /// Deterministic BFS tree rooted at the base vertex: from each visited
  /// vertex, outgoing edges in lexicographic order first, then incoming ones
  /// (Rauzy graphs of irreducible shifts are strongly connected, so the
  /// outgoing sweep normally suffices).  Throws Disconnected if the graph is
  /// not connected as an undirected graph.
  static SpanningTreeBasis build(const RauzyGraph& g, const Word& base);

  const RauzyGraph& graph() const { return graph_; }
  RauzyGraph::VertexId base() const { return base_; }
  const Word& base_word() const { return graph_.vertex_word(base_); }

  bool in_tree(RauzyGraph::EdgeId e) const { return in_tree_[e]; }
  /// Non-tree edges in lexicographic order; generator i is basis_edges()[i].
  const std::vector<RauzyGraph::EdgeId>& basis_edges() const { return basis_edges_; }
  std::size_t rank() const { return basis_edges_.size(); }

  /// Tree path base -> v as signed edges.
  const std::vector<SignedEdge>& path_from_base(RauzyGraph::VertexId v) const {
    return delta_[v];
  }
  /// Tree path v -> base (the reverse of path_from_base).
  std::vector<SignedEdge> path_to_base(RauzyGraph::VertexId v) const;

  /// Identity for tree edges, the generator g_e for the rest.
  GroupoidWord class_of_edge(RauzyGraph::EdgeId e) const;
  GroupoidWord class_of_edge(const Word& edge_word) const;  ///< UnknownEdge

  /// Image in the fundamental group of a directed loop at the base: the
  /// product of the generators of its non-tree edges.  Throws NotALoop.
  GroupoidWord expand_loop(const GraphPath& loop) const;

  /// Expansion of an arbitrary signed edge sequence; inverse signs map tree
  /// edges to nothing and basis edges to inverse generators.
  GroupoidWord expand_signed(const std::vector<SignedEdge>& path) const;

 private:
  SpanningTreeBasis(RauzyGraph g) : graph_(std::move(g)) {}

  RauzyGraph graph_;
  RauzyGraph::VertexId base_ = 0;
  std::vector<bool> in_tree_;
  std::vector<RauzyGraph::EdgeId> basis_edges_;
  std::vector<int> gen_index_;  // edge -> generator ordinal, -1 for tree edges
  std::vector<std::vector<SignedEdge>> delta_;
};

/// Homomorphism between fundamental groups of two graph levels induced by the
/// central projection: each level-m generator maps to the expansion, at level
/// n, of its projected defining loop.
struct ConnectingMap {
  std::size_t order_from = 0, order_to = 0;
  std::size_t rank_from = 0, rank_to = 0;
  std::vector<GroupoidWord> images;  ///< indexed by source generator ordinal
};

/// Requires even orders, order(from) >= order(to), and the target base equal
/// to the projection of the source base (else BaseMismatch).
ConnectingMap connecting_map(const SpanningTreeBasis& from, const SpanningTreeBasis& to);

/// Homomorphic application of the map to a word over source generators.
GroupoidWord apply(const ConnectingMap& map, const GroupoidWord& w);

/// Exponent-sum matrix of the map: rows are target generators, columns source
/// generators.
std::vector<std::vector<long long>> abelianization_matrix(const ConnectingMap& map);

/// Determinant of a square integer matrix (Bareiss elimination).
long long det(std::vector<std::vector<long long>> m);

/// (n, rank of the order-2n graph) for n in range; the rank is
/// |edges| - |vertices| + 1 = p(2n+1) - p(2n) + 1.
std::vector<std::pair<std::size_t, std::size_t>> rank_profile(const FactorLanguage& lang,
                                                              std::size_t n_from,
                                                              std::size_t n_to);

/// Serialization naming each generator by its edge word, e.g. "aab bab^-1";
/// the identity renders as "1".
std::string format_word(const SpanningTreeBasis& basis, const GroupoidWord& w);

}  // namespace subshift
