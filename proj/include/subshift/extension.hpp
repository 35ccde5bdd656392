// extension.hpp -- bipartite extension graphs and the tree condition
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "subshift/language.hpp"
#include "subshift/word.hpp"

namespace subshift {

/// Bipartite graph of a factor w: left vertices are the letters a with aw in
/// the language, right vertices the letters b with wb in it, and (a, b) is an
/// edge iff awb is.  Letter lists follow alphabet order.
struct ExtensionGraph {
  Word center;
  std::string lefts;
  std::string rights;
  std::vector<std::pair<char, char>> edges;

  std::size_t vertex_count() const { return lefts.size() + rights.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

/// Requires |w| + 2 within the horizon and w in the language (NotAFactor).
ExtensionGraph extension_graph(const FactorLanguage& lang, const Word& w);

enum class TreeFailure { None, Disconnected, HasCycle };

const char* to_string(TreeFailure f);

struct TreeVerdict {
  bool tree = false;
  TreeFailure failure = TreeFailure::None;
};

/// A finite graph is a tree iff it is connected with |E| = |V| - 1.
/// Disconnection is reported in preference to a cycle when both occur.
/// Throws EmptyGraph when there are no vertices at all.
TreeVerdict is_tree(const ExtensionGraph& g);

struct TreeConditionReport {
  bool all_pass = false;
  std::size_t max_center_len = 0;
  std::vector<std::size_t> centers_checked;  ///< indexed by center length
  Word witness;                              ///< first failing center
  TreeFailure failure = TreeFailure::None;
};

/// Checks every factor from the empty word up to length maxCenterLen, shorter
/// centers first and same-length centers in alphabet order, stopping at the
/// first failure.
TreeConditionReport scan_tree_condition(const FactorLanguage& lang, std::size_t max_center_len);

/// Deterministic DOT rendering of the bipartite graph.
std::string export_dot(const ExtensionGraph& g);

}  // namespace subshift
