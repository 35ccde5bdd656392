#include "subshift/extension.hpp"

#include <numeric>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {

const char* to_string(TreeFailure f) {
  switch (f) {
    case TreeFailure::None: return "none";
    case TreeFailure::Disconnected: return "disconnected";
    case TreeFailure::HasCycle: return "has-cycle";
  }
  return "?";
}

ExtensionGraph extension_graph(const FactorLanguage& lang, const Word& w) {
  if (w.size() + 2 > lang.horizon()) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "extension graph needs factors of length " + std::to_string(w.size() + 2));
  }
  if (!w.empty() && !lang.contains(w)) {
    throw SubshiftError(ErrorKind::NotAFactor, "\"" + w + "\" is not in the language", w);
  }
  ExtensionGraph g;
  g.center = w;
  for (char a : lang.alphabet().letters()) {
    if (lang.contains(a + w)) g.lefts.push_back(a);
    if (lang.contains(w + a)) g.rights.push_back(a);
  }
  for (char a : g.lefts) {
    for (char b : g.rights) {
      if (lang.contains(a + w + b)) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

TreeVerdict is_tree(const ExtensionGraph& g) {
  if (g.vertex_count() == 0) {
    throw SubshiftError(ErrorKind::EmptyGraph, "extension graph of \"" + g.center + "\" is empty",
                        g.center);
  }
  // Union-find over lefts followed by rights.
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto left_id = [&](char a) { return g.lefts.find(a); };
  auto right_id = [&](char b) { return g.lefts.size() + g.rights.find(b); };
  std::size_t components = g.vertex_count();
  for (const auto& [a, b] : g.edges) {
    std::size_t ra = find_root(parent, left_id(a));
    std::size_t rb = find_root(parent, right_id(b));
    if (ra != rb) {
      parent[rb] = ra;
      --components;
    }
  }
  TreeVerdict v;
  if (components > 1) {
    v.failure = TreeFailure::Disconnected;
  } else if (g.edge_count() != g.vertex_count() - 1) {
    v.failure = TreeFailure::HasCycle;
  } else {
    v.tree = true;
  }
  return v;
}

TreeConditionReport scan_tree_condition(const FactorLanguage& lang, std::size_t max_center_len) {
  if (max_center_len + 2 > lang.horizon()) {
    throw SubshiftError(ErrorKind::HorizonExceeded,
                        "scan to center length " + std::to_string(max_center_len) +
                            " needs horizon " + std::to_string(max_center_len + 2));
  }
  TreeConditionReport report;
  report.max_center_len = max_center_len;
  report.centers_checked.assign(max_center_len + 1, 0);

  auto check = [&](const Word& w) {
    TreeVerdict v = is_tree(extension_graph(lang, w));
    ++report.centers_checked[w.size()];
    if (!v.tree) {
      report.witness = w;
      report.failure = v.failure;
      return false;
    }
    return true;
  };

  if (!check(Word{})) return report;
  for (std::size_t k = 1; k <= max_center_len; ++k) {
    for (const Word& w : lang.factors(k)) {
      if (!check(w)) return report;
    }
  }
  report.all_pass = true;
  return report;
}

std::string export_dot(const ExtensionGraph& g) {
  std::ostringstream out;
  out << "graph extensions {\n";
  out << "  label=\"" << (g.center.empty() ? "~" : g.center) << "\";\n";
  out << "  rankdir=LR;\n";
  for (char a : g.lefts) {
    out << "  L" << a << " [label=\"" << a << "\" shape=circle];\n";
  }
  for (char b : g.rights) {
    out << "  R" << b << " [label=\"" << b << "\" shape=doublecircle];\n";
  }
  for (const auto& [a, b] : g.edges) {
    out << "  L" << a << " -- R" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace subshift
