#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "subshift/error.hpp"
#include "subshift/rauzy.hpp"

using namespace subshift;

namespace {

FactorLanguage fib(std::size_t h = 10) {
  return build_language(Substitution(Alphabet("ab"), {{'a', "ab"}, {'b', "a"}}), h);
}

GraphPath path_of(const RauzyGraph& g, const std::vector<Word>& edge_words) {
  GraphPath p;
  for (const auto& w : edge_words) p.edges.push_back(g.require_edge(w));
  return p;
}

}  // namespace

TEST_CASE("order-2 graph of the golden-mean shift") {
  auto lang = fib();
  auto g = build_rauzy(lang, 2);
  CHECK(g.order() == 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 4);
  CHECK(g.vertex_words() == std::vector<Word>{"aa", "ab", "ba"});
  CHECK(g.edge_words() == std::vector<Word>{"aab", "aba", "baa", "bab"});

  auto src_word = [&](const Word& e) { return g.vertex_word(g.source(g.require_edge(e))); };
  auto tgt_word = [&](const Word& e) { return g.vertex_word(g.target(g.require_edge(e))); };
  CHECK(src_word("aab") == "aa");
  CHECK(tgt_word("aab") == "ab");
  CHECK(src_word("aba") == "ab");
  CHECK(tgt_word("aba") == "ba");
  CHECK(src_word("baa") == "ba");
  CHECK(tgt_word("baa") == "aa");
  CHECK(src_word("bab") == "ba");
  CHECK(tgt_word("bab") == "ab");

  CHECK(g.has_central_labels());
  CHECK(g.central_label(g.require_edge("aab")) == 'a');
  CHECK(g.central_label(g.require_edge("aba")) == 'b');
  CHECK(g.central_label(g.require_edge("baa")) == 'a');
  CHECK(g.central_label(g.require_edge("bab")) == 'a');

  CHECK(strongly_connected(g));
}

TEST_CASE("orders 0 and 1") {
  auto lang = fib();
  auto g0 = build_rauzy(lang, 0);
  CHECK(g0.vertex_count() == 1);
  CHECK(g0.vertex_word(0) == "");
  CHECK(g0.edge_words() == std::vector<Word>{"a", "b"});
  CHECK(g0.source(0) == g0.target(0));  // both edges are loops at the empty word
  CHECK(g0.has_central_labels());       // order 0 is even; the middle letter is the edge itself
  CHECK(g0.central_label(0) == 'a');

  auto g1 = build_rauzy(lang, 1);
  CHECK(g1.vertex_words() == std::vector<Word>{"a", "b"});
  CHECK(g1.edge_words() == std::vector<Word>{"aa", "ab", "ba"});
  CHECK(!g1.has_central_labels());
  CHECK_THROWS_AS(g1.central_label(0), SubshiftError);
}

TEST_CASE("edge counts follow the complexity function") {
  auto lang = fib(8);
  for (std::size_t n = 0; n <= 6; ++n) {
    auto g = build_rauzy(lang, n);
    CHECK(g.edge_count() == lang.complexity(n + 1));
    if (n >= 1) CHECK(g.vertex_count() == lang.complexity(n));
  }
}

TEST_CASE("adjacency lists are sorted by edge word") {
  auto lang = fib();
  auto g = build_rauzy(lang, 2);
  auto ba = g.require_vertex("ba");
  const auto& out = g.out_edges(ba);
  REQUIRE(out.size() == 2);
  CHECK(g.edge_word(out[0]) == "baa");
  CHECK(g.edge_word(out[1]) == "bab");
  auto ab = g.require_vertex("ab");
  const auto& in = g.in_edges(ab);
  REQUIRE(in.size() == 2);
  CHECK(g.edge_word(in[0]) == "aab");
  CHECK(g.edge_word(in[1]) == "bab");
}

TEST_CASE("lookup helpers") {
  auto g = build_rauzy(fib(), 2);
  CHECK(g.find_vertex("ab").has_value());
  CHECK(!g.find_vertex("bb").has_value());
  CHECK(!g.find_vertex("a").has_value());
  CHECK(g.find_edge("bab").has_value());
  CHECK(!g.find_edge("abb").has_value());
  CHECK_THROWS_AS(g.require_vertex("bb"), SubshiftError);
  CHECK_THROWS_AS(g.require_edge("abb"), SubshiftError);
}

TEST_CASE("explicit construction validates endpoints") {
  Alphabet ab("ab");
  CHECK_NOTHROW(RauzyGraph(1, {"a", "b"}, {"ab", "ba"}, ab));
  // edge whose source vertex is absent
  CHECK_THROWS_AS(RauzyGraph(1, {"a"}, {"ba"}, ab), SubshiftError);
  // wrong word lengths
  CHECK_THROWS_AS(RauzyGraph(1, {"aa"}, {}, ab), SubshiftError);
  CHECK_THROWS_AS(RauzyGraph(1, {"a"}, {"a"}, ab), SubshiftError);
}

TEST_CASE("paths, traced words, central words") {
  auto lang = fib();
  auto g = build_rauzy(lang, 2);
  auto p = path_of(g, {"aba", "bab"});
  CHECK(is_path(g, p));
  CHECK(g.vertex_word(path_source(g, p)) == "ab");
  CHECK(g.vertex_word(path_target(g, p)) == "ab");
  CHECK(traced_word(g, p) == "abab");
  CHECK(extension_word(g, p) == "ab");
  CHECK(central_word(g, p) == "ba");

  auto bad = path_of(g, {"aba", "aba"});
  CHECK(!is_path(g, bad));

  GraphPath empty;
  CHECK(is_path(g, empty));
  CHECK(traced_word(g, empty) == "");
  CHECK(central_word(g, empty) == "");
}

TEST_CASE("path reconstruction from a traced word") {
  auto lang = fib();
  auto g = build_rauzy(lang, 2);
  auto p = path_from_traced_word(g, lang, "abab");
  CHECK(p.length() == 2);
  CHECK(g.edge_word(p.edges[0]) == "aba");
  CHECK(g.edge_word(p.edges[1]) == "bab");

  auto q = lift_word_to_path(g, lang, "ab", "ab");
  CHECK(q.edges == p.edges);
  CHECK(traced_word(g, q) == "abab");

  // a traced word shorter than one edge gives the empty path only when it is a vertex
  auto r = path_from_traced_word(g, lang, "ab");
  CHECK(r.empty());
}

TEST_CASE("inadmissible traced words name the shortest leftmost offender") {
  auto lang = fib();
  auto g = build_rauzy(lang, 2);
  try {
    path_from_traced_word(g, lang, "ababba");
    FAIL("expected a throw");
  } catch (const SubshiftError& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
    CHECK(e.witness() == "bb");
  }
  CHECK_THROWS_AS(lift_word_to_path(g, lang, "ab", "ba"), SubshiftError);  // abba has bb
}

TEST_CASE("path construction agrees with local admissibility") {
  auto lang = fib(7);
  const std::size_t n = 2;
  auto g = build_rauzy(lang, n);
  // enumerate every word over {a,b} of length n+1 .. 6
  for (std::size_t len = n + 1; len <= 6; ++len) {
    for (std::size_t mask = 0; mask < (1u << len); ++mask) {
      Word w;
      for (std::size_t i = 0; i < len; ++i) w += (mask >> i) & 1 ? 'b' : 'a';
      bool admissible = true;
      for (std::size_t i = 0; i + n + 1 <= len; ++i) {
        if (!lang.contains(w.substr(i, n + 1))) admissible = false;
      }
      bool built = true;
      try {
        auto p = path_from_traced_word(g, lang, w);
        CHECK(traced_word(g, p) == w);
        CHECK(p.length() == len - n);
      } catch (const SubshiftError&) {
        built = false;
      }
      CHECK(built == admissible);
    }
  }
}

TEST_CASE("central restriction of items") {
  auto lang = fib();
  auto g4 = build_rauzy(lang, 4);
  auto g2 = build_rauzy(lang, 2);
  CHECK(project_item(g4, 2, "abaab") == "baa");   // edge word, length 5 -> 3
  CHECK(project_item(g4, 2, "abaa") == "ba");     // vertex word, length 4 -> 2
  CHECK(project_item(g4, 4, "abaa") == "abaa");
  CHECK(project_item(g4, 0, "abaab") == "a");
  CHECK_THROWS_AS(project_item(g4, 3, "abaab"), SubshiftError);  // parity mismatch
  CHECK_THROWS_AS(project_item(g2, 4, "aba"), SubshiftError);    // target above order
  CHECK_THROWS_AS(project_item(g4, 2, "abaabb"), SubshiftError); // not an item length

  // restriction composes
  auto g6 = build_rauzy(lang, 6);
  for (const auto& e : g6.edge_words()) {
    CHECK(project_item(g6, 0, e) == project_item(g4, 0, project_item(g6, 4, e)));
    CHECK(project_item(g6, 2, e) == project_item(g4, 2, project_item(g6, 4, e)));
  }
}

TEST_CASE("path projection preserves central labels") {
  auto lang = fib(9);
  auto g4 = build_rauzy(lang, 4);
  auto g2 = build_rauzy(lang, 2);
  // central labels survive the edge-wise restriction
  for (RauzyGraph::EdgeId e = 0; e < g4.edge_count(); ++e) {
    Word image = project_item(g4, 2, g4.edge_word(e));
    CHECK(g2.central_label(g2.require_edge(image)) == g4.central_label(e));
  }
  // a projected path is again a path with the same central word
  auto w = lang.point_prefix(8);
  auto p4 = path_from_traced_word(g4, lang, w);
  auto p2 = project_path(g4, g2, p4);
  CHECK(is_path(g2, p2));
  CHECK(p2.length() == p4.length());
  CHECK(central_word(g2, p2) == central_word(g4, p4));
}

TEST_CASE("horizon requirements") {
  auto lang = fib(4);
  CHECK_NOTHROW(build_rauzy(lang, 3));
  CHECK_THROWS_AS(build_rauzy(lang, 4), SubshiftError);
}

TEST_CASE("deterministic DOT rendering") {
  auto lang = fib();
  auto g = build_rauzy(lang, 2);
  auto dot = export_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("aab / a") != std::string::npos);
  CHECK(dot == export_dot(g));

  auto g0 = build_rauzy(lang, 0);
  CHECK(export_dot(g0).find("~") != std::string::npos);  // empty word placeholder
}
