// free_group.hpp -- reduced group words and Stallings subgroup graphs
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

/// One signed symbol of a group word; exp is +1 or -1.
template <class L>
struct Sym {
  L letter;
  int exp;
  bool operator==(const Sym&) const = default;
};

/// Freely reduced word over letters of type L.  Construction reduces, so a
/// value of this type is always in normal form; equality is equality in the
/// free group.
template <class L>
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord raw(std::vector<Sym<L>> syms) {
    GroupWord w;
    for (auto& s : syms) w.push(s);
    return w;
  }

  static GroupWord generator(L letter, int exp = 1) {
    return raw({Sym<L>{letter, exp}});
  }

  GroupWord operator*(const GroupWord& other) const {
    GroupWord w = *this;
    for (const auto& s : other.syms_) w.push(s);
    return w;
  }

  GroupWord inverse() const {
    GroupWord w;
    for (auto it = syms_.rbegin(); it != syms_.rend(); ++it) {
      w.push(Sym<L>{it->letter, -it->exp});
    }
    return w;
  }

  bool identity() const { return syms_.empty(); }
  std::size_t size() const { return syms_.size(); }
  const std::vector<Sym<L>>& syms() const { return syms_; }
  bool operator==(const GroupWord&) const = default;

  /// Sum of exponents of the given letter (image under abelianization).
  long long exponent_sum(L letter) const {
    long long s = 0;
    for (const auto& sym : syms_) {
      if (sym.letter == letter) s += sym.exp;
    }
    return s;
  }

 private:
  void push(const Sym<L>& s) {
    if (!syms_.empty() && syms_.back().letter == s.letter &&
        syms_.back().exp == -s.exp) {
      syms_.pop_back();
    } else {
      syms_.push_back(s);
    }
  }

  std::vector<Sym<L>> syms_;
};

using FreeGroupWord = GroupWord<char>;
using GroupoidWord = GroupWord<int>;

/// Positive word -> group word with all exponents +1.
FreeGroupWord to_group_word(const Word& w);

/// "a b^-1 a" format; the identity renders as "1".
std::string format_word(const FreeGroupWord& w);
FreeGroupWord parse_word(const std::string& text);

/// Folded core graph of the subgroup generated by a finite set of group
/// words: deterministic and co-deterministic per label, no degree-one vertex
/// away from the base, base vertex 0, vertices numbered canonically (BFS from
/// the base, letters in sorted order, outgoing before incoming).  Two
/// generating sets span the same subgroup iff their graphs are identical.
class StallingsGraph {
 public:
  /// Builds petals for the generators and folds until deterministic and
  /// co-deterministic.  The optional seed shuffles the fold order; the result
  /// is the same for every seed (confluence), which tests rely on.
  static StallingsGraph fold(std::span<const FreeGroupWord> generators,
                             std::optional<std::uint64_t> shuffle_seed = std::nullopt);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const;
  int base() const { return 0; }

  /// Edges as (source, letter, target), sorted.
  std::vector<std::tuple<int, char, int>> edges() const;

  /// Membership of a reduced word via path tracing from the base.
  bool member(const FreeGroupWord& w) const;

  /// Rank of the subgroup: |E| - |V| + 1 for the folded core graph.
  std::size_t rank() const;

  bool operator==(const StallingsGraph&) const = default;

  std::string to_dot() const;

 private:
  // out_[v][c] = w for an edge v --c--> w; in_[w][c] = v for the same edge.
  std::vector<std::map<char, int>> out_, in_;
};

/// True iff the words (as group elements) form a basis of the full free
/// group over the alphabet: the count matches the alphabet size and folding
/// yields the one-vertex rose carrying every letter.  The count check plus
/// generation suffices because free groups are Hopfian.
bool is_basis_of_full_group(std::span<const Word> words, const Alphabet& alphabet);
bool is_basis_of_full_group(std::span<const FreeGroupWord> words, const Alphabet& alphabet);

/// Subgroup equality via identity of folded graphs.
bool subgroup_equals(std::span<const FreeGroupWord> a, std::span<const FreeGroupWord> b);

}  // namespace subshift
