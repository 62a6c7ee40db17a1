#pragma once

// Finite rooted trees up to isomorphism, inf-preserving embeddability, the
// bounded bad-sequence search with logarithmic size thresholds, Otter's
// growth-constant estimate, and the regal/kiralic indicators for trees on
// finite sets of naturals.

#include "ordlab/nat.hpp"
#include "ordlab/verdict.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordlab {

// A rooted unordered tree with a canonical nested-paren encoding: "()" is a
// single node; a node's children are sorted ascending by encoding. Two trees
// are isomorphic iff their encodings are equal.
class finite_tree {
 public:
  finite_tree();  // single node
  explicit finite_tree(std::vector<finite_tree> children);
  static finite_tree parse(std::string_view text);

  const std::string& encoding() const { return enc_; }
  const std::vector<finite_tree>& children() const { return children_; }
  uint64_t size() const { return size_; }  // node count

  friend bool operator==(const finite_tree& a, const finite_tree& b) {
    return a.enc_ == b.enc_;
  }
  friend bool operator<(const finite_tree& a, const finite_tree& b) {
    return a.enc_ < b.enc_;
  }

 private:
  std::vector<finite_tree> children_;
  uint64_t size_ = 1;
  std::string enc_;
};

inline constexpr uint64_t tree_enumeration_cap = 12;

// All isomorphism classes with exactly n nodes, sorted by encoding.
// Requires 1 <= n <= tree_enumeration_cap.
std::vector<finite_tree> enumerate_trees(uint64_t n);

// Exact number of isomorphism classes with n nodes (no cap).
nat count_trees(uint64_t n);
std::vector<nat> count_trees_upto(uint64_t n);  // counts for 1..n

// Is there an embedding of s into t that preserves infima (greatest common
// ancestors)?
bool inf_embeds(const finite_tree& s, const finite_tree& t);

struct otter_row {
  uint64_t i = 0;
  double alpha_hat = 0.0;
};

struct otter_result {
  double alpha_hat = 0.0;    // estimate at i = max_i
  double threshold_c = 0.0;  // 1 / log2(alpha_hat)
  std::vector<otter_row> history;
};

// alpha_hat_i = (t_{i+1}/t_i) * ((i+1)/i)^{3/2} for i = 1..max_i; max_i >= 10.
otter_result estimate_otter(uint64_t max_i);

// Per-slot size bound f for bad-sequence searches (slots numbered from 1).
class size_bound {
 public:
  static size_bound zero();
  // f(i) = floor((num/den) * log2 i), computed exactly; f(0) = 0.
  static size_bound log_threshold(uint64_t num, uint64_t den);
  // Explicit values for slots 1..len; later slots repeat the last value.
  static size_bound table(std::vector<uint64_t> values);
  // "0" | "log:N/D" | "log:X.Y" (decimal) | "table:V1,V2,...".
  static size_bound parse(const std::string& text);

  uint64_t operator()(uint64_t slot) const;
  const std::string& description() const { return desc_; }

 private:
  enum class kind { zero, log, table };
  kind kind_ = kind::zero;
  uint64_t num_ = 0, den_ = 1;
  std::vector<uint64_t> values_;
  std::string desc_;
};

struct fkt_result {
  verdict v = verdict::yes;  // yes: every bad sequence has length <= M
  uint64_t explored = 0;     // DFS states visited
  std::vector<finite_tree> bad_sequence;  // a length-M+1 bad sequence on `no`
};

// Does every bad sequence T_1, T_2, ... with |T_i| <= K + f(i) have length
// <= M? (Bad: no i < j with T_i inf-embeddable into T_j.) Sizes K + f(i)
// must stay within the enumeration cap for slots 1..M+1.
fkt_result fkt_check(uint64_t K, const size_bound& f, uint64_t M,
                     uint64_t budget);

struct bad_sequence_result {
  verdict v = verdict::yes;  // yes: search exhausted; the best is the longest
  uint64_t length = 0;
  std::vector<finite_tree> sequence;  // first deepest prefix found
  uint64_t explored = 0;
  bool size_capped = false;  // some slot's bound was clipped to the cap
};

// Depth-first search for the longest bad sequence under the size bound.
bad_sequence_result longest_bad_sequence(uint64_t K, const size_bound& f,
                                         uint64_t budget);

// ---------------------------------------------------------------------------
// Trees on finite sets of naturals: parent(x) < x for every non-root x, so
// the root is always the least element. Nodes are indexed by ascending
// support position; parent[j] < j for j >= 1 (parent[0] is unused).

struct set_tree {
  std::vector<uint64_t> support;  // ascending values
  std::vector<uint32_t> parent;   // same length; parent[0] ignored
};

// Every tree on X in lexicographic order of (parent[1], parent[2], ...).
// Requires 1 <= |X| <= 9 (factorial growth).
std::vector<set_tree> trees_on_set(std::span<const uint64_t> X);

std::vector<uint64_t> tree_depths(const set_tree& t);  // per position
// Maximal root-to-leaf chains, as ascending value sets.
std::vector<std::vector<uint64_t>> tree_branches(const set_tree& t);
// Equal-depth classes, ascending by depth (depth 0 first).
std::vector<std::vector<uint64_t>> tree_levels(const set_tree& t);
// Immediate-successor value sets, one per internal node (nonempty only).
std::vector<std::vector<uint64_t>> tree_children_sets(const set_tree& t);
std::vector<uint64_t> tree_zero_level(const set_tree& t);  // {root value}

// Base selection test shared by both notions: 2 + min X < |X|.
bool zero_selectable(std::span<const uint64_t> X);

struct selection_check {
  verdict v = verdict::yes;
  uint64_t explored = 0;  // trees enumerated, across all recursion levels
  std::optional<set_tree> counterexample;  // defeating tree at the top level
};

// k-regal: k = 0 is the base test; X is (k+1)-regal when every tree on X
// has a branch or level that is k-regal.
selection_check is_regal(std::span<const uint64_t> X, uint64_t k,
                         uint64_t budget);
// k-kiralic: as above with children sets, branches, and the zero level.
selection_check is_kiralic(std::span<const uint64_t> X, uint64_t k,
                           uint64_t budget);

struct indicator_result {
  verdict v = verdict::yes;
  bool not_even_zero = false;  // the base test already fails on [a,b]
  uint64_t value = 0;          // largest k that holds (when v == yes)
  uint64_t explored = 0;
};

indicator_result regal_indicator(uint64_t a, uint64_t b, uint64_t budget);
indicator_result kiralic_indicator(uint64_t a, uint64_t b, uint64_t budget);

}  // namespace ordlab
