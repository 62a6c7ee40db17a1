#pragma once

// Exhaustive deciders for the Paris-Harrington relation with the largeness
// side condition |X| >= min X, and for the Kanamori-McAloon regressive-
// function relation. Everything is budgeted: a search whose universe exceeds
// the budget reports budget_exceeded instead of running (a value, not an
// error), so verdicts stay exact and runs stay bounded.

#include "ordlab/nat.hpp"
#include "ordlab/verdict.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ordlab {

struct interval {
  uint64_t lo = 0;
  uint64_t hi = 0;  // inclusive; lo <= hi
};

uint64_t interval_size(interval iv);

// A d-coloring of the c-element subsets of an interval. Subsets are indexed
// in lexicographic order of their ascending element lists; colors are 1..d.
struct coloring {
  interval domain;
  uint64_t arity = 1;   // c
  uint64_t colors = 1;  // d
  std::vector<uint64_t> by_subset;
};

// The c-subsets of iv as ascending element lists, lexicographically ordered.
std::vector<std::vector<uint64_t>> subsets_lex(interval iv, uint64_t arity);

// F constant on the arity-subsets of X (X ascending, |X| >= arity).
bool is_homogeneous(std::span<const uint64_t> X, const coloring& F);

struct arrow_result {
  verdict v = verdict::yes;
  // Sequential-order audit count: least failing index + 1 on `no`, the whole
  // universe on `yes`, 0 when the budget refuses the search upfront.
  uint64_t explored = 0;
  nat universe = 0;  // exact search-space size (may exceed 2^64)
  std::optional<coloring> counterexample;  // lex-least failing coloring
};

// [lo,hi] ->* (b)^c_d : every d-coloring of c-subsets admits a homogeneous
// X with |X| >= b and |X| >= min X.
arrow_result ph_arrow(interval iv, uint64_t b, uint64_t c, uint64_t d,
                      uint64_t budget, unsigned jobs = 1);

struct witness_result {
  verdict v = verdict::yes;
  uint64_t value = 0;  // meaningful only when v == yes
  uint64_t explored = 0;
};

// Least a2 >= a1 with [a1,a2] ->* (b)^c_d.
witness_result ph_witness(uint64_t a1, uint64_t b, uint64_t c, uint64_t d,
                          uint64_t budget, unsigned jobs = 1);

// sigma(n) = least m with [0,m] ->* (n+1)^n_n.
witness_result sigma(uint64_t n, uint64_t budget, unsigned jobs = 1);

// Largest z >= 1 with [x,y] ->* (z+1)^z_z, or 0 when even z = 1 fails.
witness_result ph_indicator(uint64_t x, uint64_t y, uint64_t budget,
                            unsigned jobs = 1);

// Least y with ph_indicator(x, y) > n.
witness_result indicator_g(uint64_t x, uint64_t n, uint64_t budget,
                           unsigned jobs = 1);

// A regressive function on the n-subsets of an interval: f(s) < min s, with
// f(s) = 0 when min s = 0. Subsets indexed as in `coloring`.
struct regressive_fn {
  interval domain;
  uint64_t arity = 1;  // n
  std::vector<uint64_t> by_subset;
};

struct km_arrow_result {
  verdict v = verdict::yes;
  uint64_t explored = 0;
  nat universe = 0;
  std::optional<regressive_fn> counterexample;
};

// [lo,hi] -> (k)^n_reg : every regressive f on n-subsets admits a
// min-homogeneous H with |H| = k.
km_arrow_result km_arrow(interval iv, uint64_t k, uint64_t n, uint64_t budget,
                         unsigned jobs = 1);

// H min-homogeneous for f: the value of f on an n-subset of H depends only
// on the subset's least element. H ascending, |H| >= n.
bool is_min_homogeneous(std::span<const uint64_t> H, const regressive_fn& f);

// Least b >= a with [a,b] -> (k)^n_reg.
witness_result km_witness(uint64_t a, uint64_t k, uint64_t n, uint64_t budget,
                          unsigned jobs = 1);

}  // namespace ordlab
