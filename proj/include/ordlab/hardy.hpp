#pragma once

// Hardy hierarchy evaluation by literal rewriting:
//   H_0(n) = n ; H_{a+1}(n) = H_a(n+1) ; H_l(n) = H_{l[n]}(n).
// Fuel counts rule applications, including the final base step. Running out
// of fuel is a value (no value + steps used), never an error.

#include "ordlab/nat.hpp"
#include "ordlab/ordinal.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordlab {

struct hardy_result {
  std::optional<nat> value;  // empty <=> fuel exhausted
  uint64_t steps = 0;        // rule applications performed
};

hardy_result hardy_eval(const ordinal& alpha, const nat& n, uint64_t fuel);

// The sequence of machine states (alpha_i, n_i) visited, starting with the
// input pair; truncated when fuel runs out before reaching ordinal zero.
std::vector<std::pair<ordinal, nat>> hardy_trace(const ordinal& alpha,
                                                 const nat& n, uint64_t fuel);

struct growth_row {
  ordinal alpha;
  uint64_t n = 0;
  hardy_result result;
};

// H_alpha(n) for each alpha in `ordinals` and each n in [0, n_max].
std::vector<growth_row> growth_table(std::span<const ordinal> ordinals,
                                     uint64_t n_max, uint64_t fuel);

// CSV with header "ordinal,n,value,steps,status"; value is blank on
// fuel exhaustion, status is "ok" or "fuel-exhausted".
std::string growth_table_csv(std::span<const growth_row> rows);

}  // namespace ordlab
