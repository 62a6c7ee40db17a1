#pragma once

// The worm battle. A worm is a finite sequence of naturals; at step m the
// head (last entry) is either cut off (head 0) or decremented, after which
// the bad part is repeated m+1 times:
//   head 0:  (f(0..n-1), 0)  ->  (f(0..n-1))
//   head>0:  with k the largest i < n such that f(i) < f(n) (k = -1 if none),
//            r = f(0..k), s = (f(k+1..n-1), f(n)-1), next = r s^{m+1}.

#include <cstdint>
#include <optional>
#include <vector>

namespace ordlab {

using worm_word = std::vector<uint64_t>;

// One battle step. m >= 1; the worm must be nonempty.
worm_word next_worm(const worm_word& w, uint64_t m);

struct worm_run_result {
  // Least n with w_n empty; empty optional when fuel ran out first.
  std::optional<uint64_t> termination_step;
  uint64_t steps = 0;       // transitions actually executed
  uint64_t max_length = 0;  // longest worm seen (including the start worm)
  std::vector<worm_word> trace;  // w_0, w_1, ... when requested
};

worm_run_result worm_run(const worm_word& start, uint64_t fuel,
                         bool record_trace = false);

}  // namespace ordlab
