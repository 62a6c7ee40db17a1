#pragma once

// Deterministic parallel first-failure search: the result is the *least*
// index satisfying pred, independent of thread count or scheduling.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace ordlab {

// Least idx in [0, total) with pred(idx) == true, or empty. pred must be
// pure. Worker j scans indices j, j+jobs, j+2*jobs, ... in ascending order
// and stops once its next index is >= the best hit found so far, so every
// index below the final minimum is provably examined.
inline std::optional<uint64_t> find_least(
    uint64_t total, unsigned jobs, const std::function<bool(uint64_t)>& pred) {
  if (total == 0) return std::nullopt;
  if (jobs <= 1 || total < 1024) {
    for (uint64_t i = 0; i < total; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<uint64_t> best{UINT64_MAX};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      for (uint64_t i = j; i < total; i += jobs) {
        if (i >= best.load(std::memory_order_acquire)) break;
        if (pred(i)) {
          uint64_t cur = best.load(std::memory_order_acquire);
          while (i < cur && !best.compare_exchange_weak(
                                cur, i, std::memory_order_acq_rel)) {
          }
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  uint64_t r = best.load();
  if (r == UINT64_MAX) return std::nullopt;
  return r;
}

}  // namespace ordlab
