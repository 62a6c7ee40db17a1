#include "ordlab/worm.hpp"

#include <stdexcept>

namespace ordlab {

namespace {

// ~1 GiB of entries; rule (ii) multiplies length by m+1 in the worst case,
// so adversarial inputs hit this long before any reasonable fuel bound.
constexpr uint64_t kMaxWormLength = uint64_t{1} << 27;

// In-place variant shared by next_worm and worm_run.
void step(worm_word& w, uint64_t m) {
  if (w.empty()) throw std::domain_error("the empty worm has no next step");
  if (m < 1) throw std::domain_error("battle steps are numbered from 1");
  uint64_t head = w.back();
  if (head == 0) {
    w.pop_back();
    return;
  }
  size_t n = w.size() - 1;
  size_t k_plus_1 = 0;  // k+1 with k = max{ i < n : f(i) < f(n) }, else 0
  for (size_t i = n; i-- > 0;) {
    if (w[i] < head) {
      k_plus_1 = i + 1;
      break;
    }
  }
  // Bad part s = (f(k+1..n-1), head-1).
  worm_word s(w.begin() + static_cast<ptrdiff_t>(k_plus_1), w.end());
  s.back() = head - 1;
  uint64_t copies = m + 1;
  uint64_t new_len = k_plus_1 + copies * s.size();
  if (s.size() > kMaxWormLength / copies || new_len > kMaxWormLength) {
    throw std::overflow_error("worm length would exceed the supported limit");
  }
  w.resize(k_plus_1);
  w.reserve(new_len);
  for (uint64_t c = 0; c < copies; ++c) w.insert(w.end(), s.begin(), s.end());
}

}  // namespace

worm_word next_worm(const worm_word& w, uint64_t m) {
  worm_word out = w;
  step(out, m);
  return out;
}

worm_run_result worm_run(const worm_word& start, uint64_t fuel,
                         bool record_trace) {
  worm_run_result out;
  worm_word cur = start;
  out.max_length = cur.size();
  if (record_trace) out.trace.push_back(cur);
  if (cur.empty()) {
    out.termination_step = 0;
    return out;
  }
  for (uint64_t n = 1; n <= fuel; ++n) {
    step(cur, n);
    ++out.steps;
    if (cur.size() > out.max_length) out.max_length = cur.size();
    if (record_trace) out.trace.push_back(cur);
    if (cur.empty()) {
      out.termination_step = n;
      return out;
    }
  }
  return out;  // fuel exhausted; truncation is a value
}

}  // namespace ordlab
