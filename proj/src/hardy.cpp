#include "ordlab/hardy.hpp"

namespace ordlab {

hardy_result hardy_eval(const ordinal& alpha, const nat& n, uint64_t fuel) {
  ordinal cur = alpha;
  nat val = n;
  uint64_t steps = 0;
  while (steps < fuel) {
    ++steps;
    if (cur.is_zero()) return {std::move(val), steps};  // H_0(n) = n
    if (cur.is_successor()) {
      cur = fundamental(cur, 0);  // predecessor
      val += 1;
    } else {
      cur = fundamental(cur, val);
    }
  }
  return {std::nullopt, fuel};
}

std::vector<std::pair<ordinal, nat>> hardy_trace(const ordinal& alpha,
                                                 const nat& n, uint64_t fuel) {
  std::vector<std::pair<ordinal, nat>> out;
  ordinal cur = alpha;
  nat val = n;
  out.emplace_back(cur, val);
  uint64_t steps = 0;
  while (!cur.is_zero() && steps < fuel) {
    ++steps;
    if (cur.is_successor()) {
      cur = fundamental(cur, 0);
      val += 1;
    } else {
      cur = fundamental(cur, val);
    }
    out.emplace_back(cur, val);
  }
  return out;
}

std::vector<growth_row> growth_table(std::span<const ordinal> ordinals,
                                     uint64_t n_max, uint64_t fuel) {
  std::vector<growth_row> rows;
  rows.reserve(ordinals.size() * (n_max + 1));
  for (const ordinal& a : ordinals) {
    for (uint64_t n = 0; n <= n_max; ++n) {
      rows.push_back({a, n, hardy_eval(a, nat(static_cast<unsigned long>(n)),
                                       fuel)});
    }
  }
  return rows;
}

std::string growth_table_csv(std::span<const growth_row> rows) {
  std::string out = "ordinal,n,value,steps,status\n";
  for (const growth_row& r : rows) {
    out += r.alpha.str();
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    if (r.result.value) out += decimal(*r.result.value);
    out += ',';
    out += std::to_string(r.result.steps);
    out += ',';
    out += r.result.value ? "ok" : "fuel-exhausted";
    out += '\n';
  }
  return out;
}

}  // namespace ordlab
