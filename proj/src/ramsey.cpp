#include "ordlab/ramsey.hpp"

#include "ordlab/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordlab {

namespace {

constexpr uint64_t kMaxInterval = 1 << 20;

void check_interval(interval iv) {
  if (iv.lo > iv.hi) throw std::invalid_argument("interval needs lo <= hi");
  if (iv.hi - iv.lo + 1 > kMaxInterval) {
    throw std::invalid_argument("interval too large");
  }
}

// First ascending s-combination of {0..n-1}: {0,1,...,s-1}. Returns false
// when none exists.
bool combo_first(std::vector<uint64_t>& idx, uint64_t s, uint64_t n) {
  if (s > n) return false;
  idx.resize(s);
  for (uint64_t i = 0; i < s; ++i) idx[i] = i;
  return true;
}

// Lexicographic successor among ascending s-combinations of {0..n-1}.
bool combo_next(std::vector<uint64_t>& idx, uint64_t n) {
  uint64_t s = idx.size();
  for (uint64_t i = s; i-- > 0;) {
    if (idx[i] < n - (s - i)) {
      ++idx[i];
      for (uint64_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Rank of an ascending value list within the lex-ordered subset table.
uint64_t subset_rank(const std::vector<std::vector<uint64_t>>& subs,
                     const std::vector<uint64_t>& key) {
  auto it = std::lower_bound(subs.begin(), subs.end(), key);
  if (it == subs.end() || *it != key) {
    throw std::invalid_argument("subset outside the function's domain");
  }
  return static_cast<uint64_t>(it - subs.begin());
}

}  // namespace

uint64_t interval_size(interval iv) {
  check_interval(iv);
  return iv.hi - iv.lo + 1;
}

std::vector<std::vector<uint64_t>> subsets_lex(interval iv, uint64_t arity) {
  check_interval(iv);
  if (arity == 0) throw std::invalid_argument("arity must be >= 1");
  uint64_t n = iv.hi - iv.lo + 1;
  std::vector<std::vector<uint64_t>> out;
  std::vector<uint64_t> idx;
  if (!combo_first(idx, arity, n)) return out;
  do {
    std::vector<uint64_t> vals(arity);
    for (uint64_t i = 0; i < arity; ++i) vals[i] = iv.lo + idx[i];
    out.push_back(std::move(vals));
  } while (combo_next(idx, n));
  return out;
}

bool is_homogeneous(std::span<const uint64_t> X, const coloring& F) {
  if (X.size() < F.arity) {
    throw std::invalid_argument("set smaller than the coloring's arity");
  }
  for (size_t i = 0; i + 1 < X.size(); ++i) {
    if (X[i] >= X[i + 1]) throw std::invalid_argument("set must be ascending");
  }
  if (!X.empty() && (X.front() < F.domain.lo || X.back() > F.domain.hi)) {
    throw std::invalid_argument("set outside the coloring's domain");
  }
  if (F.colors == 1) return true;
  auto subs = subsets_lex(F.domain, F.arity);
  std::vector<uint64_t> idx, key(F.arity);
  combo_first(idx, F.arity, X.size());
  std::optional<uint64_t> seen;
  do {
    for (uint64_t i = 0; i < F.arity; ++i) key[i] = X[idx[i]];
    uint64_t col = F.by_subset.at(subset_rank(subs, key));
    if (seen && *seen != col) return false;
    seen = col;
  } while (combo_next(idx, X.size()));
  return true;
}

// ---------------------------------------------------------------------------
// Paris-Harrington

namespace {

struct ph_search {
  interval iv;
  uint64_t N, b, c, d;
  const std::vector<std::vector<uint64_t>>& subs;  // c-subsets, lex

  // Does this coloring admit X with |X| >= b, |X| >= min X, F const on
  // [X]^c? Sizes are scanned largest-first; the largeness filter prunes by
  // first element (min X = lo + p0 must be <= |X|).
  bool has_witness(const std::vector<uint64_t>& colors) const {
    std::vector<uint64_t> idx, key(c), sub_idx;
    uint64_t smin = std::max<uint64_t>(b, 1);
    for (uint64_t s = N; s >= smin; --s) {
      if (iv.lo > s) continue;  // min X >= lo > s = |X|
      uint64_t p0_max = s - iv.lo;
      if (!combo_first(idx, s, N)) continue;
      do {
        if (idx[0] > p0_max) break;  // lex order: p0 only grows
        if (s < c || d == 1) return true;  // homogeneity is vacuous
        bool homog = true;
        std::optional<uint64_t> seen;
        combo_first(sub_idx, c, s);
        do {
          for (uint64_t i = 0; i < c; ++i) {
            key[i] = iv.lo + idx[sub_idx[i]];
          }
          uint64_t col = colors[subset_rank(subs, key)];
          if (seen && *seen != col) {
            homog = false;
            break;
          }
          seen = col;
        } while (combo_next(sub_idx, s));
        if (homog) return true;
      } while (combo_next(idx, N));
    }
    return false;
  }

  void decode(uint64_t index, std::vector<uint64_t>& colors) const {
    uint64_t S = subs.size();
    colors.resize(S);
    for (uint64_t slot = S; slot-- > 0;) {
      colors[slot] = index % d + 1;
      index /= d;
    }
  }
};

}  // namespace

arrow_result ph_arrow(interval iv, uint64_t b, uint64_t c, uint64_t d,
                      uint64_t budget, unsigned jobs) {
  check_interval(iv);
  if (c < 1) throw std::invalid_argument("subset arity must be >= 1");
  if (d < 1) throw std::invalid_argument("color count must be >= 1");
  uint64_t N = iv.hi - iv.lo + 1;

  nat S_exact;
  mpz_bin_uiui(S_exact.get_mpz_t(), N, c);
  arrow_result out;
  if (d == 1) {
    out.universe = 1;
  } else if (!S_exact.fits_ulong_p() || S_exact.get_ui() > 64) {
    // d >= 2 with >= 2^65 colorings: beyond any 64-bit budget.
    out.v = verdict::budget_exceeded;
    out.universe = 0;
    return out;
  } else {
    mpz_ui_pow_ui(out.universe.get_mpz_t(), d, S_exact.get_ui());
  }
  if (out.universe > nat(budget)) {
    out.v = verdict::budget_exceeded;
    return out;
  }

  uint64_t total = to_u64(out.universe);
  uint64_t S = d == 1 ? 0 : S_exact.get_ui();
  std::vector<std::vector<uint64_t>> subs;
  if (d >= 2 && S > 0) subs = subsets_lex(iv, c);
  ph_search search{iv, N, b, c, d, subs};

  auto failing = find_least(total, jobs, [&](uint64_t index) {
    std::vector<uint64_t> colors;
    search.decode(index, colors);
    return !search.has_witness(colors);
  });

  if (!failing) {
    out.v = verdict::yes;
    out.explored = total;
    return out;
  }
  out.v = verdict::no;
  out.explored = *failing + 1;
  coloring cx;
  cx.domain = iv;
  cx.arity = c;
  cx.colors = d;
  search.decode(*failing, cx.by_subset);
  out.counterexample = std::move(cx);
  return out;
}

witness_result ph_witness(uint64_t a1, uint64_t b, uint64_t c, uint64_t d,
                          uint64_t budget, unsigned jobs) {
  witness_result out;
  for (uint64_t a2 = a1;; ++a2) {
    arrow_result r = ph_arrow({a1, a2}, b, c, d, budget, jobs);
    out.explored += r.explored;
    if (r.v == verdict::yes) {
      out.v = verdict::yes;
      out.value = a2;
      return out;
    }
    if (r.v == verdict::budget_exceeded) {
      out.v = verdict::budget_exceeded;
      return out;
    }
  }
}

witness_result sigma(uint64_t n, uint64_t budget, unsigned jobs) {
  if (n < 1) throw std::invalid_argument("sigma is defined for n >= 1");
  return ph_witness(0, n + 1, n, n, budget, jobs);
}

witness_result ph_indicator(uint64_t x, uint64_t y, uint64_t budget,
                            unsigned jobs) {
  if (x > y) throw std::invalid_argument("indicator needs x <= y");
  witness_result out;
  uint64_t best = 0;
  for (uint64_t z = 1;; ++z) {
    arrow_result r = ph_arrow({x, y}, z + 1, z, z, budget, jobs);
    out.explored += r.explored;
    if (r.v == verdict::yes) {
      best = z;
      continue;
    }
    if (r.v == verdict::no) {
      out.v = verdict::yes;
      out.value = best;
      return out;
    }
    out.v = verdict::budget_exceeded;
    return out;
  }
}

witness_result indicator_g(uint64_t x, uint64_t n, uint64_t budget,
                           unsigned jobs) {
  witness_result out;
  for (uint64_t y = x;; ++y) {
    witness_result r = ph_indicator(x, y, budget, jobs);
    out.explored += r.explored;
    if (r.v == verdict::budget_exceeded) {
      out.v = verdict::budget_exceeded;
      return out;
    }
    if (r.value > n) {
      out.v = verdict::yes;
      out.value = y;
      return out;
    }
  }
}

// ---------------------------------------------------------------------------
// Kanamori-McAloon

namespace {

struct km_search {
  interval iv;
  uint64_t N, k, n;
  const std::vector<std::vector<uint64_t>>& subs;  // n-subsets, lex
  const std::vector<uint64_t>& radix;              // max(min s, 1) per slot
  const std::vector<uint64_t>& suffix;             // suffix radix products

  void decode(uint64_t index, std::vector<uint64_t>& values) const {
    uint64_t S = subs.size();
    values.assign(S, 0);
    for (uint64_t slot = 0; slot < S; ++slot) {
      if (radix[slot] == 1) continue;  // regressive below min 0 or 1
      values[slot] = (index / suffix[slot + 1]) % radix[slot];
    }
  }

  // Exists H of size k with f on [H]^n depending only on min of the tuple?
  bool has_min_homogeneous(const std::vector<uint64_t>& values) const {
    std::vector<uint64_t> idx, key(n), tail_idx;
    if (!combo_first(idx, k, N)) return false;
    do {
      bool ok = true;
      for (uint64_t i = 0; ok && i + n <= k; ++i) {
        // All n-subsets of H with least element H[i] share their value.
        std::optional<uint64_t> seen;
        combo_first(tail_idx, n - 1, k - i - 1);
        bool more = true;
        while (more) {
          key[0] = iv.lo + idx[i];
          for (uint64_t j = 0; j + 1 < n; ++j) {
            key[j + 1] = iv.lo + idx[i + 1 + tail_idx[j]];
          }
          uint64_t v = values[subset_rank(subs, key)];
          if (seen && *seen != v) {
            ok = false;
            break;
          }
          seen = v;
          more = n >= 2 && combo_next(tail_idx, k - i - 1);
        }
      }
      if (ok) return true;
    } while (combo_next(idx, N));
    return false;
  }
};

}  // namespace

bool is_min_homogeneous(std::span<const uint64_t> H, const regressive_fn& f) {
  if (H.size() < f.arity) {
    throw std::invalid_argument("set smaller than the function's arity");
  }
  for (size_t i = 0; i + 1 < H.size(); ++i) {
    if (H[i] >= H[i + 1]) throw std::invalid_argument("set must be ascending");
  }
  if (H.front() < f.domain.lo || H.back() > f.domain.hi) {
    throw std::invalid_argument("set outside the function's domain");
  }
  auto subs = subsets_lex(f.domain, f.arity);
  uint64_t n = f.arity, k = H.size();
  std::vector<uint64_t> key(n), tail_idx;
  for (uint64_t i = 0; i + n <= k; ++i) {
    std::optional<uint64_t> seen;
    combo_first(tail_idx, n - 1, k - i - 1);
    bool more = true;
    while (more) {
      key[0] = H[i];
      for (uint64_t j = 0; j + 1 < n; ++j) key[j + 1] = H[i + 1 + tail_idx[j]];
      uint64_t v = f.by_subset.at(subset_rank(subs, key));
      if (seen && *seen != v) return false;
      seen = v;
      more = n >= 2 && combo_next(tail_idx, k - i - 1);
    }
  }
  return true;
}

km_arrow_result km_arrow(interval iv, uint64_t k, uint64_t n, uint64_t budget,
                         unsigned jobs) {
  check_interval(iv);
  if (n < 1) throw std::invalid_argument("tuple arity must be >= 1");
  if (k < n) throw std::invalid_argument("target size must be >= the arity");
  uint64_t N = iv.hi - iv.lo + 1;

  km_arrow_result out;
  // Universe size = prod over n-subsets s of max(min s, 1). Grouped by the
  // subset's first element; bail out as soon as the budget is passed so the
  // product never grows beyond ~2^64.
  out.universe = 1;
  if (n <= N) {
    for (uint64_t p = 0; p + n <= N; ++p) {
      uint64_t rad = std::max<uint64_t>(iv.lo + p, 1);
      if (rad == 1) continue;
      nat count;
      mpz_bin_uiui(count.get_mpz_t(), N - 1 - p, n - 1);
      if (!count.fits_ulong_p() || count.get_ui() > 64) {
        out.v = verdict::budget_exceeded;  // universe >= 2^65
        out.universe = 0;
        return out;
      }
      for (uint64_t i = 0; i < count.get_ui(); ++i) {
        out.universe *= rad;
        if (out.universe > nat(budget)) {
          out.v = verdict::budget_exceeded;
          out.universe = 0;  // not fully computed
          return out;
        }
      }
    }
  }

  uint64_t total = to_u64(out.universe);
  auto subs = subsets_lex(iv, n);  // empty when n > N
  uint64_t S = subs.size();
  std::vector<uint64_t> radix(S), suffix(S + 1, 1);
  for (uint64_t i = 0; i < S; ++i) radix[i] = std::max<uint64_t>(subs[i][0], 1);
  for (uint64_t i = S; i-- > 0;) suffix[i] = suffix[i + 1] * radix[i];

  km_search search{iv, N, k, n, subs, radix, suffix};
  auto failing = find_least(total, jobs, [&](uint64_t index) {
    std::vector<uint64_t> values;
    search.decode(index, values);
    return !search.has_min_homogeneous(values);
  });

  if (!failing) {
    out.v = verdict::yes;
    out.explored = total;
    return out;
  }
  out.v = verdict::no;
  out.explored = *failing + 1;
  regressive_fn cx;
  cx.domain = iv;
  cx.arity = n;
  search.decode(*failing, cx.by_subset);
  out.counterexample = std::move(cx);
  return out;
}

witness_result km_witness(uint64_t a, uint64_t k, uint64_t n, uint64_t budget,
                          unsigned jobs) {
  witness_result out;
  for (uint64_t b = a;; ++b) {
    km_arrow_result r = km_arrow({a, b}, k, n, budget, jobs);
    out.explored += r.explored;
    if (r.v == verdict::yes) {
      out.v = verdict::yes;
      out.value = b;
      return out;
    }
    if (r.v == verdict::budget_exceeded) {
      out.v = verdict::budget_exceeded;
      return out;
    }
  }
}

}  // namespace ordlab
