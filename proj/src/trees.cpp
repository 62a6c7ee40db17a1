#include "ordlab/trees.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ordlab {

// ---------------------------------------------------------------------------
// Canonical trees

finite_tree::finite_tree() : enc_("()") {}

finite_tree::finite_tree(std::vector<finite_tree> children)
    : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  enc_ = "(";
  for (const finite_tree& c : children_) {
    size_ += c.size_;
    enc_ += c.enc_;
  }
  enc_ += ')';
}

namespace {

finite_tree parse_node(std::string_view text, size_t& pos, int depth) {
  if (depth > 10000) throw std::invalid_argument("tree nesting too deep");
  if (pos >= text.size() || text[pos] != '(') {
    throw std::invalid_argument("tree parse error at offset " +
                                std::to_string(pos) + ": expected '('");
  }
  ++pos;
  std::vector<finite_tree> children;
  while (pos < text.size() && text[pos] == '(') {
    children.push_back(parse_node(text, pos, depth + 1));
  }
  if (pos >= text.size() || text[pos] != ')') {
    throw std::invalid_argument("tree parse error at offset " +
                                std::to_string(pos) + ": expected ')'");
  }
  ++pos;
  if (children.empty()) return finite_tree();
  return finite_tree(std::move(children));
}

}  // namespace

finite_tree finite_tree::parse(std::string_view text) {
  size_t pos = 0;
  finite_tree t = parse_node(text, pos, 0);
  if (pos != text.size()) {
    throw std::invalid_argument("tree parse error: trailing characters");
  }
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration and counting

namespace {

// lists[s] = all iso classes of size s, for s = 1..n.
std::vector<std::vector<finite_tree>> build_lists(uint64_t n) {
  std::vector<std::vector<finite_tree>> lists(n + 1);
  if (n >= 1) lists[1].push_back(finite_tree());
  for (uint64_t s = 2; s <= n; ++s) {
    std::vector<finite_tree> out;
    std::vector<finite_tree> kids;
    // Children chosen as a non-increasing sequence of (size, index) pairs so
    // every multiset is produced exactly once.
    std::function<void(uint64_t, uint64_t, uint64_t)> gen =
        [&](uint64_t rem, uint64_t max_sz, uint64_t max_idx) {
          if (rem == 0) {
            out.push_back(finite_tree(kids));
            return;
          }
          for (uint64_t sz = std::min(max_sz, rem); sz >= 1; --sz) {
            uint64_t idx_limit =
                (sz == max_sz) ? max_idx : lists[sz].size() - 1;
            for (uint64_t id = 0; id <= idx_limit; ++id) {
              kids.push_back(lists[sz][id]);
              gen(rem - sz, sz, id);
              kids.pop_back();
            }
          }
        };
    gen(s - 1, s - 1, lists[s - 1].size() - 1);
    std::sort(out.begin(), out.end());
    lists[s] = std::move(out);
  }
  return lists;
}

}  // namespace

std::vector<finite_tree> enumerate_trees(uint64_t n) {
  if (n < 1 || n > tree_enumeration_cap) {
    throw std::invalid_argument("tree size out of range (1.." +
                                std::to_string(tree_enumeration_cap) + ")");
  }
  return build_lists(n)[n];
}

std::vector<nat> count_trees_upto(uint64_t n) {
  if (n < 1) throw std::invalid_argument("tree size must be >= 1");
  std::vector<nat> a(n + 1, 0), c(n + 1, 0);
  a[1] = 1;
  for (uint64_t m = 1; m < n; ++m) {
    for (uint64_t d = 1; d <= m; ++d) {
      if (m % d == 0) c[m] += nat(static_cast<unsigned long>(d)) * a[d];
    }
    nat sum = 0;
    for (uint64_t k = 1; k <= m; ++k) sum += c[k] * a[m - k + 1];
    mpz_divexact_ui(a[m + 1].get_mpz_t(), sum.get_mpz_t(), m);
  }
  return std::vector<nat>(a.begin() + 1, a.end());
}

nat count_trees(uint64_t n) { return count_trees_upto(n).back(); }

// ---------------------------------------------------------------------------
// Inf-preserving embeddability

namespace {

struct embed_memo {
  std::map<std::pair<const finite_tree*, const finite_tree*>, bool> emb, anc;

  bool embeds(const finite_tree& s, const finite_tree& t) {
    if (s.size() > t.size()) return false;
    auto key = std::make_pair(&s, &t);
    if (auto it = emb.find(key); it != emb.end()) return it->second;
    bool r = anchored(s, t);
    if (!r) {
      for (const finite_tree& c : t.children()) {
        if (embeds(s, c)) {
          r = true;
          break;
        }
      }
    }
    emb[key] = r;
    return r;
  }

  // Embedding that maps root to root. Children of s go into *distinct*
  // child subtrees of t (that is exactly what preserves infima at the root),
  // hence a bipartite matching.
  bool anchored(const finite_tree& s, const finite_tree& t) {
    if (s.size() > t.size()) return false;
    if (s.children().empty()) return true;
    auto key = std::make_pair(&s, &t);
    if (auto it = anc.find(key); it != anc.end()) return it->second;
    const auto& sc = s.children();
    const auto& tc = t.children();
    bool r = false;
    if (sc.size() <= tc.size()) {
      std::vector<int> match(tc.size(), -1);
      std::function<bool(size_t, std::vector<char>&)> augment =
          [&](size_t i, std::vector<char>& used) {
            for (size_t j = 0; j < tc.size(); ++j) {
              if (used[j] || !embeds(sc[i], tc[j])) continue;
              used[j] = 1;
              if (match[j] < 0 ||
                  augment(static_cast<size_t>(match[j]), used)) {
                match[j] = static_cast<int>(i);
                return true;
              }
            }
            return false;
          };
      r = true;
      for (size_t i = 0; i < sc.size() && r; ++i) {
        std::vector<char> used(tc.size(), 0);
        if (!augment(i, used)) r = false;
      }
    }
    anc[key] = r;
    return r;
  }
};

}  // namespace

bool inf_embeds(const finite_tree& s, const finite_tree& t) {
  embed_memo memo;
  return memo.embeds(s, t);
}

// ---------------------------------------------------------------------------
// Otter's constant

otter_result estimate_otter(uint64_t max_i) {
  if (max_i < 10) throw std::invalid_argument("need max_i >= 10");
  std::vector<nat> t = count_trees_upto(max_i + 1);  // t[0] = t_1
  otter_result out;
  out.history.reserve(max_i);
  for (uint64_t i = 1; i <= max_i; ++i) {
    mpq_class ratio(t[i], t[i - 1]);
    ratio.canonicalize();
    double correction =
        std::pow((static_cast<double>(i) + 1.0) / static_cast<double>(i), 1.5);
    out.history.push_back({i, ratio.get_d() * correction});
  }
  out.alpha_hat = out.history.back().alpha_hat;
  out.threshold_c = 1.0 / std::log2(out.alpha_hat);
  return out;
}

// ---------------------------------------------------------------------------
// Size-bound schedules

size_bound size_bound::zero() {
  size_bound f;
  f.kind_ = kind::zero;
  f.desc_ = "0";
  return f;
}

size_bound size_bound::log_threshold(uint64_t num, uint64_t den) {
  if (den == 0) throw std::invalid_argument("threshold denominator is zero");
  if (num > 10000 || den > 10000) {
    throw std::invalid_argument("threshold ratio out of range");
  }
  uint64_t g = std::gcd(num == 0 ? den : num, den);
  size_bound f;
  f.kind_ = kind::log;
  f.num_ = num / g;
  f.den_ = den / g;
  f.desc_ = "log:" + std::to_string(f.num_) + "/" + std::to_string(f.den_);
  return f;
}

size_bound size_bound::table(std::vector<uint64_t> values) {
  if (values.empty()) throw std::invalid_argument("empty size-bound table");
  size_bound f;
  f.kind_ = kind::table;
  f.desc_ = "table:";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) f.desc_ += ',';
    f.desc_ += std::to_string(values[i]);
  }
  f.values_ = std::move(values);
  return f;
}

size_bound size_bound::parse(const std::string& text) {
  if (text == "0") return zero();
  auto parse_u64 = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad number in size bound: '" + s + "'");
    }
    return std::stoull(s);
  };
  if (text.rfind("log:", 0) == 0) {
    std::string body = text.substr(4);
    size_t slash = body.find('/');
    if (slash != std::string::npos) {
      return log_threshold(parse_u64(body.substr(0, slash)),
                           parse_u64(body.substr(slash + 1)));
    }
    size_t dot = body.find('.');
    if (dot == std::string::npos) return log_threshold(parse_u64(body), 1);
    std::string frac = body.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) {
      throw std::invalid_argument("bad decimal in size bound: '" + body + "'");
    }
    uint64_t den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    uint64_t num = parse_u64(body.substr(0, dot)) * den + parse_u64(frac);
    return log_threshold(num, den);
  }
  if (text.rfind("table:", 0) == 0) {
    std::vector<uint64_t> vals;
    std::string body = text.substr(6);
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      vals.push_back(parse_u64(body.substr(
          pos, comma == std::string::npos ? comma : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return table(std::move(vals));
  }
  throw std::invalid_argument("unknown size bound: '" + text + "'");
}

uint64_t size_bound::operator()(uint64_t slot) const {
  switch (kind_) {
    case kind::zero:
      return 0;
    case kind::log: {
      if (slot <= 1 || num_ == 0) return 0;
      // Largest k with 2^(k*den) <= slot^num, found exactly; the double
      // estimate is only a starting point.
      nat ip = pow_u64(slot, num_);
      double est = static_cast<double>(num_) *
                   std::log2(static_cast<double>(slot)) /
                   static_cast<double>(den_);
      uint64_t k = est < 1.0 ? 0 : static_cast<uint64_t>(est - 1.0);
      auto fits = [&](uint64_t kk) {
        nat lhs = 1;
        lhs <<= kk * den_;
        return lhs <= ip;
      };
      while (fits(k + 1)) ++k;
      while (k > 0 && !fits(k)) --k;
      return k;
    }
    case kind::table: {
      size_t idx = slot == 0
                       ? 0
                       : static_cast<size_t>(std::min<uint64_t>(
                             slot - 1, values_.size() - 1));
      return values_[idx];
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Bad-sequence search

namespace {

struct tree_catalog {
  std::vector<finite_tree> trees;  // ascending (size, encoding)
  std::vector<size_t> upto;        // trees of size <= s live in [0, upto[s])
};

tree_catalog build_catalog(uint64_t max_size) {
  tree_catalog cat;
  cat.upto.assign(max_size + 1, 0);
  auto lists = build_lists(max_size);
  for (uint64_t s = 1; s <= max_size; ++s) {
    for (auto& t : lists[s]) cat.trees.push_back(std::move(t));
    cat.upto[s] = cat.trees.size();
  }
  return cat;
}

struct bad_dfs {
  const tree_catalog& cat;
  uint64_t K;
  const size_bound& f;
  uint64_t budget;
  bool clip_to_cap;  // explore mode: clip + flag instead of throwing

  bad_dfs(const tree_catalog& cat_, uint64_t K_, const size_bound& f_,
          uint64_t budget_, bool clip)
      : cat(cat_), K(K_), f(f_), budget(budget_), clip_to_cap(clip) {}

  uint64_t explored = 0;
  bool budget_hit = false;
  bool size_capped = false;
  std::vector<uint32_t> stack;
  std::map<std::pair<uint32_t, uint32_t>, bool> cache;

  bool embeds(uint32_t a, uint32_t b) {
    auto key = std::make_pair(a, b);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    bool r = inf_embeds(cat.trees[a], cat.trees[b]);
    cache[key] = r;
    return r;
  }

  uint64_t slot_bound(uint64_t slot) {
    uint64_t b = K + f(slot);
    if (b > tree_enumeration_cap) {
      if (!clip_to_cap) {
        throw std::invalid_argument(
            "size bound exceeds the enumeration cap at slot " +
            std::to_string(slot));
      }
      size_capped = true;
      b = tree_enumeration_cap;
    }
    return b;
  }

  // Extends the current bad prefix; reports through on_push (return true to
  // stop the whole search, e.g. once the target length is reached).
  bool run(const std::function<bool()>& on_push) {
    uint64_t slot = stack.size() + 1;
    size_t limit = cat.upto[slot_bound(slot)];
    for (size_t c = 0; c < limit; ++c) {
      bool blocked = false;
      for (uint32_t chosen : stack) {
        if (embeds(chosen, static_cast<uint32_t>(c))) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (explored >= budget) {
        budget_hit = true;
        return false;
      }
      ++explored;
      stack.push_back(static_cast<uint32_t>(c));
      if (on_push()) return true;
      if (run(on_push)) return true;
      stack.pop_back();
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

fkt_result fkt_check(uint64_t K, const size_bound& f, uint64_t M,
                     uint64_t budget) {
  if (K < 1) throw std::invalid_argument("base size bound must be >= 1");
  tree_catalog cat = build_catalog(tree_enumeration_cap);
  bad_dfs dfs(cat, K, f, budget, /*clip_to_cap=*/false);
  fkt_result out;
  bool found = dfs.run([&] { return dfs.stack.size() == M + 1; });
  out.explored = dfs.explored;
  if (found) {
    out.v = verdict::no;
    for (uint32_t id : dfs.stack) out.bad_sequence.push_back(cat.trees[id]);
    return out;
  }
  if (dfs.budget_hit) {
    out.v = verdict::budget_exceeded;
    return out;
  }
  out.v = verdict::yes;
  return out;
}

bad_sequence_result longest_bad_sequence(uint64_t K, const size_bound& f,
                                         uint64_t budget) {
  if (K < 1) throw std::invalid_argument("base size bound must be >= 1");
  tree_catalog cat = build_catalog(tree_enumeration_cap);
  bad_dfs dfs(cat, K, f, budget, /*clip_to_cap=*/true);
  bad_sequence_result out;
  std::vector<uint32_t> best;
  dfs.run([&] {
    if (dfs.stack.size() > best.size()) best = dfs.stack;
    return false;  // never stop early; we want the longest
  });
  out.explored = dfs.explored;
  out.size_capped = dfs.size_capped;
  out.length = best.size();
  for (uint32_t id : best) out.sequence.push_back(cat.trees[id]);
  out.v = dfs.budget_hit ? verdict::budget_exceeded : verdict::yes;
  return out;
}

// ---------------------------------------------------------------------------
// Trees on finite sets of naturals

namespace {

void check_support(std::span<const uint64_t> X) {
  if (X.empty()) throw std::invalid_argument("support must be nonempty");
  for (size_t i = 0; i + 1 < X.size(); ++i) {
    if (X[i] >= X[i + 1]) {
      throw std::invalid_argument("support must be strictly ascending");
    }
  }
}

}  // namespace

std::vector<set_tree> trees_on_set(std::span<const uint64_t> X) {
  check_support(X);
  if (X.size() > 9) {
    throw std::invalid_argument("set too large to enumerate all trees");
  }
  size_t n = X.size();
  std::vector<set_tree> out;
  set_tree t;
  t.support.assign(X.begin(), X.end());
  t.parent.assign(n, 0);
  while (true) {
    out.push_back(t);
    size_t j;
    bool advanced = false;
    for (j = n; j-- > 1;) {
      if (t.parent[j] + 1 < j) {
        ++t.parent[j];
        for (size_t l = j + 1; l < n; ++l) t.parent[l] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return out;
  }
}

std::vector<uint64_t> tree_depths(const set_tree& t) {
  std::vector<uint64_t> d(t.parent.size(), 0);
  for (size_t j = 1; j < t.parent.size(); ++j) d[j] = d[t.parent[j]] + 1;
  return d;
}

std::vector<std::vector<uint64_t>> tree_branches(const set_tree& t) {
  size_t n = t.parent.size();
  std::vector<char> has_child(n, 0);
  for (size_t j = 1; j < n; ++j) has_child[t.parent[j]] = 1;
  std::vector<std::vector<uint64_t>> out;
  for (size_t j = 0; j < n; ++j) {
    if (has_child[j]) continue;
    std::vector<uint64_t> path;
    size_t cur = j;
    while (true) {
      path.push_back(t.support[cur]);
      if (cur == 0) break;
      cur = t.parent[cur];
    }
    std::reverse(path.begin(), path.end());  // root first = ascending values
    out.push_back(std::move(path));
  }
  return out;
}

std::vector<std::vector<uint64_t>> tree_levels(const set_tree& t) {
  std::vector<uint64_t> d = tree_depths(t);
  uint64_t dmax = *std::max_element(d.begin(), d.end());
  std::vector<std::vector<uint64_t>> out(dmax + 1);
  for (size_t j = 0; j < d.size(); ++j) out[d[j]].push_back(t.support[j]);
  return out;
}

std::vector<std::vector<uint64_t>> tree_children_sets(const set_tree& t) {
  size_t n = t.parent.size();
  std::vector<std::vector<uint64_t>> per_node(n);
  for (size_t j = 1; j < n; ++j) per_node[t.parent[j]].push_back(t.support[j]);
  std::vector<std::vector<uint64_t>> out;
  for (size_t j = 0; j < n; ++j) {
    if (!per_node[j].empty()) out.push_back(std::move(per_node[j]));
  }
  return out;
}

std::vector<uint64_t> tree_zero_level(const set_tree& t) {
  return {t.support[0]};
}

bool zero_selectable(std::span<const uint64_t> X) {
  check_support(X);
  // 2 + min X < |X|, phrased to avoid overflow.
  return X.size() > 2 && X[0] < X.size() - 2;
}

// ---------------------------------------------------------------------------
// Regal / kiralic recursion

namespace {

std::vector<std::vector<uint64_t>> candidate_sets(const set_tree& t,
                                                  bool kiralic) {
  std::set<std::vector<uint64_t>> cs;
  for (auto& b : tree_branches(t)) cs.insert(std::move(b));
  if (kiralic) {
    for (auto& c : tree_children_sets(t)) cs.insert(std::move(c));
    cs.insert(tree_zero_level(t));
  } else {
    for (auto& l : tree_levels(t)) cs.insert(std::move(l));
  }
  return std::vector<std::vector<uint64_t>>(cs.begin(), cs.end());
}

struct selection_ctx {
  uint64_t budget = 0;
  uint64_t used = 0;
  bool kiralic = false;
};

verdict check_selectable(std::span<const uint64_t> X, uint64_t k,
                         selection_ctx& ctx,
                         std::optional<set_tree>* counterexample) {
  if (k == 0) {
    return zero_selectable(X) ? verdict::yes : verdict::no;
  }
  size_t n = X.size();
  set_tree t;
  t.support.assign(X.begin(), X.end());
  t.parent.assign(n, 0);
  while (true) {
    if (ctx.used >= ctx.budget) return verdict::budget_exceeded;
    ++ctx.used;
    bool any_yes = false;
    for (const auto& Y : candidate_sets(t, ctx.kiralic)) {
      verdict r = check_selectable(Y, k - 1, ctx, nullptr);
      if (r == verdict::yes) {
        any_yes = true;
        break;
      }
      if (r == verdict::budget_exceeded) return verdict::budget_exceeded;
    }
    if (!any_yes) {
      if (counterexample) *counterexample = t;
      return verdict::no;
    }
    bool advanced = false;
    for (size_t j = n; j-- > 1;) {
      if (t.parent[j] + 1 < j) {
        ++t.parent[j];
        for (size_t l = j + 1; l < n; ++l) t.parent[l] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) return verdict::yes;
  }
}

indicator_result indicator_impl(uint64_t a, uint64_t b, uint64_t budget,
                                bool kiralic) {
  if (a > b) throw std::invalid_argument("indicator needs a <= b");
  std::vector<uint64_t> X(b - a + 1);
  for (uint64_t i = 0; i < X.size(); ++i) X[i] = a + i;
  indicator_result out;
  if (!zero_selectable(X)) {
    out.not_even_zero = true;
    return out;
  }
  selection_ctx ctx{budget, 0, kiralic};
  for (uint64_t k = 0;; ++k) {
    verdict r = check_selectable(X, k + 1, ctx, nullptr);
    out.explored = ctx.used;
    if (r == verdict::yes) continue;
    if (r == verdict::no) {
      out.value = k;
      return out;
    }
    out.v = verdict::budget_exceeded;
    return out;
  }
}

}  // namespace

selection_check is_regal(std::span<const uint64_t> X, uint64_t k,
                         uint64_t budget) {
  check_support(X);
  selection_ctx ctx{budget, 0, /*kiralic=*/false};
  selection_check out;
  std::optional<set_tree> cx;
  out.v = check_selectable(X, k, ctx, &cx);
  out.explored = ctx.used;
  out.counterexample = std::move(cx);
  return out;
}

selection_check is_kiralic(std::span<const uint64_t> X, uint64_t k,
                           uint64_t budget) {
  check_support(X);
  selection_ctx ctx{budget, 0, /*kiralic=*/true};
  selection_check out;
  std::optional<set_tree> cx;
  out.v = check_selectable(X, k, ctx, &cx);
  out.explored = ctx.used;
  out.counterexample = std::move(cx);
  return out;
}

indicator_result regal_indicator(uint64_t a, uint64_t b, uint64_t budget) {
  return indicator_impl(a, b, budget, /*kiralic=*/false);
}

indicator_result kiralic_indicator(uint64_t a, uint64_t b, uint64_t budget) {
  return indicator_impl(a, b, budget, /*kiralic=*/true);
}

}  // namespace ordlab
