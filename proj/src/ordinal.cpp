#include "ordlab/ordinal.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ordlab {

namespace {

constexpr uint64_t kMaxTowerHeight = 10000;     // fundamental(eps0, n) guard
constexpr uint64_t kMaxEvalExponent = 1 << 28;  // to_integer magnitude guard
constexpr int kMaxParseDepth = 5000;

}  // namespace

ordinal ordinal::epsilon0() {
  ordinal o;
  o.eps0_ = true;
  return o;
}

ordinal ordinal::from_nat(nat n) {
  if (sgn(n) < 0) throw std::domain_error("finite ordinal must be >= 0");
  ordinal o;
  if (sgn(n) > 0) o.terms_.push_back({zero(), std::move(n)});
  return o;
}

ordinal ordinal::omega() { return omega_power(from_nat(1)); }

ordinal ordinal::omega_power(ordinal exponent, nat coefficient) {
  if (exponent.is_epsilon0()) {
    throw std::domain_error("epsilon0 cannot occur as an exponent");
  }
  if (sgn(coefficient) <= 0) {
    throw std::invalid_argument("coefficient must be >= 1");
  }
  ordinal o;
  o.terms_.push_back({std::move(exponent), std::move(coefficient)});
  return o;
}

ordinal ordinal::from_terms(std::vector<term> terms) {
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent.is_epsilon0()) {
      throw std::invalid_argument("epsilon0 cannot occur as an exponent");
    }
    if (sgn(terms[i].coefficient) <= 0) {
      throw std::invalid_argument("coefficients must be >= 1");
    }
    if (i > 0 &&
        compare(terms[i - 1].exponent, terms[i].exponent) != ordering::gt) {
      throw std::invalid_argument(
          "exponents must be strictly decreasing in a normal form");
    }
  }
  ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool ordinal::is_finite() const {
  if (eps0_) return false;
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].exponent.is_zero();
}

bool ordinal::is_successor() const {
  if (eps0_ || terms_.empty()) return false;
  return terms_.back().exponent.is_zero();
}

bool ordinal::is_limit() const {
  if (eps0_) return true;
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

const std::vector<ordinal::term>& ordinal::terms() const {
  if (eps0_) throw std::domain_error("epsilon0 has no normal-form terms");
  return terms_;
}

ordering compare(const ordinal& a, const ordinal& b) {
  if (a.is_epsilon0() || b.is_epsilon0()) {
    if (a.is_epsilon0() && b.is_epsilon0()) return ordering::eq;
    return a.is_epsilon0() ? ordering::gt : ordering::lt;
  }
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    ordering e = compare(ta[i].exponent, tb[i].exponent);
    if (e != ordering::eq) return e;
    int c = cmp(ta[i].coefficient, tb[i].coefficient);
    if (c != 0) return c < 0 ? ordering::lt : ordering::gt;
  }
  if (ta.size() != tb.size()) {
    // A proper prefix is strictly smaller (the longer form adds lower terms).
    return ta.size() < tb.size() ? ordering::lt : ordering::gt;
  }
  return ordering::eq;
}

bool operator==(const ordinal& a, const ordinal& b) {
  return compare(a, b) == ordering::eq;
}
bool operator!=(const ordinal& a, const ordinal& b) { return !(a == b); }
bool operator<(const ordinal& a, const ordinal& b) {
  return compare(a, b) == ordering::lt;
}

ordinal add_nat(const ordinal& a, const nat& n) {
  if (a.is_epsilon0()) throw std::domain_error("cannot add beyond epsilon0");
  if (sgn(n) < 0) throw std::domain_error("cannot add a negative amount");
  if (sgn(n) == 0) return a;
  std::vector<ordinal::term> ts = a.terms();
  if (!ts.empty() && ts.back().exponent.is_zero()) {
    ts.back().coefficient += n;
  } else {
    ts.push_back({ordinal::zero(), n});
  }
  return ordinal::from_terms(std::move(ts));
}

nat coefficient_bound(const ordinal& a) {
  if (a.is_epsilon0()) {
    throw std::domain_error("epsilon0 has no coefficient bound");
  }
  nat best = 0;
  for (const auto& t : a.terms()) {
    best = std::max(best, t.coefficient);
    best = std::max(best, coefficient_bound(t.exponent));
  }
  return best;
}

namespace {

// beta for a successor beta+1: drop one from the finite tail.
ordinal predecessor(const ordinal& a) {
  assert(a.is_successor());
  std::vector<ordinal::term> ts = a.terms();
  if (ts.back().coefficient == 1) {
    ts.pop_back();
  } else {
    ts.back().coefficient -= 1;
  }
  return ordinal::from_terms(std::move(ts));
}

ordinal epsilon0_tower(const nat& n) {
  if (!n.fits_ulong_p() || n.get_ui() > kMaxTowerHeight) {
    throw std::overflow_error("epsilon0 fundamental-sequence tower too tall");
  }
  uint64_t h = n.get_ui();
  if (h == 0) return ordinal::from_nat(1);
  ordinal t = ordinal::omega();
  for (uint64_t i = 1; i < h; ++i) t = ordinal::omega_power(std::move(t));
  return t;
}

}  // namespace

ordinal fundamental(const ordinal& l, const nat& n) {
  if (sgn(n) < 0) throw std::domain_error("fundamental-sequence index < 0");
  if (l.is_zero()) return l;
  if (l.is_epsilon0()) return epsilon0_tower(n);
  if (l.is_successor()) return predecessor(l);

  // Proper limit: split off one copy of the last term w^(e) and rewrite it.
  std::vector<ordinal::term> ts = l.terms();
  ordinal e = ts.back().exponent;  // e >= 1 here
  if (ts.back().coefficient == 1) {
    ts.pop_back();
  } else {
    ts.back().coefficient -= 1;
  }
  if (e.is_successor()) {
    // w^(g+1)[n] = w^(g)*n
    if (sgn(n) > 0) ts.push_back({predecessor(e), n});
  } else {
    // w^(e)[n] = w^(e[n]) for limit e
    ts.push_back({fundamental(e, n), 1});
  }
  return ordinal::from_terms(std::move(ts));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void print_ordinal(const ordinal& a, std::string& out) {
  if (a.is_epsilon0()) {
    out += "e0";
    return;
  }
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += decimal(t.coefficient);
    } else {
      out += "w^(";
      print_ordinal(t.exponent, out);
      out += ")*";
      out += decimal(t.coefficient);
    }
  }
}

struct parser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("ordinal parse error at offset " +
                                std::to_string(pos) + ": " + what);
  }

  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  nat parse_nat() {
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) fail("expected a decimal number");
    return nat(std::string(text.substr(start, pos - start)), 10);
  }

  // part := nat | "w^(" ord ")*" nat ; returns (exponent, coefficient)
  ordinal::term parse_part(int depth) {
    if (text.substr(pos, 3) == "w^(") {
      pos += 3;
      ordinal e = parse_ord(depth + 1);
      if (!eat(')')) fail("expected ')'");
      if (!eat('*')) fail("expected '*' after ')'");
      nat k = parse_nat();
      if (sgn(k) == 0) fail("coefficient must be >= 1");
      return {std::move(e), std::move(k)};
    }
    if (pos < text.size() && text[pos] == 'w') fail("expected \"w^(\"");
    if (pos < text.size() && text[pos] == 'e') {
      fail("e0 cannot occur inside a normal form");
    }
    nat k = parse_nat();
    if (sgn(k) == 0) fail("a summand must be >= 1");
    return {ordinal::zero(), std::move(k)};
  }

  ordinal parse_ord(int depth) {
    if (depth > kMaxParseDepth) fail("nesting too deep");
    // Bare "0" is an ordinal only when no further summand follows.
    if (pos < text.size() && text[pos] == '0') {
      size_t save = pos;
      nat v = parse_nat();
      if (sgn(v) == 0) {
        if (pos < text.size() && text[pos] == '+') fail("0 is not a summand");
        return ordinal::zero();
      }
      pos = save;  // nonzero number with leading digits: re-parse as a part
    }
    std::vector<ordinal::term> ts;
    ts.push_back(parse_part(depth));
    while (eat('+')) ts.push_back(parse_part(depth));
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
      if (compare(ts[i].exponent, ts[i + 1].exponent) != ordering::gt) {
        fail("exponents must be strictly decreasing");
      }
    }
    return ordinal::from_terms(std::move(ts));
  }
};

}  // namespace

std::string ordinal::str() const {
  std::string out;
  print_ordinal(*this, out);
  return out;
}

ordinal ordinal::parse(std::string_view text) {
  if (text == "e0") return epsilon0();
  parser p{text};
  ordinal o = p.parse_ord(0);
  if (p.pos != text.size()) p.fail("trailing characters");
  return o;
}

// ---------------------------------------------------------------------------
// Base-b evaluation and hereditary representations

nat to_integer(const ordinal& a, uint64_t base) {
  if (a.is_epsilon0()) throw std::domain_error("epsilon0 has no base value");
  if (base < 2) throw std::domain_error("base must be >= 2");
  if (coefficient_bound(a) >= base) {
    throw std::domain_error("base must exceed every coefficient");
  }
  std::vector<std::pair<uint64_t, uint64_t>> flat;
  flat.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    nat ev = to_integer(t.exponent, base);
    if (!ev.fits_ulong_p() || ev.get_ui() > kMaxEvalExponent) {
      throw std::overflow_error("base-b value exceeds supported magnitude");
    }
    // coefficient < base <= 2^64, so it fits.
    flat.emplace_back(ev.get_ui(), t.coefficient.get_ui());
  }
  return eval_power_sum(flat, base);
}

ordinal from_integer(const nat& n, uint64_t base) {
  if (base < 2) throw std::domain_error("base must be >= 2");
  if (sgn(n) < 0) throw std::domain_error("value must be >= 0");
  std::vector<uint64_t> ds = digits(n, base);
  std::vector<ordinal::term> ts;
  for (size_t i = ds.size(); i-- > 0;) {
    if (ds[i] == 0) continue;
    ts.push_back({from_integer(nat(static_cast<unsigned long>(i)), base),
                  nat(static_cast<unsigned long>(ds[i]))});
  }
  return ordinal::from_terms(std::move(ts));
}

}  // namespace ordlab
