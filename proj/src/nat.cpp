#include "ordlab/nat.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordlab {

uint64_t to_u64(const nat& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) {
    throw std::overflow_error("value does not fit in 64 bits: " + decimal(v));
  }
  return static_cast<uint64_t>(v.get_ui());
}

nat pow_u64(uint64_t base, uint64_t exp) {
  nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

std::string decimal(const nat& v) { return v.get_str(10); }

namespace {

// Digits of n assuming n < base^width; appends exactly `width` digits.
void digits_rec(const nat& n, uint64_t base, uint64_t width,
                std::vector<uint64_t>& out) {
  if (width <= 32 || n.fits_ulong_p()) {
    uint64_t rest = n.fits_ulong_p() ? n.get_ui() : 0;
    nat big;
    bool small = n.fits_ulong_p();
    if (!small) big = n;
    for (uint64_t i = 0; i < width; ++i) {
      if (small) {
        out.push_back(rest % base);
        rest /= base;
      } else {
        nat q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), big.get_mpz_t(), base);
        out.push_back(r.get_ui());
        big = std::move(q);
        if (big.fits_ulong_p()) {
          small = true;
          rest = big.get_ui();
        }
      }
    }
    return;
  }
  uint64_t lo_w = width / 2;
  nat split = pow_u64(base, lo_w);
  nat q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), split.get_mpz_t());
  digits_rec(r, base, lo_w, out);
  digits_rec(q, base, width - lo_w, out);
}

nat from_digits_rec(std::span<const uint64_t> ds, uint64_t base) {
  if (ds.size() <= 16) {
    nat acc = 0;
    for (size_t i = ds.size(); i-- > 0;) {
      acc *= base;
      acc += ds[i];
    }
    return acc;
  }
  size_t mid = ds.size() / 2;
  nat lo = from_digits_rec(ds.subspan(0, mid), base);
  nat hi = from_digits_rec(ds.subspan(mid), base);
  return hi * pow_u64(base, mid) + lo;
}

}  // namespace

std::vector<uint64_t> digits(const nat& n, uint64_t base) {
  if (base < 2) throw std::domain_error("digit base must be >= 2");
  if (sgn(n) < 0) throw std::domain_error("digits of a negative value");
  std::vector<uint64_t> out;
  if (sgn(n) == 0) return out;
  // Upper bound on the digit count, tightened by trimming zeros afterwards.
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  uint64_t width = bits;  // base >= 2, so bit count always suffices
  out.reserve(width);
  digits_rec(n, base, width, out);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

nat from_digits(std::span<const uint64_t> ds, uint64_t base) {
  if (base < 2) throw std::domain_error("digit base must be >= 2");
  return from_digits_rec(ds, base);
}

nat eval_power_sum(std::span<const std::pair<uint64_t, uint64_t>> terms,
                   uint64_t base) {
  if (base < 2) throw std::domain_error("power-sum base must be >= 2");
  if (terms.empty()) return 0;
  uint64_t max_exp = terms.front().first;
  // Dense exponent range: materialise a digit vector and join in one pass.
  if (max_exp < std::max<uint64_t>(1024, 8 * terms.size())) {
    std::vector<uint64_t> ds(max_exp + 1, 0);
    for (const auto& [e, k] : terms) ds[e] = k;
    return from_digits(ds, base);
  }
  // Sparse: Horner over exponent gaps (few terms, possibly huge exponents).
  nat acc = 0;
  uint64_t prev_exp = 0;
  bool first = true;
  for (const auto& [e, k] : terms) {
    if (first) {
      acc = k;
      first = false;
    } else {
      acc *= pow_u64(base, prev_exp - e);
      acc += k;
    }
    prev_exp = e;
  }
  acc *= pow_u64(base, prev_exp);
  return acc;
}

}  // namespace ordlab
