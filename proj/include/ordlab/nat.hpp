#pragma once

// Arbitrary-precision naturals and base-b digit utilities shared by the
// ordinal and Goodstein machinery. Values handled here are always >= 0.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ordlab {

using nat = mpz_class;

// Narrowing conversion; throws std::overflow_error when v does not fit.
uint64_t to_u64(const nat& v);

nat pow_u64(uint64_t base, uint64_t exp);

std::string decimal(const nat& v);

// Little-endian base-b digits of n (empty for n = 0). Divide-and-conquer, so
// numbers with 10^5+ digits (late Goodstein rows) stay cheap.
std::vector<uint64_t> digits(const nat& n, uint64_t base);

// Inverse of digits(): value of little-endian digit vector in base b.
nat from_digits(std::span<const uint64_t> ds, uint64_t base);

// Value of sum_i base^(exp_i) * coeff_i given (exp, coeff) pairs with
// strictly decreasing exponents. Picks a dense or sparse evaluation strategy
// depending on how tightly the exponents pack.
nat eval_power_sum(std::span<const std::pair<uint64_t, uint64_t>> terms,
                   uint64_t base);

}  // namespace ordlab
