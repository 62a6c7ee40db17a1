#pragma once

// Ordinals up to and including epsilon_0, kept in complete Cantor normal
// form: w^(e1)*k1 + ... + w^(em)*km with e1 > ... > em and every ki >= 1,
// exponents recursively in normal form. epsilon_0 is a distinguished top
// element; it never occurs as an exponent.

#include "ordlab/nat.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ordlab {

enum class ordering : int { lt = -1, eq = 0, gt = 1 };

class ordinal {
 public:
  struct term;

  ordinal() = default;  // zero
  static ordinal zero() { return ordinal(); }
  static ordinal epsilon0();
  static ordinal from_nat(nat n);
  static ordinal omega();
  // w^(exponent)*coefficient; coefficient must be >= 1.
  static ordinal omega_power(ordinal exponent, nat coefficient = 1);
  // Validates normal form (strictly decreasing exponents, positive
  // coefficients); throws std::invalid_argument otherwise.
  static ordinal from_terms(std::vector<term> terms);

  bool is_zero() const { return !eps0_ && terms_.empty(); }
  bool is_epsilon0() const { return eps0_; }
  bool is_finite() const;     // zero or a bare natural
  bool is_successor() const;  // nonzero, < eps0, with a finite tail
  bool is_limit() const;      // nonzero and not a successor (includes eps0)

  // Normal-form view; throws std::domain_error on epsilon_0, which has none.
  const std::vector<term>& terms() const;

  // Canonical text form, e.g. "w^(2)*3+w^(1)*1+5", "0", "e0".
  std::string str() const;
  // Inverse of str(); accepts exactly the grammar
  //   ord := "0" | sum ; sum := part ("+" part)* ;
  //   part := nat | "w^(" ord ")*" nat
  // plus the string "e0". Throws std::invalid_argument on malformed input.
  static ordinal parse(std::string_view text);

 private:
  std::vector<term> terms_;  // strictly decreasing exponents
  bool eps0_ = false;
};

struct ordinal::term {
  ordinal exponent;
  nat coefficient;
};

ordering compare(const ordinal& a, const ordinal& b);
bool operator==(const ordinal& a, const ordinal& b);
bool operator!=(const ordinal& a, const ordinal& b);
bool operator<(const ordinal& a, const ordinal& b);

// a + n for finite n; a must be below epsilon_0.
ordinal add_nat(const ordinal& a, const nat& n);

// C(alpha): the largest coefficient occurring anywhere in the normal form.
nat coefficient_bound(const ordinal& a);

// The n-th member of the canonical fundamental sequence of a limit (or the
// predecessor of a successor; zero maps to zero). eps0[n] is the omega-tower
// of height n, with eps0[0] = 1.
ordinal fundamental(const ordinal& l, const nat& n);

// Evaluate alpha at w := base. Requires base >= 2 and base > C(alpha).
nat to_integer(const ordinal& a, uint64_t base);

// Hereditary base-b representation of n with b replaced by w throughout.
ordinal from_integer(const nat& n, uint64_t base);

}  // namespace ordlab
