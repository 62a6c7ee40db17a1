#pragma once

// Goodstein machinery: complete base-b representations, the base-shift
// operator, and Goodstein sequences m_{i+1} = shift(m_i) - 1 for a
// non-decreasing base schedule f with f(0) >= 2.

#include "ordlab/nat.hpp"
#include "ordlab/ordinal.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ordlab {

// Complete base-b representation: n = sum b^(e_i) * d_i with 0 < d_i < b,
// exponents strictly decreasing and themselves represented the same way.
struct base_rep {
  struct part;
  uint64_t base = 2;
  std::vector<part> parts;  // empty <=> value 0
};

struct base_rep::part {
  base_rep exponent;
  uint64_t digit = 0;  // 0 < digit < base
};

base_rep complete_rep(const nat& n, uint64_t base);
nat rep_value(const base_rep& rep);
// Human-readable form, e.g. "2^(2^(1)*1)*1+2^(0)*1" for 5 in base 2.
std::string rep_str(const base_rep& rep);

// S_b^a: reinterpret the complete base-a representation of n in base b.
// Requires 2 <= a <= b.
nat base_shift(const nat& n, uint64_t from_base, uint64_t to_base);

// Base schedule f: non-decreasing with f(0) >= 2.
class base_function {
 public:
  static base_function classic();                 // f(i) = i + 2
  static base_function constant(uint64_t b);      // f(i) = b
  static base_function affine(uint64_t q, uint64_t r);  // f(i) = q*i + r
  static base_function table(std::vector<uint64_t> values);
  // Text forms: "classic", "const:B", "affine:Q,R", "table:V0,V1,...".
  static base_function parse(const std::string& text);

  uint64_t operator()(uint64_t i) const;  // table beyond range: domain_error
  const std::string& description() const { return desc_; }

 private:
  enum class kind { classic, constant, affine, table };
  kind kind_ = kind::classic;
  uint64_t q_ = 0, r_ = 0;
  std::vector<uint64_t> values_;
  std::string desc_;
};

struct goodstein_row {
  uint64_t index = 0;
  uint64_t base = 0;
  nat value;
  ordinal ord;  // from_integer(value, base)
};

struct goodstein_run_result {
  std::vector<goodstein_row> rows;  // i = 0 .. min(T, max_steps)
  // Index T with m_T = 0; empty when the run was truncated at max_steps.
  std::optional<uint64_t> termination_step;
};

goodstein_run_result goodstein_run(const nat& m, const base_function& f,
                                   uint64_t max_steps);

struct descent_report {
  bool pass = true;
  // First i whose step violates strict ordinal descent (while m_i > 0).
  std::optional<uint64_t> first_violation;
};

descent_report descent_certificate(std::span<const goodstein_row> rows);

// Least T with m_T = 0, or empty if not reached within `fuel` steps.
// Value-only simulation (no ordinals), so it is cheap.
std::optional<uint64_t> termination_length(const nat& m,
                                           const base_function& f,
                                           uint64_t fuel);

}  // namespace ordlab
