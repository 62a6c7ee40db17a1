#pragma once

#include <cstdint>
#include <string>

namespace ordlab {

// Tri-state outcome of a budgeted decision. budget_exceeded is a value (the
// search space did not fit under the budget), never an error.
enum class verdict : uint8_t { yes, no, budget_exceeded };

inline std::string to_string(verdict v) {
  switch (v) {
    case verdict::yes:
      return "true";
    case verdict::no:
      return "false";
    default:
      return "budget-exceeded";
  }
}

}  // namespace ordlab
