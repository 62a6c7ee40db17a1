#include "ordlab/goodstein.hpp"

#include <stdexcept>

namespace ordlab {

namespace {

constexpr uint64_t kMaxShiftExponent = 1 << 28;

}  // namespace

base_rep complete_rep(const nat& n, uint64_t base) {
  if (base < 2) throw std::domain_error("base must be >= 2");
  if (sgn(n) < 0) throw std::domain_error("value must be >= 0");
  base_rep rep;
  rep.base = base;
  std::vector<uint64_t> ds = digits(n, base);
  for (size_t i = ds.size(); i-- > 0;) {
    if (ds[i] == 0) continue;
    rep.parts.push_back(
        {complete_rep(nat(static_cast<unsigned long>(i)), base), ds[i]});
  }
  return rep;
}

nat rep_value(const base_rep& rep) {
  std::vector<std::pair<uint64_t, uint64_t>> flat;
  flat.reserve(rep.parts.size());
  for (const auto& p : rep.parts) {
    nat e = rep_value(p.exponent);
    if (!e.fits_ulong_p() || e.get_ui() > kMaxShiftExponent) {
      throw std::overflow_error("representation value exceeds supported size");
    }
    flat.emplace_back(e.get_ui(), p.digit);
  }
  return eval_power_sum(flat, rep.base);
}

std::string rep_str(const base_rep& rep) {
  if (rep.parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& p : rep.parts) {
    if (!first) out += '+';
    first = false;
    out += std::to_string(rep.base);
    out += "^(";
    out += rep_str(p.exponent);
    out += ")*";
    out += std::to_string(p.digit);
  }
  return out;
}

nat base_shift(const nat& n, uint64_t from_base, uint64_t to_base) {
  if (from_base < 2) throw std::domain_error("base must be >= 2");
  if (to_base < from_base) {
    throw std::domain_error("base shift requires from_base <= to_base");
  }
  if (sgn(n) < 0) throw std::domain_error("value must be >= 0");
  if (from_base == to_base) return n;
  std::vector<uint64_t> ds = digits(n, from_base);
  std::vector<std::pair<uint64_t, uint64_t>> flat;
  for (size_t i = ds.size(); i-- > 0;) {
    if (ds[i] == 0) continue;
    nat shifted =
        base_shift(nat(static_cast<unsigned long>(i)), from_base, to_base);
    if (!shifted.fits_ulong_p() || shifted.get_ui() > kMaxShiftExponent) {
      throw std::overflow_error("shifted exponent exceeds supported size");
    }
    flat.emplace_back(shifted.get_ui(), ds[i]);
  }
  return eval_power_sum(flat, to_base);
}

// ---------------------------------------------------------------------------
// Base schedules

base_function base_function::classic() {
  base_function f;
  f.kind_ = kind::classic;
  f.desc_ = "classic";
  return f;
}

base_function base_function::constant(uint64_t b) {
  if (b < 2) throw std::invalid_argument("constant base must be >= 2");
  base_function f;
  f.kind_ = kind::constant;
  f.r_ = b;
  f.desc_ = "const:" + std::to_string(b);
  return f;
}

base_function base_function::affine(uint64_t q, uint64_t r) {
  if (r < 2) throw std::invalid_argument("affine base needs offset >= 2");
  base_function f;
  f.kind_ = kind::affine;
  f.q_ = q;
  f.r_ = r;
  f.desc_ = "affine:" + std::to_string(q) + "," + std::to_string(r);
  return f;
}

base_function base_function::table(std::vector<uint64_t> values) {
  if (values.empty()) throw std::invalid_argument("empty base table");
  if (values[0] < 2) throw std::invalid_argument("base table must start >= 2");
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1] < values[i]) {
      throw std::invalid_argument("base table must be non-decreasing");
    }
  }
  base_function f;
  f.kind_ = kind::table;
  f.desc_ = "table:";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) f.desc_ += ',';
    f.desc_ += std::to_string(values[i]);
  }
  f.values_ = std::move(values);
  return f;
}

base_function base_function::parse(const std::string& text) {
  if (text == "classic") return classic();
  auto split_nums = [](const std::string& s) {
    std::vector<uint64_t> out;
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t comma = s.find(',', pos);
      std::string piece =
          s.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (piece.empty() || piece.find_first_not_of("0123456789") !=
                               std::string::npos) {
        throw std::invalid_argument("bad number in base schedule: '" + piece +
                                    "'");
      }
      out.push_back(std::stoull(piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  if (text.rfind("const:", 0) == 0) {
    auto nums = split_nums(text.substr(6));
    if (nums.size() != 1) throw std::invalid_argument("const:B expects one B");
    return constant(nums[0]);
  }
  if (text.rfind("affine:", 0) == 0) {
    auto nums = split_nums(text.substr(7));
    if (nums.size() != 2) {
      throw std::invalid_argument("affine:Q,R expects two numbers");
    }
    return affine(nums[0], nums[1]);
  }
  if (text.rfind("table:", 0) == 0) return table(split_nums(text.substr(6)));
  throw std::invalid_argument("unknown base schedule: '" + text + "'");
}

uint64_t base_function::operator()(uint64_t i) const {
  switch (kind_) {
    case kind::classic:
      return i + 2;
    case kind::constant:
      return r_;
    case kind::affine:
      return q_ * i + r_;
    case kind::table:
      if (i >= values_.size()) {
        throw std::domain_error("base table has no entry for step " +
                                std::to_string(i));
      }
      return values_[i];
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Goodstein runs

goodstein_run_result goodstein_run(const nat& m, const base_function& f,
                                   uint64_t max_steps) {
  if (sgn(m) < 0) throw std::domain_error("start value must be >= 0");
  goodstein_run_result out;
  nat cur = m;
  for (uint64_t i = 0;; ++i) {
    uint64_t base = f(i);
    out.rows.push_back({i, base, cur, from_integer(cur, base)});
    if (sgn(cur) == 0) {
      out.termination_step = i;
      return out;
    }
    if (i == max_steps) return out;  // truncated; rows 0..max_steps emitted
    cur = base_shift(cur, base, f(i + 1));
    cur -= 1;
  }
}

descent_report descent_certificate(std::span<const goodstein_row> rows) {
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    if (sgn(rows[i].value) == 0) break;
    if (compare(rows[i + 1].ord, rows[i].ord) != ordering::lt) {
      return {false, rows[i].index};
    }
  }
  return {true, std::nullopt};
}

std::optional<uint64_t> termination_length(const nat& m,
                                           const base_function& f,
                                           uint64_t fuel) {
  nat cur = m;
  for (uint64_t i = 0; i <= fuel; ++i) {
    if (sgn(cur) == 0) return i;
    if (i == fuel) break;
    cur = base_shift(cur, f(i), f(i + 1));
    cur -= 1;
  }
  return std::nullopt;
}

}  // namespace ordlab
