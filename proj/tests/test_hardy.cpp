#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordlab/hardy.hpp"
#include "ordlab/nat.hpp"
#include "ordlab/ordinal.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace ordlab;

namespace {
ordinal O(const std::string& s) { return ordinal::parse(s); }
constexpr uint64_t kFuel = 1000000;
}  // namespace

TEST_CASE("base case: H_0(n) = n in one rule application") {
  for (uint64_t n : {0ull, 1ull, 7ull, 123ull}) {
    hardy_result r = hardy_eval(O("0"), nat(n), 10);
    REQUIRE(r.value.has_value());
    CHECK(decimal(*r.value) == decimal(nat(n)));
    CHECK(r.steps == 1);
  }
}

TEST_CASE("finite indices: H_k(n) = n + k") {
  for (uint64_t k = 0; k <= 20; ++k) {
    for (uint64_t n = 0; n <= 20; ++n) {
      hardy_result r = hardy_eval(ordinal::from_nat(nat(k)), nat(n), kFuel);
      REQUIRE(r.value.has_value());
      CHECK(decimal(*r.value) == decimal(nat(n + k)));
      CHECK(r.steps == k + 1);  // k successor steps plus the base step
    }
  }
}

TEST_CASE("omega multiples: H_{w*k}(n) = 2^k * n") {
  for (uint64_t k = 1; k <= 6; ++k) {
    ordinal alpha = ordinal::from_terms({{O("1"), nat(k)}});
    for (uint64_t n = 0; n <= 8; ++n) {
      hardy_result r = hardy_eval(alpha, nat(n), kFuel);
      REQUIRE(r.value.has_value());
      CHECK(decimal(*r.value) == decimal(nat((uint64_t{1} << k) * n)));
    }
  }
}

TEST_CASE("pinned tower values") {
  auto val = [](const char* a, uint64_t n) {
    hardy_result r = hardy_eval(O(a), nat(n), kFuel);
    REQUIRE(r.value.has_value());
    return decimal(*r.value);
  };
  CHECK(val("w^(1)*1", 4) == "8");
  CHECK(val("w^(2)*1", 3) == "24");   // n * 2^n
  CHECK(val("w^(2)*1", 4) == "64");
  CHECK(val("e0", 2) == "8");
}

TEST_CASE("monotone in n for small indices") {
  for (const char* s : {"0", "1", "w^(1)*1", "w^(1)*1+1", "w^(1)*2", "w^(2)*1"}) {
    ordinal alpha = O(s);
    nat prev;
    for (uint64_t n = 0; n < 8; ++n) {
      hardy_result r = hardy_eval(alpha, nat(n), kFuel);
      REQUIRE(r.value.has_value());
      if (n > 0) CHECK(*r.value > prev);
      prev = *r.value;
    }
  }
}

TEST_CASE("fuel exhaustion is a value, not an error") {
  hardy_result r = hardy_eval(O("e0"), nat(3), 100);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.steps == 100);
  // One more unit of fuel keeps going deterministically.
  hardy_result r2 = hardy_eval(O("e0"), nat(3), 101);
  CHECK_FALSE(r2.value.has_value());
  CHECK(r2.steps == 101);
}

TEST_CASE("trace starts at the input and descends strictly") {
  auto tr = hardy_trace(O("1"), nat(0), 10);
  REQUIRE(tr.size() == 2);
  CHECK(tr[0].first.str() == "1");
  CHECK(decimal(tr[0].second) == "0");
  CHECK(tr[1].first.str() == "0");
  CHECK(decimal(tr[1].second) == "1");

  for (const char* s : {"w^(1)*1", "w^(2)*1", "w^(w^(1)*1)*1", "e0"}) {
    auto t = hardy_trace(O(s), nat(2), kFuel);
    REQUIRE(t.size() >= 2);
    CHECK(t.front().first.str() == O(s).str());
    CHECK(t.back().first.is_zero());
    for (size_t i = 0; i + 1 < t.size(); ++i) {
      CAPTURE(t[i].first.str());
      CHECK(compare(t[i + 1].first, t[i].first) == ordering::lt);
    }
  }
}

TEST_CASE("growth table covers ordinal-major order with per-cell fuel") {
  std::vector<ordinal> ords = {O("w^(1)*1"), O("0")};
  auto rows = growth_table(ords, 4, 100);
  REQUIRE(rows.size() == 10);  // two ordinals, n = 0..4
  CHECK(rows[0].alpha.str() == "w^(1)*1");
  CHECK(rows[0].n == 0);
  CHECK(rows[4].n == 4);
  REQUIRE(rows[2].result.value.has_value());
  CHECK(decimal(*rows[2].result.value) == "4");  // H_w(2) = 4
  CHECK(rows[5].alpha.str() == "0");
  REQUIRE(rows[9].result.value.has_value());
  CHECK(decimal(*rows[9].result.value) == "4");  // H_0(4) = 4
}

TEST_CASE("growth table csv shape") {
  std::vector<ordinal> ords = {O("w^(1)*1")};
  auto rows = growth_table(ords, 2, 3);
  std::string csv = growth_table_csv(rows);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "ordinal,n,value,steps,status");
  REQUIRE(std::getline(in, line));
  CHECK(line == "w^(1)*1,0,0,2,ok");
  REQUIRE(std::getline(in, line));
  CHECK(line == "w^(1)*1,1,2,3,ok");
  REQUIRE(std::getline(in, line));
  // H_w(2) needs 4 rule applications; fuel 3 exhausts with a blank value.
  CHECK(line == "w^(1)*1,2,,3,fuel-exhausted");
  CHECK_FALSE(std::getline(in, line));

  CHECK(growth_table_csv({}) == "ordinal,n,value,steps,status\n");
}

TEST_CASE("zero fuel exhausts immediately") {
  hardy_result r = hardy_eval(O("1"), nat(1), 0);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.steps == 0);
}
