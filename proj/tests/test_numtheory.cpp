#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dessins/numtheory.hpp"

using namespace dessins;

namespace {

std::int64_t naive_pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  for (std::int64_t k = 0; k < exp; ++k) r = r * base % m;
  return r;
}

std::int64_t naive_geom_sum(std::int64_t q, std::int64_t m, std::int64_t mod) {
  std::int64_t s = 0, qp = 1 % mod;
  for (std::int64_t k = 0; k < m; ++k) {
    s = (s + qp) % mod;
    qp = qp * q % mod;
  }
  return s;
}

// v_p(C(p^n, k)) via the exact binomial in 128-bit arithmetic.
int binom_valuation_direct(std::int64_t p, int n, int k) {
  const std::int64_t pn = ipow(p, n);
  __int128 c = 1;
  for (int i = 0; i < k; ++i) {
    c *= pn - i;
    c /= i + 1;  // exact: c is C(pn, i+1) after the division
  }
  int v = 0;
  while (c % p == 0) {
    c /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("is_odd_prime") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(5));
  CHECK(is_odd_prime(7));
  CHECK(is_odd_prime(101));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(1));
  CHECK_FALSE(is_odd_prime(0));
  CHECK_FALSE(is_odd_prime(-3));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(91));  // 7 * 13
}

TEST_CASE("ipow") {
  CHECK(ipow(3, 0) == 1);
  CHECK(ipow(3, 6) == 729);
  CHECK(ipow(5, 5) == 3125);
  CHECK_THROWS_AS(ipow(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(ipow(3, 40), std::overflow_error);
}

TEST_CASE("PrimePower") {
  const PrimePower m(3, 3);
  CHECK(m.modulus == 27);
  CHECK_THROWS_AS(PrimePower(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(3, -1), std::invalid_argument);
}

TEST_CASE("pow_mod pinned values") {
  CHECK(pow_mod(4, 3, 27) == 10);
  CHECK(pow_mod(4, 3, 9) == 1);
  CHECK(pow_mod(0, 5, 27) == 0);
  CHECK(pow_mod(0, 0, 27) == 1);
  CHECK(pow_mod(0, 0, 1) == 0);
  CHECK(pow_mod(4, 0, 27) == 1);
}

TEST_CASE("pow_mod rejects out-of-range input") {
  CHECK_THROWS_AS(pow_mod(3, -1, 27), std::invalid_argument);
  CHECK_THROWS_AS(pow_mod(-1, 2, 27), std::invalid_argument);
  CHECK_THROWS_AS(pow_mod(27, 2, 27), std::invalid_argument);
  CHECK_THROWS_AS(pow_mod(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(pow_mod(1, 2, kMaxModulus + 1), std::invalid_argument);
}

TEST_CASE("pow_mod agrees with iterated products") {
  for (std::int64_t mod : {3, 9, 27, 25, 125, 343})
    for (std::int64_t base = 0; base < mod; base += 3)
      for (std::int64_t exp = 0; exp <= 20; ++exp)
        CHECK(pow_mod(base, exp, mod) == naive_pow_mod(base, exp, mod));
}

TEST_CASE("geom_sum pinned values") {
  CHECK(geom_sum(4, 3, 27) == 21);  // 1 + 4 + 16
  CHECK(geom_sum(4, 3, 9) == 3);
  CHECK(geom_sum(4, 0, 27) == 0);
  CHECK(geom_sum(4, 1, 27) == 1);
  CHECK(geom_sum(0, 5, 27) == 1);
  CHECK(geom_sum(1, 10, 27) == 10);
}

TEST_CASE("geom_sum agrees with the naive sum") {
  for (std::int64_t mod : {9, 27, 81, 25, 125})
    for (std::int64_t q = 0; q < mod; q += 2)
      for (std::int64_t m = 0; m <= 30; ++m)
        CHECK(geom_sum(q, m, mod) == naive_geom_sum(q, m, mod));
}

TEST_CASE("geom_sum satisfies (q-1) S(m) = q^m - 1") {
  for (std::int64_t p : {3, 5}) {
    for (int n = 1; n <= 5; ++n) {
      const std::int64_t mod = ipow(p, n);
      if (mod > 1000) continue;
      for (std::int64_t q = 0; q < mod; ++q)
        for (std::int64_t m : {0, 1, 2, 3, 7, 26, 27, 100, 729}) {
          const std::int64_t lhs = (q - 1 + mod) % mod * geom_sum(q, m, mod) % mod;
          const std::int64_t rhs = (pow_mod(q, m, mod) - 1 + mod) % mod;
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("unit_subgroup_elements pinned values") {
  CHECK(unit_subgroup_elements(3, 2, 1) == std::vector<std::int64_t>{1, 4, 7});
  CHECK(unit_subgroup_elements(3, 3, 1) == std::vector<std::int64_t>{1, 10, 19});
  CHECK(unit_subgroup_elements(3, 3, 0) == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(unit_subgroup_elements(3, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(unit_subgroup_elements(9, 3, 1), std::invalid_argument);
}

TEST_CASE("unit_subgroup_elements is a multiplicative group of order p^i") {
  for (std::int64_t p : {3, 5, 7}) {
    for (int n = 1; n <= 4; ++n) {
      const std::int64_t mod = ipow(p, n);
      for (int i = 0; i < n; ++i) {
        const auto elems = unit_subgroup_elements(p, n, i);
        REQUIRE(elems.size() == static_cast<std::size_t>(ipow(p, i)));
        for (std::int64_t x : elems) {
          CHECK(pow_mod(x, ipow(p, i), mod) == 1);
          for (std::int64_t y : elems) {
            const std::int64_t z = x * y % mod;
            CHECK(std::binary_search(elems.begin(), elems.end(), z));
          }
        }
      }
    }
  }
}

TEST_CASE("valuation") {
  CHECK(valuation(3, 1) == 0);
  CHECK(valuation(3, 54) == 3);
  CHECK(valuation(5, 50) == 2);
  CHECK_THROWS_AS(valuation(3, 0), std::invalid_argument);
}

TEST_CASE("binom_valuation_holds over the full desk-scale sweep") {
  for (std::int64_t p : {3, 5, 7})
    for (int n = 1; n <= 6; ++n)
      for (int k = 3; k <= n + 2; ++k) {
        CHECK(binom_valuation_holds(p, n, k));
        CHECK(binom_valuation_direct(p, n, k) >= n - k + 2);
      }
  CHECK_THROWS_AS(binom_valuation_holds(3, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(binom_valuation_holds(3, 3, 6), std::invalid_argument);
}
