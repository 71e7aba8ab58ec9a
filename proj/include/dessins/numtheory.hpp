#pragma once

#include <cstdint>
#include <vector>

namespace dessins {

// All residue arithmetic is done in int64_t. Moduli are capped so that a
// product of two reduced residues never overflows.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

bool is_odd_prime(std::int64_t p);

// p^n for an odd prime p, kept within the arithmetic bound.
struct PrimePower {
  std::int64_t p;
  int n;
  std::int64_t modulus;

  PrimePower(std::int64_t prime, int exponent);
};

// base^exp mod p^n, throws on negative exp or base out of range.
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t modulus);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, const PrimePower& m);

// 1 + q + ... + q^{m-1} mod p^n. Never divides by q-1 (a zero divisor when
// p | q-1, which is the regime we care about); uses the doubling recurrence
// S(2m) = S(m)(1+q^m), S(m+1) = S(m)q + 1.
std::int64_t geom_sum(std::int64_t q, std::int64_t m, std::int64_t modulus);
std::int64_t geom_sum(std::int64_t q, std::int64_t m, const PrimePower& mod);

// The unique subgroup of order p^i of U(p^n): { k*p^{n-i} + 1 : k in Z_{p^i} }.
// Requires 0 <= i <= n-1. Returned sorted.
std::vector<std::int64_t> unit_subgroup_elements(std::int64_t p, int n, int i);

// v_p(x) for x > 0.
int valuation(std::int64_t p, std::int64_t x);

// True iff v_p(C(p^n, k)) >= n-k+2, for 3 <= k <= n+2. The valuation is
// computed with Legendre's digit-sum formula; the binomial itself is never
// materialized.
bool binom_valuation_holds(std::int64_t p, int n, int k);

// p^e as an exact int64, throws past the arithmetic bound.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace dessins
