#include "dessins/numtheory.hpp"

#include <stdexcept>

namespace dessins {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  std::int64_t r = 1;
  for (int k = 0; k < exp; ++k) {
    if (r > kMaxModulus / base)
      throw std::overflow_error("ipow: result exceeds the arithmetic bound");
    r *= base;
  }
  return r;
}

PrimePower::PrimePower(std::int64_t prime, int exponent)
    : p(prime), n(exponent), modulus(0) {
  if (!is_odd_prime(p)) throw std::invalid_argument("PrimePower: p must be an odd prime");
  if (n < 0) throw std::invalid_argument("PrimePower: negative exponent");
  modulus = ipow(p, n);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t modulus) {
  if (modulus < 1 || modulus > kMaxModulus)
    throw std::invalid_argument("pow_mod: modulus out of range");
  if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
  if (base < 0 || base >= modulus) throw std::invalid_argument("pow_mod: base out of range");
  if (modulus == 1) return 0;
  std::int64_t r = 1;
  std::int64_t b = base;
  while (exp > 0) {
    if (exp & 1) r = r * b % modulus;
    b = b * b % modulus;
    exp >>= 1;
  }
  return r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, const PrimePower& m) {
  return pow_mod(base, exp, m.modulus);
}

std::int64_t geom_sum(std::int64_t q, std::int64_t m, std::int64_t modulus) {
  if (modulus < 1 || modulus > kMaxModulus)
    throw std::invalid_argument("geom_sum: modulus out of range");
  if (m < 0) throw std::invalid_argument("geom_sum: negative length");
  if (q < 0 || q >= modulus) throw std::invalid_argument("geom_sum: q out of range");
  if (modulus == 1) return 0;
  // Process the bits of m from the top: S(2k) = S(k)(1+q^k), S(k+1) = S(k)q+1.
  std::int64_t s = 0;   // S(prefix)
  std::int64_t qp = 1;  // q^prefix
  for (int bit = 62; bit >= 0; --bit) {
    if ((m >> bit) == 0) continue;
    s = s * (1 + qp) % modulus;
    qp = qp * qp % modulus;
    if ((m >> bit) & 1) {
      s = (s * q + 1) % modulus;
      qp = qp * q % modulus;
    }
  }
  return s;
}

std::int64_t geom_sum(std::int64_t q, std::int64_t m, const PrimePower& mod) {
  return geom_sum(q, m, mod.modulus);
}

std::vector<std::int64_t> unit_subgroup_elements(std::int64_t p, int n, int i) {
  if (!is_odd_prime(p)) throw std::invalid_argument("unit_subgroup_elements: p must be an odd prime");
  if (i < 0 || i >= n) throw std::invalid_argument("unit_subgroup_elements: need 0 <= i <= n-1");
  const std::int64_t modulus = ipow(p, n);
  const std::int64_t step = ipow(p, n - i);
  const std::int64_t count = ipow(p, i);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t k = 0; k < count; ++k) out.push_back((k * step + 1) % modulus);
  return out;
}

int valuation(std::int64_t p, std::int64_t x) {
  if (x <= 0) throw std::invalid_argument("valuation: x must be positive");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

namespace {

// Sum of base-p digits of x.
std::int64_t digit_sum(std::int64_t p, std::int64_t x) {
  std::int64_t s = 0;
  while (x > 0) {
    s += x % p;
    x /= p;
  }
  return s;
}

}  // namespace

bool binom_valuation_holds(std::int64_t p, int n, int k) {
  if (!is_odd_prime(p)) throw std::invalid_argument("binom_valuation_holds: p must be an odd prime");
  if (k < 3 || k > n + 2) throw std::invalid_argument("binom_valuation_holds: need 3 <= k <= n+2");
  const std::int64_t pn = ipow(p, n);
  // Legendre: v_p(C(a+b, a)) = (S(a) + S(b) - S(a+b)) / (p-1).
  const std::int64_t a = k;
  const std::int64_t b = pn - k;
  const std::int64_t v = (digit_sum(p, a) + digit_sum(p, b) - digit_sum(p, pn)) / (p - 1);
  return v >= n - k + 2;
}

}  // namespace dessins
