#include "dessins/bicyclic.hpp"

#include <stdexcept>

namespace dessins {

namespace {

// <g> as a bitset over dense element indices.
std::vector<std::uint64_t> cyclic_bitset(const GroupSpec& spec, const Element& g) {
  std::vector<std::uint64_t> bits((static_cast<std::size_t>(spec.order) + 63) / 64, 0);
  Element x = spec.identity();
  do {
    const std::uint32_t idx = index_of(x);
    bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    x = multiply(x, g);
  } while (!(x == spec.identity()));
  return bits;
}

bool intersect_trivially(const std::vector<std::uint64_t>& x,
                         const std::vector<std::uint64_t>& y) {
  int common = 0;
  for (std::size_t w = 0; w < x.size(); ++w) common += __builtin_popcountll(x[w] & y[w]);
  return common == 1;  // the identity only
}

void check_brute_force(const GroupSpec& spec, const char* op) {
  if (spec.order > kBruteForceMaxOrder)
    throw std::domain_error(std::string(op) + ": |G| exceeds the brute-force bound");
}

}  // namespace

bool is_exact_pair_oracle(const GroupSpec& spec, const Element& alpha, const Element& beta) {
  check_brute_force(spec, "is_exact_pair_oracle");
  if (element_order(alpha) != ipow(spec.p, spec.d)) return false;
  if (element_order(beta) != ipow(spec.p, spec.e)) return false;
  return intersect_trivially(cyclic_bitset(spec, alpha), cyclic_bitset(spec, beta));
}

bool is_exact_pair_fast(const GroupSpec& spec, std::int64_t i, std::int64_t j,
                        std::int64_t k, std::int64_t l) {
  const std::int64_t p = spec.p;
  switch (spec.family) {
    case Family::M1:
      if (spec.d == spec.e) return (i * l - j * k) % p != 0;
      return j % ipow(p, spec.e - spec.d) == 0 && i % p != 0 && l % p != 0;
    case Family::M2:
      return i % ipow(p, spec.e - spec.d) == 0 && j % p != 0 && k % p != 0;
    case Family::M3: {
      const std::int64_t peh = ipow(p, spec.e - spec.h);
      // p^{e-h} exactly divides i; i = 0 fails by convention.
      if (i == 0 || i % peh != 0 || (i / peh) % p == 0) return false;
      return (j + i / peh) % ipow(p, spec.h - spec.d) == 0 && j % p != 0 && k % p != 0;
    }
    case Family::Cyclic:
      if (spec.e == 0) return true;  // the trivial group: (1, 1)
      return i == 0 && k % p != 0;
  }
  return false;
}

std::int64_t exact_pair_count_formula(const GroupSpec& spec) {
  const std::int64_t p = spec.p;
  switch (spec.family) {
    case Family::M1:
      if (spec.d == spec.e)
        return ipow(p, 4 * spec.e - 3) * (p * p - 1) * (p - 1);
      [[fallthrough]];
    case Family::M2:
    case Family::M3:
      return ipow(p, 3 * spec.d + spec.e - 2) * (p - 1) * (p - 1);
    case Family::Cyclic:
      return spec.e == 0 ? 1 : ipow(p, spec.e - 1) * (p - 1);
  }
  return 0;
}

std::int64_t count_exact_pairs(const GroupSpec& spec) {
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < spec.b_range; ++i)
    for (std::int64_t j = 0; j < spec.a_range; ++j)
      for (std::int64_t k = 0; k < spec.b_range; ++k)
        for (std::int64_t l = 0; l < spec.a_range; ++l)
          if (is_exact_pair_fast(spec, i, j, k, l)) ++count;
  return count;
}

std::int64_t count_exact_pairs_oracle(const GroupSpec& spec) {
  check_brute_force(spec, "count_exact_pairs_oracle");
  const std::uint32_t n = static_cast<std::uint32_t>(spec.order);
  const std::int64_t ord_a = ipow(spec.p, spec.d);
  const std::int64_t ord_b = ipow(spec.p, spec.e);
  std::vector<std::int64_t> order(n);
  std::vector<std::vector<std::uint64_t>> gen(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    const Element x = element_at(spec, g);
    order[g] = element_order(x);
    gen[g] = cyclic_bitset(spec, x);
  }
  std::int64_t count = 0;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (order[g] != ord_a) continue;
    for (std::uint32_t k = 0; k < n; ++k) {
      if (order[k] != ord_b) continue;
      if (intersect_trivially(gen[g], gen[k])) ++count;
    }
  }
  return count;
}

std::uint64_t pack_pair(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) {
  return (static_cast<std::uint64_t>(i) << 48) | (static_cast<std::uint64_t>(j) << 32) |
         (static_cast<std::uint64_t>(k) << 16) | static_cast<std::uint64_t>(l);
}

BicyclicPair unpack_pair(const GroupSpec& spec, std::uint64_t packed) {
  return BicyclicPair{
      spec.element(static_cast<std::int64_t>(packed >> 48),
                   static_cast<std::int64_t>((packed >> 32) & 0xffff)),
      spec.element(static_cast<std::int64_t>((packed >> 16) & 0xffff),
                   static_cast<std::int64_t>(packed & 0xffff))};
}

std::vector<std::uint64_t> enumerate_exact_pairs(const GroupSpec& spec) {
  if (spec.a_range > (1 << 16) || spec.b_range > (1 << 16))
    throw std::domain_error("enumerate_exact_pairs: exponent range exceeds 16 bits");
  std::vector<std::uint64_t> out;
  for (std::int64_t i = 0; i < spec.b_range; ++i)
    for (std::int64_t j = 0; j < spec.a_range; ++j)
      for (std::int64_t k = 0; k < spec.b_range; ++k)
        for (std::int64_t l = 0; l < spec.a_range; ++l)
          if (is_exact_pair_fast(spec, i, j, k, l)) out.push_back(pack_pair(i, j, k, l));
  return out;
}

}  // namespace dessins
