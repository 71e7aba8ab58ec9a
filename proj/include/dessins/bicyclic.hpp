#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dessins/group.hpp"

namespace dessins {

// Ordered pair (alpha, beta) claimed to be an exact (p^d, p^e)-bicyclic
// generating pair: |alpha| = p^d, |beta| = p^e, <alpha> intersect <beta> = 1.
struct BicyclicPair {
  Element alpha;
  Element beta;
};

// Definitional test: order checks plus trivial intersection of the explicit
// cyclic subgroups. Gated on the brute-force bound.
bool is_exact_pair_oracle(const GroupSpec& spec, const Element& alpha, const Element& beta);

// The closed-form congruence conditions for alpha = b^i a^j, beta = b^k a^l:
//   M1, d = e:  p does not divide il - jk
//   M1, d < e:  p^{e-d} | j  and  p does not divide il
//   M2:         p^{e-d} | i  and  p does not divide jk
//   M3:         p^{e-h} || i,  p^{h-d} | (j + i/p^{e-h}),  p does not divide jk
//   Cyclic:     alpha = 1 and beta a generator
// No group arithmetic is performed.
bool is_exact_pair_fast(const GroupSpec& spec, std::int64_t i, std::int64_t j,
                        std::int64_t k, std::int64_t l);

// Closed form of the pair count:
//   p^{4e-3}(p^2-1)(p-1) for M1 with d = e, p^{3d+e-2}(p-1)^2 otherwise
//   (phi(p^e) for the cyclic family).
std::int64_t exact_pair_count_formula(const GroupSpec& spec);

// Count by sweeping all exponent quadruples through the fast predicate.
std::int64_t count_exact_pairs(const GroupSpec& spec);

// Same count through the definitional oracle (cyclic subgroups memoized).
// Gated on the brute-force bound.
std::int64_t count_exact_pairs_oracle(const GroupSpec& spec);

// Exact pairs packed as 16-bit fields (i, j, k, l), in increasing order.
// Requires every exponent range to fit in 16 bits.
std::uint64_t pack_pair(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l);
BicyclicPair unpack_pair(const GroupSpec& spec, std::uint64_t packed);
std::vector<std::uint64_t> enumerate_exact_pairs(const GroupSpec& spec);

}  // namespace dessins
