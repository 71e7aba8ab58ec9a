#pragma once

#include <cstdint>
#include <vector>

#include "dessins/group.hpp"

namespace dessins {

// An automorphism stored by generator images: a -> b^r a^s, b -> b^t a^u.
struct AutMap {
  const GroupSpec* spec = nullptr;
  std::int64_t r = 0, s = 0, t = 0, u = 0;
};

// Definitional test: the images satisfy the family's defining relations and
// generate G (subgroup closure). Gated on the brute-force bound.
bool is_automorphism_oracle(const GroupSpec& spec, std::int64_t r, std::int64_t s,
                            std::int64_t t, std::int64_t u);

// The closed-form congruence conditions, dispatched by family and, for M1,
// by the (d, e, f) case. No group arithmetic is performed.
bool is_automorphism_fast(const GroupSpec& spec, std::int64_t r, std::int64_t s,
                          std::int64_t t, std::int64_t u);

// Closed form of |Aut(G)|:
//   M1: p^{4e-3}(p^2-1)(p-1)      if f = e = d
//       p^{2(e+f)-1}(p-1)         if f < e = d
//       p^{3d+e-2}(p-1)^2         if d < f = e
//       p^{3d+f-1}(p-1)           if d <= f < e
//       p^{2(d+f)-1}(p-1)         if f < d < e
//   M2: p^{d+e+2f-1}(p-1)
//   M3: p^{2d+e+2f-h}
//   Cyclic: phi(p^e)
std::int64_t aut_count_formula(const GroupSpec& spec);

// Count by sweeping all (r, s, t, u) through the fast predicate.
std::int64_t count_automorphisms(const GroupSpec& spec);

// Same sweep through the definitional oracle. Gated on the brute-force bound.
std::int64_t count_automorphisms_oracle(const GroupSpec& spec);

// All automorphisms, ordered by (r, s, t, u). Throws when the count exceeds
// the budget; use count_automorphisms then.
std::vector<AutMap> enumerate_automorphisms(const GroupSpec& spec,
                                            std::int64_t budget = 2'000'000);

// Image of b^i a^j: (b^t a^u)^i (b^r a^s)^j.
Element apply(const AutMap& aut, const Element& x);

// apply(compose(f, g), x) = apply(f, apply(g, x)); the result is stored by
// re-extracting generator images.
AutMap compose(const AutMap& f, const AutMap& g);

}  // namespace dessins
