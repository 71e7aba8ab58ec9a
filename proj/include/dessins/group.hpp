#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dessins/numtheory.hpp"

namespace dessins {

// The classified families of exact bicyclic p-groups of odd order p^{d+e}:
//
//   M1(d,e,f):    a^{p^e} = b^{p^d} = 1,                       a^b = a^{1+p^f}
//                 with d >= 1, 1 <= f <= e and e <= d+f
//   M2(d,e,f):    a^{p^d} = b^{p^e} = 1,                       a^b = a^{1+p^f}
//                 with 1 <= f < d < e
//   M3(d,e,h,f):  a^{p^h} = 1, b^{p^{d+e-h}} = a^{p^d},        a^b = a^{1+p^f}
//                 with h-d <= f < d < h < e
//   Cyclic:       b^{p^e} = 1, a = 1   (the d = 0 case)
enum class Family { M1, M2, M3, Cyclic };

// Brute-force structural computations refuse groups larger than this.
inline constexpr std::int64_t kBruteForceMaxOrder = 729;  // 3^6

struct GroupSpec;

// Normal form b^i a^j. Exponents are always reduced into the canonical
// ranges 0 <= i < b_range, 0 <= j < a_range of the owning spec. Every group
// element has exactly one normal form since <a> is normal and
// a_range * b_range = |G|.
struct Element {
  const GroupSpec* spec = nullptr;
  std::int64_t i = 0;  // exponent of b
  std::int64_t j = 0;  // exponent of a

  friend bool operator==(const Element& x, const Element& y) {
    return x.i == y.i && x.j == y.j;
  }
};

struct GroupSpec {
  Family family;
  std::int64_t p;
  int d, e;
  int f;  // -1 for Cyclic
  int h;  // -1 unless M3

  // Derived data.
  std::int64_t a_range;  // modulus of the a-exponent (= |a|)
  std::int64_t b_range;  // modulus of the b-exponent
  std::int64_t order;    // p^{d+e}
  std::int64_t q;        // 1 + p^f mod a_range (1 for Cyclic)
  std::int64_t carry;    // a-exponent emitted when the b-exponent wraps (M3: p^d, else 0)

  static GroupSpec m1(std::int64_t p, int d, int e, int f);
  static GroupSpec m2(std::int64_t p, int d, int e, int f);
  static GroupSpec m3(std::int64_t p, int d, int e, int h, int f);
  static GroupSpec cyclic(std::int64_t p, int e);

  Element element(std::int64_t i, std::int64_t j) const;
  Element identity() const { return Element{this, 0, 0}; }
  Element gen_a() const;  // a (identity in the cyclic family)
  Element gen_b() const;

  std::string name() const;  // e.g. "M1(2,4,3)", "M3(2,4,3,1)", "C(2)"

  // q^k mod a_range, table-backed for small b_range.
  std::int64_t q_pow(std::int64_t k) const;

  friend bool operator==(const GroupSpec& x, const GroupSpec& y) {
    return x.family == y.family && x.p == y.p && x.d == y.d && x.e == y.e &&
           x.f == y.f && x.h == y.h;
  }

  GroupSpec() = default;  // empty shell; real specs come from the factories

 private:
  void finish();  // fills derived fields
  std::vector<std::int64_t> q_table_;
};

// All valid specs for the given (p, d, e): the cyclic group when d = 0,
// otherwise every M1(d,e,f), M2(d,e,f) and M3(d,e,h,f) satisfying the family
// conditions. Ordered by family, then lexicographically by (f, h).
std::vector<GroupSpec> enumerate_specs(std::int64_t p, int d, int e);

Element multiply(const Element& x, const Element& y);
Element power(const Element& x, std::int64_t m);
Element inverse(const Element& x);

// Least p^k with x^{p^k} = 1.
std::int64_t element_order(const Element& x);

// Dense index of an element, i * a_range + j; elements sort lexicographically
// by (i, j) under this index.
std::uint32_t index_of(const Element& x);
Element element_at(const GroupSpec& spec, std::uint32_t index);

// --- brute-force structural operations (gated on |G| <= kBruteForceMaxOrder) ---

// Element set of <gens>, as a sorted vector of dense indices.
std::vector<std::uint32_t> subgroup_closure(const GroupSpec& spec,
                                            const std::vector<Element>& gens);

std::vector<std::uint32_t> derived_subgroup(const GroupSpec& spec);
std::vector<std::uint32_t> center(const GroupSpec& spec);

// Mho_i = <g^{p^i}> and Omega_i = <g : g^{p^i} = 1>.
std::vector<std::uint32_t> mho(const GroupSpec& spec, int i);
std::vector<std::uint32_t> omega(const GroupSpec& spec, int i);

// (xy)^{p^i} = x^{p^i} y^{p^i} for all x, y.
bool is_pi_abelian(const GroupSpec& spec, int i);

// Invariant factor decomposition of the abelian quotient G/N, as prime powers
// in decreasing order (trivial factors dropped; {} for the trivial group).
// N must be normal and contain G', otherwise the quotient is rejected.
std::vector<std::int64_t> abelian_invariant_type(
    const GroupSpec& spec, const std::vector<std::uint32_t>& normal_subgroup);

}  // namespace dessins
