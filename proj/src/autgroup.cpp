#include "dessins/autgroup.hpp"

#include <stdexcept>

namespace dessins {

namespace {

void check_brute_force(const GroupSpec& spec, const char* op) {
  if (spec.order > kBruteForceMaxOrder)
    throw std::domain_error(std::string(op) + ": |G| exceeds the brute-force bound");
}

}  // namespace

bool is_automorphism_oracle(const GroupSpec& spec, std::int64_t r, std::int64_t s,
                            std::int64_t t, std::int64_t u) {
  check_brute_force(spec, "is_automorphism_oracle");
  const Element a1 = spec.element(r, s);
  const Element b1 = spec.element(t, u);
  switch (spec.family) {
    case Family::M1:
      if (!(power(b1, ipow(spec.p, spec.d)) == spec.identity())) return false;
      break;
    case Family::M2:
      if (!(power(a1, ipow(spec.p, spec.d)) == spec.identity())) return false;
      break;
    case Family::M3:
      if (!(power(a1, ipow(spec.p, spec.h)) == spec.identity())) return false;
      if (!(power(b1, ipow(spec.p, spec.d + spec.e - spec.h)) ==
            power(a1, ipow(spec.p, spec.d))))
        return false;
      break;
    case Family::Cyclic:
      if (!(a1 == spec.identity())) return false;
      break;
  }
  if (spec.family != Family::Cyclic) {
    // a1^{b1} = a1^{1+p^f}
    if (!(multiply(multiply(inverse(b1), a1), b1) == power(a1, spec.q))) return false;
  }
  return subgroup_closure(spec, {a1, b1}).size() ==
         static_cast<std::size_t>(spec.order);
}

bool is_automorphism_fast(const GroupSpec& spec, std::int64_t r, std::int64_t s,
                          std::int64_t t, std::int64_t u) {
  const std::int64_t p = spec.p;
  const int d = spec.d, e = spec.e, f = spec.f, h = spec.h;
  switch (spec.family) {
    case Family::M1:
      if (d == e) {
        if (f == e)  // GL(2, Z_{p^e})
          return (r * u - s * t) % p != 0;
        return r % ipow(p, e - f) == 0 && t % ipow(p, e - f) == 1 && s % p != 0;
      }
      if (f == e) return u % ipow(p, e - d) == 0 && s % p != 0 && t % p != 0;
      if (f >= d)  // d <= f < e
        return u % ipow(p, e - d) == 0 && t % ipow(p, e - f) == 1 && s % p != 0;
      // f < d < e
      return r % ipow(p, d - f) == 0 && u % ipow(p, e - d) == 0 &&
             t % ipow(p, e - f) == 1 && s % p != 0;
    case Family::M2:
      return r % ipow(p, e - f) == 0 && s % p != 0 && t % ipow(p, d - f) == 1;
    case Family::M3: {
      if (r % ipow(p, d + e - h - f) != 0) return false;
      if (t % ipow(p, d - f) != 1) return false;
      const std::int64_t pef = ipow(p, e - f);
      if ((r - (t - 1) * ipow(p, e - h)) % pef != 0) return false;
      return (s - 1 - u * ipow(p, e - h)) % ipow(p, h - d) == 0;
    }
    case Family::Cyclic:
      if (spec.e == 0) return true;
      return r == 0 && t % p != 0;
  }
  return false;
}

std::int64_t aut_count_formula(const GroupSpec& spec) {
  const std::int64_t p = spec.p;
  const int d = spec.d, e = spec.e, f = spec.f, h = spec.h;
  switch (spec.family) {
    case Family::M1:
      if (f == e && e == d) return ipow(p, 4 * e - 3) * (p * p - 1) * (p - 1);
      if (f < e && e == d) return ipow(p, 2 * (e + f) - 1) * (p - 1);
      if (d < f && f == e) return ipow(p, 3 * d + e - 2) * (p - 1) * (p - 1);
      if (d <= f && f < e) return ipow(p, 3 * d + f - 1) * (p - 1);
      return ipow(p, 2 * (d + f) - 1) * (p - 1);  // f < d < e
    case Family::M2:
      return ipow(p, d + e + 2 * f - 1) * (p - 1);
    case Family::M3:
      return ipow(p, 2 * d + e + 2 * f - h);
    case Family::Cyclic:
      return e == 0 ? 1 : ipow(p, e - 1) * (p - 1);
  }
  return 0;
}

std::int64_t count_automorphisms(const GroupSpec& spec) {
  std::int64_t count = 0;
  for (std::int64_t r = 0; r < spec.b_range; ++r)
    for (std::int64_t s = 0; s < spec.a_range; ++s)
      for (std::int64_t t = 0; t < spec.b_range; ++t)
        for (std::int64_t u = 0; u < spec.a_range; ++u)
          if (is_automorphism_fast(spec, r, s, t, u)) ++count;
  return count;
}

std::int64_t count_automorphisms_oracle(const GroupSpec& spec) {
  check_brute_force(spec, "count_automorphisms_oracle");
  std::int64_t count = 0;
  for (std::int64_t r = 0; r < spec.b_range; ++r)
    for (std::int64_t s = 0; s < spec.a_range; ++s)
      for (std::int64_t t = 0; t < spec.b_range; ++t)
        for (std::int64_t u = 0; u < spec.a_range; ++u)
          if (is_automorphism_oracle(spec, r, s, t, u)) ++count;
  return count;
}

std::vector<AutMap> enumerate_automorphisms(const GroupSpec& spec, std::int64_t budget) {
  std::vector<AutMap> out;
  for (std::int64_t r = 0; r < spec.b_range; ++r)
    for (std::int64_t s = 0; s < spec.a_range; ++s)
      for (std::int64_t t = 0; t < spec.b_range; ++t)
        for (std::int64_t u = 0; u < spec.a_range; ++u)
          if (is_automorphism_fast(spec, r, s, t, u)) {
            if (static_cast<std::int64_t>(out.size()) >= budget)
              throw std::length_error("enumerate_automorphisms: budget exceeded");
            out.push_back(AutMap{&spec, r, s, t, u});
          }
  return out;
}

Element apply(const AutMap& aut, const Element& x) {
  if (!(*aut.spec == *x.spec))
    throw std::invalid_argument("apply: element belongs to a different group");
  const Element b_img = Element{aut.spec, aut.t, aut.u};
  const Element a_img = Element{aut.spec, aut.r, aut.s};
  return multiply(power(b_img, x.i), power(a_img, x.j));
}

AutMap compose(const AutMap& f, const AutMap& g) {
  if (!(*f.spec == *g.spec))
    throw std::invalid_argument("compose: maps on different groups");
  const Element a_img = apply(f, Element{f.spec, g.r, g.s});
  const Element b_img = apply(f, Element{f.spec, g.t, g.u});
  return AutMap{f.spec, a_img.i, a_img.j, b_img.i, b_img.j};
}

}  // namespace dessins
