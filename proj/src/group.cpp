#include "dessins/group.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace dessins {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t quot = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --quot;
  return quot;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_brute_force(const GroupSpec& spec, const char* op) {
  if (spec.order > kBruteForceMaxOrder)
    throw std::domain_error(std::string(op) + ": |G| exceeds the brute-force bound");
}

const GroupSpec& shared_spec(const Element& x, const Element& y) {
  if (x.spec == y.spec) return *x.spec;
  if (x.spec == nullptr || y.spec == nullptr || !(*x.spec == *y.spec))
    throw std::invalid_argument("elements belong to different groups");
  return *x.spec;
}

}  // namespace

void GroupSpec::finish() {
  order = ipow(p, d + e);
  switch (family) {
    case Family::M1:
      a_range = ipow(p, e);
      b_range = ipow(p, d);
      q = (1 + ipow(p, f)) % a_range;
      carry = 0;
      break;
    case Family::M2:
      a_range = ipow(p, d);
      b_range = ipow(p, e);
      q = (1 + ipow(p, f)) % a_range;
      carry = 0;
      break;
    case Family::M3:
      a_range = ipow(p, h);
      b_range = ipow(p, d + e - h);
      q = (1 + ipow(p, f)) % a_range;
      carry = ipow(p, d);  // b^{b_range} = a^{p^d}, a central element
      break;
    case Family::Cyclic:
      a_range = 1;
      b_range = ipow(p, e);
      q = 1 % a_range;
      carry = 0;
      break;
  }
  if (b_range <= (1 << 16)) {
    q_table_.resize(static_cast<std::size_t>(b_range));
    std::int64_t v = 1 % a_range;
    for (std::int64_t k = 0; k < b_range; ++k) {
      q_table_[static_cast<std::size_t>(k)] = v;
      v = v * q % a_range;
    }
  }
}

GroupSpec GroupSpec::m1(std::int64_t p, int d, int e, int f) {
  require(is_odd_prime(p), "M1: p must be an odd prime");
  // Union of the two parameter branches: 1 <= f <= e and e <= d+f, d >= 1.
  require(1 <= d && 1 <= f && f <= e && e <= d + f,
          "M1: parameters violate the family condition");
  GroupSpec s;
  s.family = Family::M1;
  s.p = p;
  s.d = d;
  s.e = e;
  s.f = f;
  s.h = -1;
  s.finish();
  return s;
}

GroupSpec GroupSpec::m2(std::int64_t p, int d, int e, int f) {
  require(is_odd_prime(p), "M2: p must be an odd prime");
  require(1 <= f && f < d && d < e, "M2: parameters violate the family condition");
  GroupSpec s;
  s.family = Family::M2;
  s.p = p;
  s.d = d;
  s.e = e;
  s.f = f;
  s.h = -1;
  s.finish();
  return s;
}

GroupSpec GroupSpec::m3(std::int64_t p, int d, int e, int h, int f) {
  require(is_odd_prime(p), "M3: p must be an odd prime");
  require(h - d <= f && f < d && d < h && h < e,
          "M3: parameters violate the family condition");
  GroupSpec s;
  s.family = Family::M3;
  s.p = p;
  s.d = d;
  s.e = e;
  s.f = f;
  s.h = h;
  s.finish();
  return s;
}

GroupSpec GroupSpec::cyclic(std::int64_t p, int e) {
  require(is_odd_prime(p), "cyclic: p must be an odd prime");
  require(e >= 0, "cyclic: negative exponent");
  GroupSpec s;
  s.family = Family::Cyclic;
  s.p = p;
  s.d = 0;
  s.e = e;
  s.f = -1;
  s.h = -1;
  s.finish();
  return s;
}

Element GroupSpec::element(std::int64_t i, std::int64_t j) const {
  // Reducing the b-exponent past its range emits the central carry a^{p^d}
  // in M3 (and nothing elsewhere, where b^{b_range} = 1).
  const std::int64_t c = floor_div(i, b_range);
  i -= c * b_range;
  j += c * carry;
  j %= a_range;
  if (j < 0) j += a_range;
  return Element{this, i, j};
}

Element GroupSpec::gen_a() const { return element(0, family == Family::Cyclic ? 0 : 1); }

Element GroupSpec::gen_b() const { return element(b_range > 1 ? 1 : 0, 0); }

std::string GroupSpec::name() const {
  switch (family) {
    case Family::M1:
      return "M1(" + std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(f) + ")";
    case Family::M2:
      return "M2(" + std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(f) + ")";
    case Family::M3:
      return "M3(" + std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(h) +
             "," + std::to_string(f) + ")";
    case Family::Cyclic:
      return "C(" + std::to_string(e) + ")";
  }
  return {};
}

std::int64_t GroupSpec::q_pow(std::int64_t k) const {
  k %= b_range;  // q^{b_range} = 1 in <a>'s automorphism action
  if (k < 0) k += b_range;
  if (!q_table_.empty()) return q_table_[static_cast<std::size_t>(k)];
  return pow_mod(q, k, a_range);
}

std::vector<GroupSpec> enumerate_specs(std::int64_t p, int d, int e) {
  require(is_odd_prime(p), "enumerate_specs: p must be an odd prime");
  require(0 <= d && d <= e, "enumerate_specs: need 0 <= d <= e");
  ipow(p, d + e);  // enforce the arithmetic bound up front
  std::vector<GroupSpec> out;
  if (d == 0) {
    out.push_back(GroupSpec::cyclic(p, e));
    return out;
  }
  for (int f = 1; f <= e; ++f)
    if (e <= d + f) out.push_back(GroupSpec::m1(p, d, e, f));
  for (int f = 1; f < d; ++f)
    if (d < e) out.push_back(GroupSpec::m2(p, d, e, f));
  for (int f = 1; f < d; ++f)
    for (int h = d + 1; h < e; ++h)
      if (h - d <= f) out.push_back(GroupSpec::m3(p, d, e, h, f));
  return out;
}

Element multiply(const Element& x, const Element& y) {
  const GroupSpec& s = shared_spec(x, y);
  // (b^i1 a^j1)(b^i2 a^j2) = b^{i1+i2} a^{j1 q^{i2} + j2}
  std::int64_t i = x.i + y.i;
  std::int64_t j = x.j * s.q_pow(y.i) % s.a_range + y.j;
  if (i >= s.b_range) {
    i -= s.b_range;
    j += s.carry;
  }
  j %= s.a_range;
  return Element{&s, i, j};
}

Element power(const Element& x, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("power: negative exponent");
  const GroupSpec& s = *x.spec;
  // (b^i a^j)^m = b^{im} a^{j * sum_{k<m} q^{ik}}, plus one central carry
  // a^{p^d} per wrap of the b-exponent in M3.
  const std::int64_t im = x.i * m;
  const std::int64_t wraps = im / s.b_range;
  std::int64_t j = x.j * geom_sum(s.q_pow(x.i), m, s.a_range) % s.a_range;
  if (s.carry != 0) j = (j + wraps % s.a_range * s.carry) % s.a_range;
  return Element{&s, im % s.b_range, j};
}

Element inverse(const Element& x) {
  return power(x, x.spec->order - 1);
}

std::int64_t element_order(const Element& x) {
  const GroupSpec& s = *x.spec;
  std::int64_t pk = 1;
  for (int k = 0; k <= s.d + s.e; ++k) {
    if (power(x, pk) == s.identity()) return pk;
    pk *= s.p;
  }
  throw std::logic_error("element_order: no power p^k annihilates the element");
}

std::uint32_t index_of(const Element& x) {
  return static_cast<std::uint32_t>(x.i * x.spec->a_range + x.j);
}

Element element_at(const GroupSpec& spec, std::uint32_t index) {
  return Element{&spec, index / spec.a_range, index % spec.a_range};
}

std::vector<std::uint32_t> subgroup_closure(const GroupSpec& spec,
                                            const std::vector<Element>& gens) {
  check_brute_force(spec, "subgroup_closure");
  std::vector<bool> seen(static_cast<std::size_t>(spec.order), false);
  std::vector<std::uint32_t> todo;
  seen[index_of(spec.identity())] = true;
  todo.push_back(index_of(spec.identity()));
  for (std::size_t head = 0; head < todo.size(); ++head) {
    const Element x = element_at(spec, todo[head]);
    for (const Element& g : gens) {
      const std::uint32_t y = index_of(multiply(x, g));
      if (!seen[y]) {
        seen[y] = true;
        todo.push_back(y);
      }
    }
  }
  std::sort(todo.begin(), todo.end());
  return todo;
}

std::vector<std::uint32_t> derived_subgroup(const GroupSpec& spec) {
  check_brute_force(spec, "derived_subgroup");
  const std::uint32_t n = static_cast<std::uint32_t>(spec.order);
  std::vector<Element> inv(n);
  for (std::uint32_t g = 0; g < n; ++g) inv[g] = inverse(element_at(spec, g));
  std::vector<bool> mark(n, false);
  std::vector<Element> comms;
  for (std::uint32_t g = 0; g < n; ++g) {
    const Element x = element_at(spec, g);
    for (std::uint32_t k = 0; k < n; ++k) {
      const Element y = element_at(spec, k);
      const Element c = multiply(multiply(inv[g], inv[k]), multiply(x, y));
      if (!mark[index_of(c)]) {
        mark[index_of(c)] = true;
        comms.push_back(c);
      }
    }
  }
  return subgroup_closure(spec, comms);
}

std::vector<std::uint32_t> center(const GroupSpec& spec) {
  check_brute_force(spec, "center");
  const std::uint32_t n = static_cast<std::uint32_t>(spec.order);
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 0; g < n; ++g) {
    const Element x = element_at(spec, g);
    bool central = true;
    for (std::uint32_t k = 0; k < n && central; ++k) {
      const Element y = element_at(spec, k);
      central = multiply(x, y) == multiply(y, x);
    }
    if (central) out.push_back(g);
  }
  return out;
}

std::vector<std::uint32_t> mho(const GroupSpec& spec, int i) {
  check_brute_force(spec, "mho");
  if (i < 0) throw std::invalid_argument("mho: negative index");
  const std::int64_t pi = ipow(spec.p, i);
  std::vector<Element> gens;
  for (std::uint32_t g = 0; g < spec.order; ++g)
    gens.push_back(power(element_at(spec, g), pi));
  return subgroup_closure(spec, gens);
}

std::vector<std::uint32_t> omega(const GroupSpec& spec, int i) {
  check_brute_force(spec, "omega");
  if (i < 0) throw std::invalid_argument("omega: negative index");
  const std::int64_t pi = ipow(spec.p, i);
  std::vector<Element> gens;
  for (std::uint32_t g = 0; g < spec.order; ++g) {
    const Element x = element_at(spec, g);
    if (power(x, pi) == spec.identity()) gens.push_back(x);
  }
  return subgroup_closure(spec, gens);
}

bool is_pi_abelian(const GroupSpec& spec, int i) {
  check_brute_force(spec, "is_pi_abelian");
  if (i < 0) throw std::invalid_argument("is_pi_abelian: negative index");
  const std::int64_t pi = ipow(spec.p, i);
  const std::uint32_t n = static_cast<std::uint32_t>(spec.order);
  std::vector<Element> pw(n);
  for (std::uint32_t g = 0; g < n; ++g) pw[g] = power(element_at(spec, g), pi);
  for (std::uint32_t g = 0; g < n; ++g) {
    const Element x = element_at(spec, g);
    for (std::uint32_t k = 0; k < n; ++k) {
      const Element y = element_at(spec, k);
      if (!(pw[index_of(multiply(x, y))] == multiply(pw[g], pw[k]))) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> abelian_invariant_type(
    const GroupSpec& spec, const std::vector<std::uint32_t>& normal_subgroup) {
  check_brute_force(spec, "abelian_invariant_type");
  const std::uint32_t n = static_cast<std::uint32_t>(spec.order);
  std::vector<bool> in_n(n, false);
  for (std::uint32_t g : normal_subgroup) in_n[g] = true;
  if (normal_subgroup.empty() || !in_n[index_of(spec.identity())])
    throw std::invalid_argument("abelian_invariant_type: not a subgroup");
  // Normality: closed under conjugation by the generators.
  for (std::uint32_t g : normal_subgroup) {
    const Element x = element_at(spec, g);
    for (const Element& s : {spec.gen_a(), spec.gen_b()}) {
      if (!in_n[index_of(multiply(multiply(inverse(s), x), s))])
        throw std::invalid_argument("abelian_invariant_type: subgroup not normal");
    }
  }
  // The quotient is abelian iff N contains G'.
  for (std::uint32_t g : derived_subgroup(spec))
    if (!in_n[g])
      throw std::invalid_argument("abelian_invariant_type: quotient is not abelian");

  // Coset representatives: the minimum index in each coset gN.
  std::vector<std::uint32_t> rep(n, n);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (rep[g] != n) continue;
    const Element x = element_at(spec, g);
    for (std::uint32_t m : normal_subgroup) rep[index_of(multiply(x, element_at(spec, m)))] = g;
    reps.push_back(g);
  }

  // Order profile: c_k = #cosets killed by p^k. The conjugate partition of
  // the invariant factor exponents is m_k = v_p(c_k) - v_p(c_{k-1}).
  const std::int64_t quotient_order = static_cast<std::int64_t>(reps.size());
  std::vector<int> exponent_ge;  // exponent_ge[k-1] = #factors with exponent >= k
  std::int64_t prev = 1;
  for (int k = 1; prev < quotient_order; ++k) {
    const std::int64_t pk = ipow(spec.p, k);
    std::int64_t c = 0;
    for (std::uint32_t g : reps)
      if (in_n[index_of(power(element_at(spec, g), pk))]) ++c;
    exponent_ge.push_back(valuation(spec.p, c) - valuation(spec.p, prev));
    prev = c;
  }
  std::vector<std::int64_t> factors;
  const int count = exponent_ge.empty() ? 0 : exponent_ge.front();
  for (int j = 1; j <= count; ++j) {
    int lambda = 0;
    for (int m : exponent_ge)
      if (m >= j) ++lambda;
    factors.push_back(ipow(spec.p, lambda));
  }
  return factors;  // built in decreasing order
}

}  // namespace dessins
