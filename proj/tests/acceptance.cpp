// Acceptance gate: one pass/fail line per criterion, exit nonzero on any
// failure. All checks are exact integer equalities.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "dessins/autgroup.hpp"
#include "dessins/bicyclic.hpp"
#include "dessins/classify.hpp"
#include "dessins/dessin.hpp"
#include "dessins/errors.hpp"
#include "dessins/group.hpp"
#include "support/coset_table.hpp"

using namespace dessins;

namespace {

int checks_failed = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    ++checks_failed;
    std::printf("    check failed: %s\n", what);
  }
}

void expect_eq(std::int64_t got, std::int64_t want, const char* what) {
  if (got != want) {
    ++checks_failed;
    std::printf("    check failed: %s (got %lld, want %lld)\n", what,
                static_cast<long long>(got), static_cast<long long>(want));
  }
}

// The sweep: p in {3, 5}, 0 <= d <= e, d + e <= 5, plus the (3, 2, 4) specs
// covering all three nonabelian families at order 729.
std::vector<GroupSpec> all_specs() {
  std::vector<GroupSpec> out;
  for (std::int64_t p : {3, 5})
    for (int d = 0; d <= 5; ++d)
      for (int e = d; d + e <= 5; ++e)
        for (const GroupSpec& s : enumerate_specs(p, d, e)) out.push_back(s);
  for (const GroupSpec& s : enumerate_specs(3, 2, 4)) out.push_back(s);
  return out;
}

std::vector<GroupSpec> specs_up_to(std::int64_t max_order) {
  std::vector<GroupSpec> out;
  for (const GroupSpec& s : all_specs())
    if (s.order <= max_order) out.push_back(s);
  return out;
}

// 1. Census verification across the sweep, with pinned class counts.
bool criterion_verify_sweep() {
  const int before = checks_failed;
  for (std::int64_t p : {3, 5})
    for (int d = 0; d <= 5; ++d)
      for (int e = d; d + e <= 5; ++e)
        expect(verify(p, d, e).match, "verify(p,d,e).match across the sweep");
  expect_eq(verify(3, 1, 2).reciprocal_classes, 3, "classes for K(3,9)");
  expect_eq(verify(3, 2, 2).reciprocal_classes, 6, "classes for K(9,9)");
  expect_eq(verify(3, 2, 3).reciprocal_classes, 27, "classes for K(9,27)");
  for (int e = 0; e <= 5; ++e)
    expect_eq(verify(3, 0, e).reciprocal_classes, 1, "classes for K(1,3^e)");
  expect_eq(verify(5, 1, 2).reciprocal_classes, 5, "classes for K(5,25)");
  return checks_failed == before;
}

// 2. The order-729 case where all three nonabelian families occur.
bool criterion_deep_case() {
  const int before = checks_failed;
  const CountReport r = verify(3, 2, 4);
  expect(r.match, "verify(3,2,4).match");
  expect_eq(static_cast<std::int64_t>(r.rows.size()), 5, "spec count for (3,2,4)");
  const char* names[5] = {"M1(2,4,2)", "M1(2,4,3)", "M1(2,4,4)", "M2(2,4,1)",
                          "M3(2,4,3,1)"};
  const std::int64_t nus[5] = {6, 2, 1, 6, 12};
  for (std::size_t k = 0; k < r.rows.size() && k < 5; ++k) {
    expect(r.rows[k].spec.name() == names[k], "spec order for (3,2,4)");
    expect_eq(r.rows[k].nu, nus[k], "per-spec class count for (3,2,4)");
    expect_eq(r.rows[k].orbit_count, nus[k], "explicit orbit count for (3,2,4)");
  }
  expect_eq(r.nu_total, 27, "class total for (3,2,4)");
  expect_eq(r.theorem_value, 27, "closed form 3^(2*2-1)");
  return checks_failed == before;
}

// 3. Exact pair counts equal the closed forms.
bool criterion_pair_counts() {
  const int before = checks_failed;
  expect_eq(static_cast<std::int64_t>(enumerate_exact_pairs(GroupSpec::m1(3, 1, 1, 1)).size()),
            48, "pairs of M1(1,1,1) at p=3");
  expect_eq(static_cast<std::int64_t>(enumerate_exact_pairs(GroupSpec::m1(3, 1, 2, 1)).size()),
            108, "pairs of M1(1,2,1) at p=3");
  for (const GroupSpec& spec : all_specs())
    expect_eq(static_cast<std::int64_t>(enumerate_exact_pairs(spec).size()),
              exact_pair_count_formula(spec), "pair count vs closed form");
  return checks_failed == before;
}

// 4. Automorphism counts equal the closed forms.
bool criterion_aut_counts() {
  const int before = checks_failed;
  expect_eq(count_automorphisms(GroupSpec::m1(3, 1, 1, 1)), 48, "|Aut| of M1(1,1,1)");
  expect_eq(count_automorphisms(GroupSpec::m1(3, 1, 2, 1)), 54, "|Aut| of M1(1,2,1)");
  expect_eq(count_automorphisms(GroupSpec::m3(3, 2, 4, 3, 1)), 2187,
            "|Aut| of M3(2,4,3,1)");
  for (const GroupSpec& spec : all_specs())
    expect_eq(count_automorphisms(spec), aut_count_formula(spec),
              "|Aut| vs closed form");
  return checks_failed == before;
}

// 5. Fast predicates and normal-form arithmetic agree with the definitional
// oracles for every spec of order at most 3^5.
bool criterion_oracles() {
  const int before = checks_failed;
  for (const GroupSpec& spec : specs_up_to(243)) {
    std::int64_t pair_bad = 0, aut_bad = 0;
    for (std::int64_t i = 0; i < spec.b_range; ++i)
      for (std::int64_t j = 0; j < spec.a_range; ++j)
        for (std::int64_t k = 0; k < spec.b_range; ++k)
          for (std::int64_t l = 0; l < spec.a_range; ++l) {
            if (is_exact_pair_fast(spec, i, j, k, l) !=
                is_exact_pair_oracle(spec, spec.element(i, j), spec.element(k, l)))
              ++pair_bad;
            if (is_automorphism_fast(spec, i, j, k, l) !=
                is_automorphism_oracle(spec, i, j, k, l))
              ++aut_bad;
          }
    expect_eq(pair_bad, 0, "fast pair predicate vs oracle (all quadruples)");
    expect_eq(aut_bad, 0, "fast automorphism predicate vs oracle (all quadruples)");

    // Cayley oracle: coset enumeration on the defining presentation.
    const testing::CosetTable table(2, testing::relators_for(spec));
    expect_eq(static_cast<std::int64_t>(table.size()), spec.order,
              "coset count equals the group order");
    if (table.size() != static_cast<std::size_t>(spec.order)) continue;
    const std::uint32_t n = static_cast<std::uint32_t>(spec.order);
    std::vector<std::uint32_t> coset(n);
    for (std::uint32_t g = 0; g < n; ++g)
      coset[g] = testing::coset_of(table, element_at(spec, g));
    std::int64_t cayley_bad = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      const Element y = element_at(spec, k);
      std::vector<std::uint32_t> act_y(n);
      for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t img = c;
        for (std::int64_t w = 0; w < y.i; ++w) img = table.act(img, 2);
        for (std::int64_t w = 0; w < y.j; ++w) img = table.act(img, 1);
        act_y[c] = img;
      }
      for (std::uint32_t g = 0; g < n; ++g)
        if (act_y[coset[g]] != coset[index_of(multiply(element_at(spec, g), y))])
          ++cayley_bad;
    }
    expect_eq(cayley_bad, 0, "normal-form multiply vs coset-enumeration oracle");
  }
  return checks_failed == before;
}

// 6. Derived subgroup, center and quotient invariants; pairwise
// non-isomorphism via the (G', G/G') invariant pairs.
bool criterion_structure() {
  const int before = checks_failed;
  std::map<std::tuple<std::int64_t, int, int>,
           std::set<std::pair<std::int64_t, std::vector<std::int64_t>>>>
      witnesses;
  std::map<std::tuple<std::int64_t, int, int>, std::size_t> spec_totals;
  for (const GroupSpec& spec : specs_up_to(kBruteForceMaxOrder)) {
    int x = 0;  // G is p^x-abelian with Z(G) = <a^{p^x}><b^{p^x}>
    std::int64_t derived_order = 1;
    std::vector<std::int64_t> quotient;
    switch (spec.family) {
      case Family::M1:
        x = spec.e - spec.f;
        derived_order = ipow(spec.p, spec.e - spec.f);
        quotient = {ipow(spec.p, spec.f), ipow(spec.p, spec.d)};
        break;
      case Family::M2:
        x = spec.d - spec.f;
        derived_order = ipow(spec.p, spec.d - spec.f);
        quotient = {ipow(spec.p, spec.f), ipow(spec.p, spec.e)};
        break;
      case Family::M3:
        x = spec.h - spec.f;
        derived_order = ipow(spec.p, spec.h - spec.f);
        quotient = {ipow(spec.p, spec.f), ipow(spec.p, spec.e + spec.d - spec.h)};
        break;
      case Family::Cyclic:
        x = 0;
        derived_order = 1;
        quotient = {ipow(spec.p, spec.e)};
        break;
    }
    std::sort(quotient.begin(), quotient.end(), std::greater<>());
    std::erase(quotient, 1);

    const auto derived = derived_subgroup(spec);
    expect_eq(static_cast<std::int64_t>(derived.size()), derived_order, "|G'|");
    if (spec.family != Family::Cyclic)
      expect(derived ==
                 subgroup_closure(spec, {power(spec.gen_a(), ipow(spec.p, spec.f))}),
             "G' = <a^{p^f}>");
    // G' is cyclic: it contains an element of full order.
    std::int64_t max_order_in_derived = 1;
    for (std::uint32_t idx : derived)
      max_order_in_derived =
          std::max(max_order_in_derived, element_order(element_at(spec, idx)));
    expect_eq(max_order_in_derived, derived_order, "G' cyclic of the stated order");

    const std::int64_t px = ipow(spec.p, x);
    expect(center(spec) == subgroup_closure(spec, {power(spec.gen_a(), px),
                                                   power(spec.gen_b(), px)}),
           "Z(G) = <a^{p^x}><b^{p^x}>");
    expect(is_pi_abelian(spec, x), "G is p^x-abelian");

    const auto invariants = abelian_invariant_type(spec, derived);
    expect(invariants == quotient, "invariant type of G/G'");

    const auto key = std::make_tuple(spec.p, spec.d, spec.e);
    witnesses[key].insert({derived_order, invariants});
    ++spec_totals[key];
  }
  for (const auto& [key, seen] : witnesses)
    expect(seen.size() == spec_totals[key],
           "distinct (G', G/G') invariant pairs per (p, d, e)");
  return checks_failed == before;
}

// 7. Dessin geometry for every orbit representative, and symmetric class
// counts for the square cases.
bool criterion_geometry() {
  const int before = checks_failed;
  for (const GroupSpec& spec : all_specs()) {
    const std::int64_t pd = ipow(spec.p, spec.d);
    const std::int64_t pe = ipow(spec.p, spec.e);
    for (const auto& orbit : orbit_partition(spec)) {
      const Dessin d = build_dessin(spec, unpack_pair(spec, orbit.front()));
      const DessinSummary s = summarize(d);
      expect(s.type == std::array<std::int64_t, 3>{pd, pe, pe}, "type (p^d,p^e,p^e)");
      expect_eq(s.faces, pd, "face count p^d");
      expect_eq(s.genus, (pd - 1) * (pe - 2) / 2, "genus (p^d-1)(p^e-2)/2");
      expect_eq(s.black_vertices + s.white_vertices - s.edges + s.faces,
                2 - 2 * s.genus, "Euler relation, exactly");
    }
  }
  for (std::int64_t p : {3, 5})
    for (int d = 1; d <= 2; ++d)
      expect_eq(verify(p, d, d).symmetric_total, ipow(p, d - 1),
                "symmetric class count p^{e-1} for d = e");
  return checks_failed == before;
}

// 8. Semi-regularity: every orbit has size |Aut(G)| and the class count is an
// exact quotient everywhere in the sweep.
bool criterion_semiregular() {
  const int before = checks_failed;
  for (const GroupSpec& spec : all_specs()) {
    try {
      const std::int64_t auts = aut_count_formula(spec);
      for (const auto& orbit : orbit_partition(spec))
        expect_eq(static_cast<std::int64_t>(orbit.size()), auts,
                  "orbit size equals |Aut(G)|");
      expect_eq(nu_of_group(spec) * auts, exact_pair_count_formula(spec),
                "class count is the exact quotient pairs / |Aut|");
    } catch (const falsification_error&) {
      expect(false, "semi-regularity falsified");
    }
  }
  return checks_failed == before;
}

struct Criterion {
  const char* description;
  bool (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"census verification matches the closed-form class counts (sweep + pins)",
       criterion_verify_sweep},
      {"order-729 case: all three nonabelian families, explicit orbits",
       criterion_deep_case},
      {"exact pair counts equal the closed forms", criterion_pair_counts},
      {"automorphism counts equal the closed forms", criterion_aut_counts},
      {"fast predicates and arithmetic match the definitional oracles (|G| <= 243)",
       criterion_oracles},
      {"derived subgroup, center and quotient invariants; pairwise non-isomorphism",
       criterion_structure},
      {"dessin geometry (Euler, genus, type, faces) and symmetric class counts",
       criterion_geometry},
      {"semi-regular orbits and exact integral class counts", criterion_semiregular},
  };

  int failed = 0;
  int number = 0;
  for (const Criterion& c : criteria) {
    ++number;
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& err) {
      std::printf("    unexpected exception: %s\n", err.what());
      ok = false;
    }
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, c.description);
    std::fflush(stdout);
  }
  if (failed) std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
