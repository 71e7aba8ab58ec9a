#include "dessins/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "dessins/dessin.hpp"
#include "dessins/errors.hpp"

namespace dessins {

std::int64_t theorem_formula(std::int64_t p, int d, int e) {
  if (!is_odd_prime(p)) throw std::invalid_argument("theorem_formula: p must be an odd prime");
  if (d < 0 || d > e) throw std::invalid_argument("theorem_formula: need 0 <= d <= e");
  if (d == 0) return 1;
  if (d == e) return ipow(p, e - 1) * (1 + ipow(p, e - 1)) / 2;
  return ipow(p, 2 * d - 1);
}

std::int64_t nu_formula(const GroupSpec& spec) {
  const std::int64_t p = spec.p;
  const int d = spec.d, e = spec.e, f = spec.f, h = spec.h;
  switch (spec.family) {
    case Family::Cyclic:
      return 1;
    case Family::M1:
      if (d == e) return f == e ? 1 : ipow(p, 2 * e - 2 * f - 2) * (p * p - 1);
      if (f == e) return 1;
      if (f >= d) return ipow(p, e - f - 1) * (p - 1);   // d <= f < e
      return ipow(p, d + e - 2 * f - 1) * (p - 1);       // f < d < e
    case Family::M2:
      return ipow(p, 2 * d - 2 * f - 1) * (p - 1);
    case Family::M3:
      return ipow(p, d + h - 2 * (f + 1)) * (p - 1) * (p - 1);
  }
  return 0;
}

std::int64_t nu_of_group(const GroupSpec& spec) {
  const std::int64_t pairs = count_exact_pairs(spec);
  const std::int64_t auts = count_automorphisms(spec);
  if (auts == 0 || pairs % auts != 0)
    throw falsification_error("nu_of_group: pair count not divisible by |Aut| for " +
                              spec.name());
  return pairs / auts;
}

namespace {

std::uint64_t apply_to_pair(const GroupSpec& spec, const AutMap& aut, std::uint64_t packed) {
  const BicyclicPair pair = unpack_pair(spec, packed);
  const Element a = apply(aut, pair.alpha);
  const Element b = apply(aut, pair.beta);
  return pack_pair(a.i, a.j, b.i, b.j);
}

std::vector<std::vector<std::uint64_t>> partition_pairs(const GroupSpec& spec,
                                                        const std::vector<std::uint64_t>& pairs,
                                                        const std::vector<AutMap>& auts) {
  std::vector<bool> visited(pairs.size(), false);
  std::vector<std::vector<std::uint64_t>> orbits;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    if (visited[idx]) continue;
    std::vector<std::uint64_t> orbit;
    orbit.reserve(auts.size());
    for (const AutMap& aut : auts) orbit.push_back(apply_to_pair(spec, aut, pairs[idx]));
    std::sort(orbit.begin(), orbit.end());
    if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end())
      throw falsification_error("orbit_partition: automorphism fixes a pair in " + spec.name());
    for (std::uint64_t image : orbit) {
      const auto it = std::lower_bound(pairs.begin(), pairs.end(), image);
      if (it == pairs.end() || *it != image)
        throw falsification_error("orbit_partition: image is not an exact pair in " +
                                  spec.name());
      visited[static_cast<std::size_t>(it - pairs.begin())] = true;
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> orbit_partition(const GroupSpec& spec) {
  return partition_pairs(spec, enumerate_exact_pairs(spec), enumerate_automorphisms(spec));
}

bool is_isobicyclic(const GroupSpec& spec, const BicyclicPair& pair,
                    const std::vector<AutMap>& auts) {
  if (spec.d != spec.e) throw std::invalid_argument("is_isobicyclic: requires d = e");
  for (const AutMap& aut : auts)
    if (apply(aut, pair.alpha) == pair.beta && apply(aut, pair.beta) == pair.alpha)
      return true;
  return false;
}

bool is_isobicyclic(const GroupSpec& spec, const BicyclicPair& pair) {
  return is_isobicyclic(spec, pair, enumerate_automorphisms(spec));
}

namespace {

bool check_representative_dessin(const GroupSpec& spec, std::uint64_t packed) {
  const Dessin dessin = build_dessin(spec, unpack_pair(spec, packed));
  const DessinSummary s = summarize(dessin);
  const std::int64_t pd = ipow(spec.p, spec.d);
  const std::int64_t pe = ipow(spec.p, spec.e);
  return s.type == std::array<std::int64_t, 3>{pd, pe, pe} && s.faces == pd &&
         s.genus == (pd - 1) * (pe - 2) / 2;
}

}  // namespace

CountReport verify(std::int64_t p, int d, int e, const VerifyOptions& options) {
  CountReport report;
  report.p = p;
  report.d = d;
  report.e = e;
  report.theorem_value = theorem_formula(p, d, e);

  bool all_match = true;
  for (const GroupSpec& spec : enumerate_specs(p, d, e)) {
    SpecReport row;
    row.spec = spec;
    row.pair_count =
        options.use_oracle ? count_exact_pairs_oracle(spec) : count_exact_pairs(spec);
    row.pair_formula = exact_pair_count_formula(spec);
    row.aut_count =
        options.use_oracle ? count_automorphisms_oracle(spec) : count_automorphisms(spec);
    row.aut_formula = aut_count_formula(spec);
    if (row.aut_count == 0 || row.pair_count % row.aut_count != 0)
      throw falsification_error("verify: pair count not divisible by |Aut| for " + spec.name());
    row.nu = row.pair_count / row.aut_count;
    row.nu_formula = nu_formula(spec);

    bool ok = row.pair_count == row.pair_formula && row.aut_count == row.aut_formula &&
              row.nu == row.nu_formula;

    if (row.pair_count <= options.orbit_budget) {
      const std::vector<std::uint64_t> pairs = enumerate_exact_pairs(spec);
      const std::vector<AutMap> auts = enumerate_automorphisms(spec);
      const auto orbits = partition_pairs(spec, pairs, auts);
      row.orbit_count = static_cast<std::int64_t>(orbits.size());
      ok = ok && row.orbit_count == row.nu;
      if (d == e && d > 0) {
        row.symmetric_orbits = 0;
        for (const auto& orbit : orbits)
          if (is_isobicyclic(spec, unpack_pair(spec, orbit.front()), auts))
            ++row.symmetric_orbits;
      }
      if (options.check_dessins)
        for (const auto& orbit : orbits)
          ok = ok && check_representative_dessin(spec, orbit.front());
    }

    row.match = ok;
    all_match = all_match && ok;
    report.nu_total += row.nu;
    report.rows.push_back(std::move(row));
  }

  if (d == e && d > 0) {
    // nu_total counts dessin classes here; the closed form counts reciprocal
    // pairs, where each symmetric class is its own pair.
    report.symmetric_total = 0;
    bool have_symmetric = true;
    for (const SpecReport& row : report.rows) {
      if (row.symmetric_orbits < 0) have_symmetric = false;
      report.symmetric_total += std::max<std::int64_t>(row.symmetric_orbits, 0);
    }
    all_match = all_match && report.nu_total == ipow(p, 2 * (e - 1));
    if (have_symmetric) {
      all_match = all_match && report.symmetric_total == ipow(p, e - 1);
      report.reciprocal_classes =
          report.symmetric_total + (report.nu_total - report.symmetric_total) / 2;
    } else {
      report.symmetric_total = -1;
      report.reciprocal_classes = -1;
    }
  } else {
    report.reciprocal_classes = report.nu_total;
  }
  if (report.reciprocal_classes >= 0)
    all_match = all_match && report.reciprocal_classes == report.theorem_value;
  report.match = all_match;
  return report;
}

}  // namespace dessins
