#pragma once

#include <cstdint>
#include <vector>

#include "dessins/autgroup.hpp"
#include "dessins/bicyclic.hpp"
#include "dessins/group.hpp"

namespace dessins {

// Per-spec verification row. nu is the number of Aut(G)-orbits on exact
// (p^d, p^e)-bicyclic pairs, i.e. the number of dessin isomorphism classes
// (reciprocal-pair classes when d < e) with this automorphism group.
struct SpecReport {
  GroupSpec spec;
  std::int64_t pair_count = 0;
  std::int64_t pair_formula = 0;
  std::int64_t aut_count = 0;
  std::int64_t aut_formula = 0;
  std::int64_t nu = 0;                // pair_count / aut_count
  std::int64_t nu_formula = 0;        // closed form
  std::int64_t orbit_count = -1;      // explicit partition (-1: skipped)
  std::int64_t symmetric_orbits = -1; // d = e only
  bool match = false;
};

struct CountReport {
  std::int64_t p = 0;
  int d = 0, e = 0;
  std::vector<SpecReport> rows;
  std::int64_t nu_total = 0;           // sum of per-spec nu
  std::int64_t symmetric_total = -1;   // d = e > 0 only
  std::int64_t reciprocal_classes = 0; // d = e: sym + (total-sym)/2; else nu_total
  std::int64_t theorem_value = 0;      // closed-form reciprocal-pair class count
  bool match = false;
};

struct VerifyOptions {
  bool use_oracle = false;         // definitional predicates instead of closed forms
  std::int64_t orbit_budget = 2'000'000;  // max pairs for explicit orbit partitioning
  bool check_dessins = true;       // genus/type/Euler checks per orbit representative
};

// Closed-form count of reciprocal-pair classes for K_{p^d, p^e}:
// 1 when d = 0; p^{e-1}(1+p^{e-1})/2 when 0 < d = e; p^{2d-1} when 0 < d < e.
std::int64_t theorem_formula(std::int64_t p, int d, int e);

// Per-spec closed form of nu. For d < e these are the nu_1/nu_2/nu_3 counts;
// for d = e the count is 1 when f = e and p^{2e-2f-2}(p^2-1) otherwise.
std::int64_t nu_formula(const GroupSpec& spec);

// pair count / aut count as an exact quotient. A non-integral quotient would
// contradict semi-regularity and raises falsification_error.
std::int64_t nu_of_group(const GroupSpec& spec);

// Partition of all exact pairs into Aut(G)-orbits. Each orbit is a sorted
// vector of packed pairs; orbits are ordered by their minimal (canonical
// representative) pair. Raises falsification_error on any orbit whose size
// differs from |Aut(G)|.
std::vector<std::vector<std::uint64_t>> orbit_partition(const GroupSpec& spec);

// Whether some automorphism swaps alpha and beta (d = e only).
bool is_isobicyclic(const GroupSpec& spec, const BicyclicPair& pair,
                    const std::vector<AutMap>& auts);
bool is_isobicyclic(const GroupSpec& spec, const BicyclicPair& pair);

// Runs the whole pipeline for (p, d, e): per-spec counts both by sweep and by
// closed form, explicit orbit counting, symmetric-class detection when d = e,
// per-representative dessin checks, and the aggregate comparison against
// theorem_formula. Mismatches are reported through the match flags.
CountReport verify(std::int64_t p, int d, int e, const VerifyOptions& options = {});

}  // namespace dessins
