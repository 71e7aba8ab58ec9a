#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dessins/bicyclic.hpp"
#include "dessins/group.hpp"

namespace dessins {

// A dessin built from an exact bicyclic triple (G, alpha, beta). Edges are
// the group elements, indexed lexicographically by normal form (i, j); black
// vertices are the cosets g<alpha>, white vertices the cosets g<beta>, and
// the rotation around a vertex is right multiplication by alpha resp. beta.
struct Dessin {
  GroupSpec spec;
  std::int64_t alpha_i, alpha_j;           // alpha = b^{alpha_i} a^{alpha_j}
  std::int64_t beta_i, beta_j;
  std::vector<std::uint32_t> rot_black;    // edge -> edge, g -> g*alpha
  std::vector<std::uint32_t> rot_white;    // edge -> edge, g -> g*beta
  std::vector<std::uint32_t> black_vertex; // edge -> black vertex id
  std::vector<std::uint32_t> white_vertex; // edge -> white vertex id
  std::int64_t black_count;                // = |G| / |alpha|
  std::int64_t white_count;                // = |G| / |beta|

  Element alpha() const { return Element{&spec, alpha_i, alpha_j}; }
  Element beta() const { return Element{&spec, beta_i, beta_j}; }
};

struct DessinSummary {
  std::array<std::int64_t, 3> type;  // (|alpha|, |beta|, |alpha*beta|)
  std::int64_t black_vertices;
  std::int64_t white_vertices;
  std::int64_t edges;
  std::int64_t faces;
  std::int64_t genus;  // from V - E + F = 2 - 2g
};

// Builds the rotation system and validates the cycle-structure and K_{m,n}
// invariants. Rejects pairs that are not exact.
Dessin build_dessin(const GroupSpec& spec, const BicyclicPair& pair);

// Face boundaries: cycles of g -> g*(alpha*beta), one entry per face.
std::vector<std::vector<std::uint32_t>> faces(const Dessin& dessin);

DessinSummary summarize(const Dessin& dessin);

// The dessin of the swapped pair (beta, alpha): vertex colours interchanged.
Dessin reciprocal(const Dessin& dessin);

// JSON serialization (versioned; permutations as index arrays). When
// with_adjacency is set, the edge -> vertex id maps are included.
std::string to_json(const Dessin& dessin, bool with_adjacency = false);

}  // namespace dessins
