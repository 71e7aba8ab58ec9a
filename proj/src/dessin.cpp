#include "dessins/dessin.hpp"

#include <stdexcept>

#include "dessins/errors.hpp"
#include "json.hpp"

namespace dessins {

namespace {

// Assigns a vertex id to every edge from the cycles of a rotation
// permutation; ids are numbered by first appearance in edge-index order.
// Every cycle must have the given length.
std::vector<std::uint32_t> vertex_ids(const std::vector<std::uint32_t>& rot,
                                      std::int64_t cycle_length, std::uint32_t* count_out) {
  const std::uint32_t n = static_cast<std::uint32_t>(rot.size());
  std::vector<std::uint32_t> id(n, n);
  std::uint32_t next = 0;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (id[g] != n) continue;
    std::int64_t len = 0;
    for (std::uint32_t x = g; id[x] == n; x = rot[x]) {
      id[x] = next;
      ++len;
    }
    if (len != cycle_length)
      throw falsification_error("rotation cycle length does not match the vertex valency");
    ++next;
  }
  *count_out = next;
  return id;
}

}  // namespace

Dessin build_dessin(const GroupSpec& spec, const BicyclicPair& pair) {
  // Accept either orientation: a (p^d, p^e) pair or its reciprocal.
  if (!is_exact_pair_fast(spec, pair.alpha.i, pair.alpha.j, pair.beta.i, pair.beta.j) &&
      !is_exact_pair_fast(spec, pair.beta.i, pair.beta.j, pair.alpha.i, pair.alpha.j))
    throw std::invalid_argument("build_dessin: pair is not exact bicyclic");
  const std::uint32_t n = static_cast<std::uint32_t>(spec.order);
  Dessin d;
  d.spec = spec;
  d.alpha_i = pair.alpha.i;
  d.alpha_j = pair.alpha.j;
  d.beta_i = pair.beta.i;
  d.beta_j = pair.beta.j;
  d.rot_black.resize(n);
  d.rot_white.resize(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    const Element x = element_at(d.spec, g);
    d.rot_black[g] = index_of(multiply(x, d.alpha()));
    d.rot_white[g] = index_of(multiply(x, d.beta()));
  }
  const std::int64_t ord_alpha = element_order(d.alpha());
  const std::int64_t ord_beta = element_order(d.beta());
  std::uint32_t blacks = 0, whites = 0;
  d.black_vertex = vertex_ids(d.rot_black, ord_alpha, &blacks);
  d.white_vertex = vertex_ids(d.rot_white, ord_beta, &whites);
  d.black_count = blacks;
  d.white_count = whites;
  if (d.black_count != spec.order / ord_alpha || d.white_count != spec.order / ord_beta)
    throw falsification_error("build_dessin: unexpected vertex counts");
  // K_{m,n}: every black coset meets every white coset in exactly one edge.
  std::vector<std::uint32_t> meet(static_cast<std::size_t>(d.black_count * d.white_count), 0);
  for (std::uint32_t g = 0; g < n; ++g) {
    std::uint32_t& cell = meet[d.black_vertex[g] * static_cast<std::uint32_t>(d.white_count) +
                               d.white_vertex[g]];
    if (++cell > 1)
      throw falsification_error("build_dessin: multiple edges between a coset pair");
  }
  // n = black_count * white_count, so no cell can remain empty either.
  return d;
}

std::vector<std::vector<std::uint32_t>> faces(const Dessin& dessin) {
  const Element ab = multiply(dessin.alpha(), dessin.beta());
  const std::uint32_t n = static_cast<std::uint32_t>(dessin.spec.order);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::vector<std::uint32_t> cycle;
    Element x = element_at(dessin.spec, g);
    while (!seen[index_of(x)]) {
      seen[index_of(x)] = true;
      cycle.push_back(index_of(x));
      x = multiply(x, ab);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

DessinSummary summarize(const Dessin& dessin) {
  DessinSummary s;
  const Element ab = multiply(dessin.alpha(), dessin.beta());
  s.type = {element_order(dessin.alpha()), element_order(dessin.beta()), element_order(ab)};
  s.black_vertices = dessin.black_count;
  s.white_vertices = dessin.white_count;
  s.edges = dessin.spec.order;
  s.faces = static_cast<std::int64_t>(faces(dessin).size());
  const std::int64_t euler = s.black_vertices + s.white_vertices - s.edges + s.faces;
  if (euler % 2 != 0 || euler > 2)
    throw falsification_error("summarize: Euler characteristic is not 2-2g for g >= 0");
  s.genus = (2 - euler) / 2;
  return s;
}

Dessin reciprocal(const Dessin& dessin) {
  return build_dessin(dessin.spec, BicyclicPair{dessin.beta(), dessin.alpha()});
}

std::string to_json(const Dessin& dessin, bool with_adjacency) {
  nlohmann::json j;
  j["version"] = 1;
  nlohmann::json spec;
  switch (dessin.spec.family) {
    case Family::M1: spec["family"] = "M1"; break;
    case Family::M2: spec["family"] = "M2"; break;
    case Family::M3: spec["family"] = "M3"; break;
    case Family::Cyclic: spec["family"] = "cyclic"; break;
  }
  spec["p"] = dessin.spec.p;
  spec["d"] = dessin.spec.d;
  spec["e"] = dessin.spec.e;
  if (dessin.spec.f >= 0) spec["f"] = dessin.spec.f;
  if (dessin.spec.h >= 0) spec["h"] = dessin.spec.h;
  j["spec"] = spec;
  j["alpha"] = {dessin.alpha_i, dessin.alpha_j};
  j["beta"] = {dessin.beta_i, dessin.beta_j};
  j["rot_black"] = dessin.rot_black;
  j["rot_white"] = dessin.rot_white;
  if (with_adjacency) {
    j["black_vertex"] = dessin.black_vertex;
    j["white_vertex"] = dessin.white_vertex;
  }
  return j.dump();
}

}  // namespace dessins
