#pragma once

// Brute-force ground truth: enumerate all half-edge automorphisms of a small
// multigraph by backtracking over vertex images, then extending over parallel
// bundles and pendant groups. Obviously correct beats fast here.

#include "pga/graph.hpp"
#include "pga/perm.hpp"

#include <optional>

namespace pga {

// domain of the returned permutations: [0, nv) vertices, [nv, nv + nh) halves
inline int aut_domain_size(const multigraph &g) { return g.nv + g.nh(); }
inline int half_point(const multigraph &g, half_t h) { return g.nv + h; }

std::vector<perm> brute_force_aut(const multigraph &g, int max_vertices = 10,
                                  size_t cap = 1u << 21);
u128 brute_force_aut_count(const multigraph &g, int max_vertices = 10);

// replay check: p preserves incidence, colors, directions, vertex colors
bool is_automorphism(const multigraph &g, const perm &p);

// backtracking isomorphism test (colors/directions/pendants respected)
bool isomorphic(const multigraph &a, const multigraph &b, int max_vertices = 64);

// one concrete isomorphism mapping a's points to b's points, if any
std::optional<perm> find_isomorphism(const multigraph &a, const multigraph &b,
                                     int max_vertices = 64);

} // namespace pga
