#pragma once

// Inverse direction: build planar graphs realizing group expressions. Rooted
// gadgets realize boundary-fixing groups (the root plays the boundary);
// decorated 3-connected seeds realize full automorphism groups. Distinct
// construction slots are separated by pairwise non-isomorphic rigid combs.

#include "pga/graph.hpp"
#include "pga/group_expr.hpp"

#include <stdexcept>

namespace pga {

struct unsupported_shape : std::runtime_error {
    unsupported_shape() : std::runtime_error("expression is outside the realizable fix grammar") {}
};
struct orbit_count_mismatch : std::runtime_error {
    orbit_count_mismatch()
        : std::runtime_error("one expression per edge-orbit of the seed is required")
    {
    }
};

struct rooted_graph {
    multigraph g;
    vertex_t root = 0;
};

// hands out fresh comb sizes so every rigid gadget is unique per construction
struct realize_context {
    int next_comb = 3;
};

// planar graph whose automorphisms fixing the root form a group of order
// order(e); accepts 1, C(n), D(n), S(n), direct, pow, wr(.,S/C) and the
// dihedral/C2 semidirect shapes
rooted_graph realize_fix(const gx &e, realize_context &ctx);

struct realization {
    multigraph g;
    u128 predicted = 1; // expected |Aut| of g
};

// seed edges become length-2 paths whose midpoints carry one realized gadget
// per edge-orbit of Aut(seed)
realization realize_aut(const multigraph &seed, const std::vector<gx> &orbit_exprs);

// "tetrahedron cube octahedron dodecahedron icosahedron k2 cycle:n prism:n
// wheel:n"; throws std::invalid_argument on unknown names
multigraph make_seed(const std::string &name);

} // namespace pga
