#pragma once

// Automorphism groups of essentially-3-connected colored planar graphs via the
// angle/dart extension procedure, plus direct enumeration for the degenerate
// primitives (K_1, K_2, cycles, bananas). Pendant edges act as vertex marks.
//
// Precondition for the cycle and 3-connected cases: at most one pendant edge
// per vertex (the reduction guarantees this). K_1 and K_2 inputs may carry
// arbitrarily many pendants; their full symmetric shuffles are enumerated.

#include "pga/embedding.hpp"
#include "pga/graph.hpp"
#include "pga/group_expr.hpp"
#include "pga/perm.hpp"

#include <optional>

namespace pga {

struct not_essentially_3_connected : std::runtime_error {
    not_essentially_3_connected()
        : std::runtime_error("graph is not an essentially 3-connected core, a cycle, "
                             "or a degenerate primitive")
    {
    }
};
struct unrecognized_group : std::runtime_error {
    unrecognized_group() : std::runtime_error("permutation group is not spherical (internal bug)")
    {
    }
};

struct map_automorphism {
    perm p;          // domain: nv vertices ++ nh halves of the input graph
    bool reversing = false;
};

struct spherical_id {
    enum family_t { C, D, CxC2, DxC2, A4, S4, A5, A4xC2, S4xC2, A5xC2 } family = C;
    int n = 1; // parameter for C/D/CxC2/DxC2
    std::string str() const;
};

struct map_aut_result {
    std::vector<map_automorphism> elements; // every automorphism exactly once
    std::optional<spherical_id> id;         // absent for non-spherical degenerates
    std::vector<perm> generators() const
    {
        std::vector<perm> g;
        for (const auto &e : elements)
            if (!e.p.is_identity())
                g.push_back(e.p);
        return g;
    }
};

// transposition of two parallel (or same-vertex pendant) edges, side-aligned
perm edge_transposition(const multigraph &g, edge_ix a, edge_ix b);

// adjacent transpositions generating every shuffle of interchangeable edges
// (same endpoints, color, kind, orientation; pendants per vertex and color);
// linear-size generating set, no group enumeration
std::vector<perm> shuffle_generators(const multigraph &g);

// the end swap of a 2-vertex graph pairing i-th bundle/pendant edges, if the
// colors and directions balance
std::optional<perm> two_vertex_swap(const multigraph &g);

// the unique automorphism with a -> b of the chosen orientation, if any
std::optional<perm> try_extend(const planar_map &m, const angle &a, const angle &b,
                               bool mirrored);

map_aut_result aut_map(const multigraph &g);

std::vector<perm> stabilizer(const multigraph &g, vertex_t v);

spherical_id identify_spherical(const std::vector<map_automorphism> &elements);

gx spherical_expr(const spherical_id &id);

} // namespace pga
