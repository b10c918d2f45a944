#pragma once

// Group composition along the reduction series: per-class expressions for the
// boundary-fixing groups, the root composition with the primitive graph's
// group, generator synthesis by lifting through the levels, and the wreath
// rule for disconnected inputs.

#include "pga/decomposition.hpp"
#include "pga/graph.hpp"
#include "pga/group_expr.hpp"
#include "pga/perm.hpp"

namespace pga {

// orbit of a generator set acting on the edges of a graph
struct edge_orbit_class {
    std::vector<edge_ix> edges;
    bool reflected = false; // the half-edges form one orbit of size 2k
                            // (false: two orbits of size k)
    int equivalence = -1;   // shared by equivariant orbits of equal size/type
};

std::vector<edge_orbit_class> classify_edge_orbits(const multigraph &g,
                                                   const std::vector<perm> &gens);

// Fix(boundary) of the fully expanded atom, one expression per class,
// indexed like reduction_series::classes
std::vector<gx> fix_expressions(const reduction_series &s);

// Aut of the fully expanded graph: child groups over the primitive's edge
// orbits, extended by the primitive's own automorphisms
gx compose_root(const reduction_series &s, const std::vector<gx> &class_fix);

// generators of Aut(G_0): primitive-level automorphisms and per-level kernel
// generators, lifted through the series
std::vector<perm> synthesize_generators(const reduction_series &s);

// drop generators already contained in the group of the kept ones
std::vector<perm> reduce_generators(const std::vector<perm> &gens, int n);

struct analysis_report {
    multigraph graph; // normalized input (vertex colors compiled to pendants)
    bool connected = true;
    gx expr;
    std::vector<perm> generators; // half-edge perms of `graph`

    // connected inputs
    reduction_series series;
    std::vector<gx> class_fix;

    // disconnected inputs: components with their point embeddings, grouped
    // into isomorphism classes
    struct component {
        multigraph graph;
        std::vector<int> point_to_global;
        int group = 0;
    };
    std::vector<component> components;
    std::vector<gx> component_exprs; // one per isomorphism class

    u128 aut_order() const { return order(expr); }
};

analysis_report analyze(const multigraph &g); // throws not_planar

} // namespace pga
