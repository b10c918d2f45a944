#pragma once

// Planarity testing and rotation-system construction. The map only carries
// darts of non-pendant edges; pendant edges are recorded per vertex and never
// affect face tracing (they re-enter as vertex marks in map_aut).

#include "pga/graph.hpp"

namespace pga {

struct angle {
    vertex_t v;
    half_t d1, d2; // cyclically adjacent darts at v, both orders are angles
    bool operator==(const angle &o) const { return v == o.v && d1 == o.d1 && d2 == o.d2; }
    bool operator<(const angle &o) const
    {
        if (v != o.v) return v < o.v;
        if (d1 != o.d1) return d1 < o.d1;
        return d2 < o.d2;
    }
};

struct planar_map {
    multigraph g;
    std::vector<std::vector<half_t>> rot;     // per vertex, cyclic dart order
    std::vector<std::vector<edge_ix>> pendants; // per vertex, pendant edges
    std::vector<int> rot_pos;                 // dart -> index in rot[vertex]

    half_t next(half_t d) const
    {
        const auto &r = rot[g.endpoint(d)];
        return r[(rot_pos[d] + 1) % r.size()];
    }
    half_t prev(half_t d) const
    {
        const auto &r = rot[g.endpoint(d)];
        return r[(rot_pos[d] + r.size() - 1) % r.size()];
    }
    int face_count() const;
    std::vector<angle> all_angles() const;
    std::string dump_rotation() const; // debug text: `v: h1 h2 h3 ...`
};

bool is_planar(const multigraph &g);
planar_map embed(const multigraph &g); // throws not_planar

// the three involutions on oriented angles used by the extension procedure
angle rho(const planar_map &m, const angle &a);
angle lambda(const planar_map &m, const angle &a);
angle tau(const planar_map &m, const angle &a);

} // namespace pga
