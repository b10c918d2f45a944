#pragma once

// shared test corpora: every connected simple graph up to an isomorphism
// (small n, grown by vertex extension), plus random planar multigraphs and
// random trees

#include "pga/embedding.hpp"
#include "pga/graph.hpp"
#include "pga/oracle.hpp"

#include <map>
#include <random>
#include <sstream>

namespace pga {
namespace corpus {

// cheap isomorphism invariant: sizes, degree sequence, neighbor-degree lists
inline std::string invariant(const multigraph &g)
{
    std::vector<std::vector<int>> nd(g.nv);
    for (edge_ix e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue;
        vertex_t u = g.edges[e].ends[0], v = g.edges[e].ends[1];
        nd[u].push_back(g.degree(v));
        nd[v].push_back(g.degree(u));
    }
    for (auto &l : nd)
        std::sort(l.begin(), l.end());
    std::sort(nd.begin(), nd.end());
    std::ostringstream ss;
    ss << g.nv << " " << g.ne();
    for (auto &l : nd) {
        ss << " |";
        for (int d : l)
            ss << " " << d;
    }
    return ss.str();
}

// all connected simple graphs on exactly n vertices, one per isomorphism
// class; every such graph extends one on n-1 vertices by a new vertex with a
// non-empty neighborhood
inline std::vector<multigraph> connected_exactly(int n)
{
    if (n == 1) {
        multigraph g;
        g.nv = 1;
        g.inc.resize(1);
        g.vcolor.assign(1, 0);
        return {g};
    }
    std::vector<multigraph> out;
    std::map<std::string, std::vector<int>> buckets;
    for (const multigraph &base : connected_exactly(n - 1)) {
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            multigraph g = base;
            g.nv = n;
            g.inc.resize(n);
            g.vcolor.assign(n, 0);
            for (int v = 0; v < n - 1; ++v)
                if (mask & (1u << v))
                    g.add_edge(v, n - 1);
            std::string key = invariant(g);
            bool fresh = true;
            for (int i : buckets[key])
                if (isomorphic(out[i], g)) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                buckets[key].push_back((int)out.size());
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

inline std::vector<multigraph> exhaustive_connected_planar(int max_n)
{
    std::vector<multigraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (multigraph &g : connected_exactly(n))
            if (is_planar(g))
                out.push_back(std::move(g));
    return out;
}

// connected planar multigraph: random spanning tree, extra edges (some
// colored, parallels allowed), a few pendant edges
inline multigraph random_planar(int n, std::mt19937 &rng)
{
    while (true) {
        multigraph g;
        g.nv = n;
        g.inc.resize(n);
        g.vcolor.assign(n, 0);
        for (vertex_t v = 1; v < n; ++v)
            g.add_edge((vertex_t)(rng() % v), v);
        int extra = (int)(rng() % (n / 2 + 1));
        for (int i = 0; i < extra; ++i) {
            vertex_t u = (vertex_t)(rng() % n), v = (vertex_t)(rng() % n);
            if (u != v)
                g.add_edge(u, v, rng() % 3 == 0 ? 1 : 0);
        }
        for (int i = 0; i < (int)(rng() % 3); ++i)
            g.add_pendant((vertex_t)(rng() % n), 1 + rng() % 2);
        if (is_planar(g))
            return g;
    }
}

inline multigraph random_tree(int n, std::mt19937 &rng)
{
    multigraph g;
    g.nv = n;
    g.inc.resize(n);
    g.vcolor.assign(n, 0);
    for (vertex_t v = 1; v < n; ++v)
        g.add_edge((vertex_t)(rng() % v), v);
    return g;
}

// k disjoint copies of h
inline multigraph disjoint_copies(const multigraph &h, int k)
{
    multigraph g;
    g.nv = h.nv * k;
    g.inc.resize(g.nv);
    g.vcolor.resize(g.nv);
    for (int c = 0; c < k; ++c) {
        int base = c * h.nv;
        for (vertex_t v = 0; v < h.nv; ++v)
            g.vcolor[base + v] = h.vcolor[v];
        for (edge_ix e = 0; e < h.ne(); ++e) {
            const edge_t &ed = h.edges[e];
            if (h.is_pendant(e))
                g.add_pendant(base + ed.ends[0], ed.color);
            else
                g.add_edge(base + ed.ends[0], base + ed.ends[1], ed.color, ed.kind, ed.tail);
        }
    }
    return g;
}

} // namespace corpus
} // namespace pga
