#pragma once

// Half-edge multigraph. Every edge owns exactly two halves (packed as 2e and
// 2e+1); a pendant edge has one attached half and one free half. Vertex colors
// are syntactic sugar compiled into reserved-color pendant edges.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pga {

typedef int vertex_t;
typedef int half_t;
typedef int edge_ix;
typedef uint32_t color_t;

constexpr vertex_t no_vertex = -1;
constexpr color_t reserved_color_bit = 0x80000000u; // vertex-color namespace

struct loop_rejected : std::runtime_error {
    loop_rejected() : std::runtime_error("loop edges are rejected") {}
};
struct not_planar : std::runtime_error {
    not_planar() : std::runtime_error("graph is not planar") {}
};
struct too_large : std::runtime_error {
    explicit too_large(const std::string &what) : std::runtime_error(what) {}
};
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string &what) : std::runtime_error(what) {}
};

enum class edge_kind { undirected, directed };

struct edge_t {
    vertex_t ends[2];          // ends[1] == no_vertex for a pendant edge
    color_t color = 0;
    edge_kind kind = edge_kind::undirected;
    int tail = 0;              // directed: index (0/1) of the tail endpoint
};

struct multigraph {
    int nv = 0;
    std::vector<edge_t> edges;
    std::vector<std::vector<half_t>> inc; // vertex -> attached halves
    std::vector<color_t> vcolor;          // 0 unless un-normalized input

    int ne() const { return (int)edges.size(); }
    int nh() const { return 2 * ne(); }

    static half_t half(edge_ix e, int side) { return 2 * e + side; }
    static edge_ix edge_of(half_t h) { return h / 2; }
    static int side_of(half_t h) { return h & 1; }
    static half_t twin(half_t h) { return h ^ 1; }

    vertex_t endpoint(half_t h) const { return edges[edge_of(h)].ends[side_of(h)]; }
    bool is_free(half_t h) const { return endpoint(h) == no_vertex; }
    bool is_pendant(edge_ix e) const { return edges[e].ends[1] == no_vertex; }
    half_t attached_half(edge_ix e) const { return half(e, 0); } // pendant edges
    half_t free_half(edge_ix e) const { return half(e, 1); }
    vertex_t other_end(edge_ix e, vertex_t v) const {
        return edges[e].ends[0] == v ? edges[e].ends[1] : edges[e].ends[0];
    }
    half_t tail_half(edge_ix e) const { return half(e, edges[e].tail); }

    // all attached halves, pendant edges included
    int degree(vertex_t v) const { return (int)inc[v].size(); }
    // halves of non-pendant edges only; this is the degree the reduction's
    // 2-cut/dipole conditions use
    int real_degree(vertex_t v) const {
        int d = 0;
        for (half_t h : inc[v])
            if (!is_pendant(edge_of(h))) ++d;
        return d;
    }

    edge_ix add_edge(vertex_t u, vertex_t v, color_t c = 0,
                     edge_kind k = edge_kind::undirected, int tail = 0);
    edge_ix add_pendant(vertex_t v, color_t c);
    void check() const; // invariant assertions
};

struct edge_spec {
    vertex_t u, v;
    color_t color = 0;
};

// remaps arbitrary non-negative ids to dense [0, nv)
multigraph build_graph(const std::vector<edge_spec> &edge_list,
                       const std::vector<std::pair<vertex_t, color_t>> &vertex_colors = {},
                       int isolated_vertices = 0);

// every vertex of nonzero color gains one pendant edge of a reserved color;
// vertex colors reset to 0
multigraph normalize_vertex_colors(const multigraph &g);

// edge-list text format: `p graph V E`, `e u v [color]`, `n v color`
multigraph parse_edge_list(const std::string &text);
std::string serialize_edge_list(const multigraph &g);

std::vector<std::vector<vertex_t>> connected_components(const multigraph &g);
bool is_connected(const multigraph &g);

} // namespace pga
