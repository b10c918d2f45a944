#include "pga/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace pga {

edge_ix multigraph::add_edge(vertex_t u, vertex_t v, color_t c, edge_kind k, int tail)
{
    if (u == v)
        throw loop_rejected();
    edge_ix e = (int)edges.size();
    edges.push_back(edge_t{{u, v}, c, k, tail});
    if (u != no_vertex)
        inc[u].push_back(half(e, 0));
    if (v != no_vertex)
        inc[v].push_back(half(e, 1));
    return e;
}

edge_ix multigraph::add_pendant(vertex_t v, color_t c)
{
    return add_edge(v, no_vertex, c);
}

void multigraph::check() const
{
    size_t halves = 0;
    for (int e = 0; e < ne(); ++e) {
        const edge_t &ed = edges[e];
        assert(ed.ends[0] != no_vertex); // free half is always side 1
        assert(ed.ends[0] != ed.ends[1]);
        if (ed.kind == edge_kind::directed)
            assert(ed.ends[ed.tail] != no_vertex);
    }
    for (vertex_t v = 0; v < nv; ++v) {
        for (half_t h : inc[v])
            assert(endpoint(h) == v);
        halves += inc[v].size();
    }
    size_t free_halves = 0;
    for (int e = 0; e < ne(); ++e)
        if (is_pendant(e))
            ++free_halves;
    assert(halves + free_halves == (size_t)nh());
}

multigraph build_graph(const std::vector<edge_spec> &edge_list,
                       const std::vector<std::pair<vertex_t, color_t>> &vertex_colors,
                       int isolated_vertices)
{
    std::map<vertex_t, vertex_t> remap;
    for (const edge_spec &es : edge_list) {
        if (es.u == es.v)
            throw loop_rejected();
        remap.emplace(es.u, 0);
        remap.emplace(es.v, 0);
    }
    for (auto &vc : vertex_colors)
        remap.emplace(vc.first, 0);
    int next = 0;
    for (auto &kv : remap)
        kv.second = next++;
    multigraph g;
    g.nv = next + isolated_vertices;
    g.inc.resize(g.nv);
    g.vcolor.assign(g.nv, 0);
    for (const edge_spec &es : edge_list)
        g.add_edge(remap[es.u], remap[es.v], es.color);
    for (auto &vc : vertex_colors) {
        vertex_t v = remap[vc.first];
        if (g.vcolor[v] != 0 && g.vcolor[v] != vc.second)
            throw parse_error("conflicting colors for vertex " + std::to_string(vc.first));
        g.vcolor[v] = vc.second;
    }
    return g;
}

multigraph normalize_vertex_colors(const multigraph &g)
{
    multigraph out = g;
    for (vertex_t v = 0; v < out.nv; ++v) {
        if (out.vcolor[v] != 0) {
            out.add_pendant(v, reserved_color_bit | out.vcolor[v]);
            out.vcolor[v] = 0;
        }
    }
    return out;
}

multigraph parse_edge_list(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    int declared_v = -1, declared_e = -1;
    std::vector<edge_spec> edges;
    std::vector<std::pair<vertex_t, color_t>> vcolors;
    vertex_t max_id = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> declared_v >> declared_e) || kind != "graph")
                throw parse_error("line " + std::to_string(lineno) + ": bad problem line");
        } else if (tag == "e") {
            edge_spec es;
            es.color = 0;
            if (!(ls >> es.u >> es.v))
                throw parse_error("line " + std::to_string(lineno) + ": bad edge line");
            ls >> es.color;
            if (es.u < 0 || es.v < 0)
                throw parse_error("line " + std::to_string(lineno) + ": negative vertex id");
            edges.push_back(es);
            max_id = std::max(max_id, std::max(es.u, es.v));
        } else if (tag == "n") {
            vertex_t v;
            color_t c;
            if (!(ls >> v >> c))
                throw parse_error("line " + std::to_string(lineno) + ": bad vertex color line");
            vcolors.push_back({v, c});
            max_id = std::max(max_id, v);
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
    }
    if (declared_v < 0)
        throw parse_error("missing problem line `p graph V E`");
    if (declared_e >= 0 && declared_e != (int)edges.size())
        throw parse_error("edge count mismatch with problem line");
    int isolated = 0;
    if (declared_v > max_id + 1)
        isolated = declared_v - (max_id + 1); // ids are expected dense here
    return build_graph(edges, vcolors, isolated);
}

std::string serialize_edge_list(const multigraph &g)
{
    std::ostringstream out;
    int real_edges = 0;
    for (int e = 0; e < g.ne(); ++e)
        if (!g.is_pendant(e))
            ++real_edges;
    out << "p graph " << g.nv << " " << real_edges << "\n";
    for (int e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue; // pendant edges come back via vertex colors
        out << "e " << g.edges[e].ends[0] << " " << g.edges[e].ends[1];
        if (g.edges[e].color != 0)
            out << " " << g.edges[e].color;
        out << "\n";
    }
    for (vertex_t v = 0; v < g.nv; ++v)
        if (g.vcolor[v] != 0)
            out << "n " << v << " " << g.vcolor[v] << "\n";
    return out.str();
}

std::vector<std::vector<vertex_t>> connected_components(const multigraph &g)
{
    std::vector<int> comp(g.nv, -1);
    std::vector<std::vector<vertex_t>> out;
    for (vertex_t s = 0; s < g.nv; ++s) {
        if (comp[s] >= 0)
            continue;
        int id = (int)out.size();
        out.push_back({});
        std::vector<vertex_t> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            vertex_t v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (half_t h : g.inc[v]) {
                vertex_t w = g.endpoint(multigraph::twin(h));
                if (w != no_vertex && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const multigraph &g)
{
    return connected_components(g).size() <= 1;
}

} // namespace pga
