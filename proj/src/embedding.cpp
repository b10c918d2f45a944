#include "pga/embedding.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace pga {

namespace {

typedef boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::no_property,
                              boost::property<boost::edge_index_t, int>>
    bgraph;

// collapse parallel bundles and drop pendant edges; keeps one representative
// edge id per bundle
bgraph simple_core(const multigraph &g, std::vector<edge_ix> *rep_of_bedge)
{
    bgraph bg(g.nv);
    std::map<std::pair<vertex_t, vertex_t>, edge_ix> seen;
    int next_index = 0;
    for (edge_ix e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue;
        vertex_t u = g.edges[e].ends[0], v = g.edges[e].ends[1];
        auto key = std::minmax(u, v);
        if (!seen.emplace(std::make_pair(key.first, key.second), e).second)
            continue;
        boost::add_edge(u, v, next_index++, bg);
        if (rep_of_bedge)
            rep_of_bedge->push_back(e);
    }
    return bg;
}

} // namespace

bool is_planar(const multigraph &g)
{
    bgraph bg = simple_core(g, nullptr);
    return boost::boyer_myrvold_planarity_test(bg);
}

planar_map embed(const multigraph &g)
{
    planar_map m;
    m.g = g;
    m.rot.assign(g.nv, {});
    m.pendants.assign(g.nv, {});
    m.rot_pos.assign(g.nh(), -1);
    for (edge_ix e = 0; e < g.ne(); ++e)
        if (g.is_pendant(e))
            m.pendants[g.edges[e].ends[0]].push_back(e);

    std::vector<edge_ix> rep;
    bgraph bg = simple_core(g, &rep);

    typedef boost::graph_traits<bgraph>::edge_descriptor bedge;
    std::vector<std::vector<bedge>> emb(g.nv);
    auto emb_map = boost::make_iterator_property_map(emb.begin(),
                                                    boost::get(boost::vertex_index, bg));
    if (!boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = bg,
            boost::boyer_myrvold_params::embedding = emb_map))
        throw not_planar();

    // bundle lookup: representative edge -> all parallel edges of the bundle
    std::map<std::pair<vertex_t, vertex_t>, std::vector<edge_ix>> bundles;
    for (edge_ix e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue;
        auto key = std::minmax(g.edges[e].ends[0], g.edges[e].ends[1]);
        bundles[std::make_pair(key.first, key.second)].push_back(e);
    }

    auto eindex = boost::get(boost::edge_index, bg);
    for (vertex_t v = 0; v < g.nv; ++v) {
        for (const bedge &be : emb[v]) {
            edge_ix e0 = rep[eindex[be]];
            auto key = std::minmax(g.edges[e0].ends[0], g.edges[e0].ends[1]);
            // parallel edges of a bundle are inserted adjacently, in reversed
            // order at the other endpoint so the banana faces close up; the
            // unique-embedding guarantee only matters for 3-connected cores,
            // which are simple
            const auto &bundle = bundles[std::make_pair(key.first, key.second)];
            for (size_t bi = 0; bi < bundle.size(); ++bi) {
                edge_ix e = bundle[v == key.first ? bi : bundle.size() - 1 - bi];
                int side = g.edges[e].ends[0] == v ? 0 : 1;
                m.rot[v].push_back(multigraph::half(e, side));
            }
        }
        for (size_t i = 0; i < m.rot[v].size(); ++i)
            m.rot_pos[m.rot[v][i]] = (int)i;
    }
    return m;
}

int planar_map::face_count() const
{
    std::vector<char> seen(g.nh(), 0);
    int faces = 0;
    for (vertex_t v = 0; v < g.nv; ++v) {
        for (half_t d : rot[v]) {
            if (seen[d])
                continue;
            ++faces;
            half_t cur = d;
            while (!seen[cur]) {
                seen[cur] = 1;
                cur = next(multigraph::twin(cur));
            }
        }
    }
    return faces;
}

std::vector<angle> planar_map::all_angles() const
{
    std::vector<angle> out;
    for (vertex_t v = 0; v < g.nv; ++v) {
        for (half_t d : rot[v]) {
            out.push_back({v, d, next(d)});
            out.push_back({v, next(d), d});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string planar_map::dump_rotation() const
{
    std::ostringstream os;
    for (vertex_t v = 0; v < g.nv; ++v) {
        os << v << ":";
        for (half_t d : rot[v])
            os << " " << d;
        os << "\n";
    }
    return os.str();
}

angle rho(const planar_map &, const angle &a)
{
    return {a.v, a.d2, a.d1};
}

angle tau(const planar_map &m, const angle &a)
{
    // the other angle at (v, d1)
    if (a.d2 == m.next(a.d1))
        return {a.v, a.d1, m.prev(a.d1)};
    return {a.v, a.d1, m.next(a.d1)};
}

angle lambda(const planar_map &m, const angle &a)
{
    // cross the edge of d2, staying on the same side
    half_t t = multigraph::twin(a.d2);
    vertex_t v2 = m.g.endpoint(t);
    assert(v2 != no_vertex);
    if (a.d2 == m.next(a.d1))
        return {v2, m.prev(t), t};
    return {v2, m.next(t), t};
}

} // namespace pga
