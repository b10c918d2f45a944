#include "pga/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace pga {

namespace {

// multiset signature of the parallel bundle between x and y; dir is relative
// to the (x, y) order so that tails must map to tails
std::vector<std::pair<color_t, int>> bundle_sig(const multigraph &g, vertex_t x, vertex_t y)
{
    std::vector<std::pair<color_t, int>> sig;
    for (half_t h : g.inc[x]) {
        edge_ix e = multigraph::edge_of(h);
        if (g.is_pendant(e) || g.other_end(e, x) != y)
            continue;
        int dir = 0;
        if (g.edges[e].kind == edge_kind::directed)
            dir = g.edges[e].ends[g.edges[e].tail] == x ? 1 : 2;
        sig.push_back({g.edges[e].color, dir});
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

std::vector<color_t> pendant_sig(const multigraph &g, vertex_t v)
{
    std::vector<color_t> sig;
    for (half_t h : g.inc[v]) {
        edge_ix e = multigraph::edge_of(h);
        if (g.is_pendant(e))
            sig.push_back(g.edges[e].color);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

struct vsig {
    color_t vc;
    int deg, rdeg;
    std::vector<color_t> pend;
    bool operator==(const vsig &o) const
    {
        return vc == o.vc && deg == o.deg && rdeg == o.rdeg && pend == o.pend;
    }
};

vsig vertex_sig(const multigraph &g, vertex_t v)
{
    return vsig{g.vcolor[v], g.degree(v), g.real_degree(v), pendant_sig(g, v)};
}

// backtracks over vertex bijections a -> b; calls emit for each complete one,
// emit returns false to stop the search
void match_vertices(const multigraph &a, const multigraph &b,
                    const std::function<bool(const std::vector<int> &)> &emit)
{
    if (a.nv != b.nv || a.ne() != b.ne())
        return;
    int n = a.nv;
    std::vector<vsig> siga(n), sigb(n);
    for (int v = 0; v < n; ++v) {
        siga[v] = vertex_sig(a, v);
        sigb[v] = vertex_sig(b, v);
    }
    // connectivity-greedy assignment order over a's vertices
    std::vector<int> order;
    {
        std::vector<char> placed(n, 0);
        while ((int)order.size() < n) {
            int pick = -1;
            for (int v = 0; v < n && pick < 0; ++v) {
                if (placed[v])
                    continue;
                for (half_t h : a.inc[v]) {
                    vertex_t w = a.endpoint(multigraph::twin(h));
                    if (w != no_vertex && placed[w]) {
                        pick = v;
                        break;
                    }
                }
            }
            if (pick < 0)
                for (int v = 0; v < n; ++v)
                    if (!placed[v]) {
                        pick = v;
                        break;
                    }
            placed[pick] = 1;
            order.push_back(pick);
        }
    }
    std::vector<int> pi(n, -1);
    std::vector<char> used(n, 0);
    bool stop = false;
    std::function<void(int)> rec = [&](int k) {
        if (stop)
            return;
        if (k == n) {
            if (!emit(pi))
                stop = true;
            return;
        }
        int v = order[k];
        for (int w = 0; w < n && !stop; ++w) {
            if (used[w] || !(siga[v] == sigb[w]))
                continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int u = order[j];
                if (bundle_sig(a, v, u) != bundle_sig(b, w, pi[u]))
                    ok = false;
            }
            if (!ok)
                continue;
            pi[v] = w;
            used[w] = 1;
            rec(k + 1);
            pi[v] = -1;
            used[w] = 0;
        }
    };
    rec(0);
}

// edges of g between x and y (non-pendant), grouped by (color, dir rel (x,y))
std::map<std::pair<color_t, int>, std::vector<edge_ix>>
bundle_groups(const multigraph &g, vertex_t x, vertex_t y)
{
    std::map<std::pair<color_t, int>, std::vector<edge_ix>> groups;
    for (half_t h : g.inc[x]) {
        edge_ix e = multigraph::edge_of(h);
        if (g.is_pendant(e) || g.other_end(e, x) != y)
            continue;
        int dir = 0;
        if (g.edges[e].kind == edge_kind::directed)
            dir = g.edges[e].ends[g.edges[e].tail] == x ? 1 : 2;
        groups[{g.edges[e].color, dir}].push_back(e);
    }
    return groups;
}

std::map<color_t, std::vector<edge_ix>> pendant_groups(const multigraph &g, vertex_t v)
{
    std::map<color_t, std::vector<edge_ix>> groups;
    for (half_t h : g.inc[v]) {
        edge_ix e = multigraph::edge_of(h);
        if (g.is_pendant(e))
            groups[g.edges[e].color].push_back(e);
    }
    return groups;
}

} // namespace

std::vector<perm> brute_force_aut(const multigraph &g, int max_vertices, size_t cap)
{
    if (g.nv > max_vertices)
        throw too_large("oracle: graph has more than " + std::to_string(max_vertices) +
                        " vertices");
    int n = aut_domain_size(g);
    std::vector<perm> out;

    match_vertices(g, g, [&](const std::vector<int> &pi) {
        // source edge group -> target edge group, then all group bijections
        std::vector<std::pair<std::vector<edge_ix>, std::vector<edge_ix>>> groups;
        for (vertex_t u = 0; u < g.nv; ++u) {
            // per-pair bundles, each unordered pair handled once (u < v)
            std::vector<vertex_t> nbrs;
            for (half_t h : g.inc[u]) {
                edge_ix e = multigraph::edge_of(h);
                if (!g.is_pendant(e)) {
                    vertex_t v = g.other_end(e, u);
                    if (v > u)
                        nbrs.push_back(v);
                }
            }
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            for (vertex_t v : nbrs) {
                auto src = bundle_groups(g, u, v);
                auto dst = bundle_groups(g, pi[u], pi[v]);
                if (src.size() != dst.size())
                    return true; // bundle keys were already matched; paranoia
                auto it2 = dst.begin();
                for (auto it = src.begin(); it != src.end(); ++it, ++it2) {
                    assert(it->first == it2->first && it->second.size() == it2->second.size());
                    groups.push_back({it->second, it2->second});
                }
            }
            auto psrc = pendant_groups(g, u);
            auto pdst = pendant_groups(g, pi[u]);
            auto it2 = pdst.begin();
            for (auto it = psrc.begin(); it != psrc.end(); ++it, ++it2) {
                assert(it->first == it2->first && it->second.size() == it2->second.size());
                groups.push_back({it->second, it2->second});
            }
        }

        // enumerate the product of all per-group bijections
        std::vector<std::vector<int>> arrangement(groups.size());
        for (size_t i = 0; i < groups.size(); ++i) {
            arrangement[i].resize(groups[i].first.size());
            for (size_t j = 0; j < arrangement[i].size(); ++j)
                arrangement[i][j] = (int)j;
        }
        std::function<bool(size_t)> emit_group = [&](size_t gi) -> bool {
            if (gi == groups.size()) {
                perm p(n);
                for (vertex_t v = 0; v < g.nv; ++v)
                    p.img[v] = pi[v];
                for (size_t i = 0; i < groups.size(); ++i) {
                    for (size_t j = 0; j < groups[i].first.size(); ++j) {
                        edge_ix e = groups[i].first[j];
                        edge_ix f = groups[i].second[arrangement[i][j]];
                        for (int side = 0; side < 2; ++side) {
                            vertex_t end = g.edges[e].ends[side];
                            int fside;
                            if (end == no_vertex)
                                fside = 1; // free half of a pendant edge
                            else if (g.edges[f].ends[0] == pi[end])
                                fside = 0;
                            else
                                fside = 1;
                            // parallel same-endpoint edges: sides are fixed by
                            // the endpoint images, ties resolved side0 -> side0
                            if (end != no_vertex && g.edges[f].ends[0] == g.edges[f].ends[1])
                                fside = side;
                            p.img[half_point(g, multigraph::half(e, side))] =
                                half_point(g, multigraph::half(f, fside));
                        }
                    }
                }
                assert(p.valid());
                out.push_back(p);
                if (out.size() > cap)
                    throw too_large("oracle: automorphism count exceeds cap");
                return true;
            }
            std::vector<int> &arr = arrangement[gi];
            std::sort(arr.begin(), arr.end());
            do {
                if (!emit_group(gi + 1))
                    return false;
            } while (std::next_permutation(arr.begin(), arr.end()));
            return true;
        };
        return emit_group(0);
    });

    std::sort(out.begin(), out.end());
    return out;
}

u128 brute_force_aut_count(const multigraph &g, int max_vertices)
{
    if (g.nv > max_vertices)
        throw too_large("oracle: graph has more than " + std::to_string(max_vertices) +
                        " vertices");
    u128 total = 0;
    match_vertices(g, g, [&](const std::vector<int> &pi) {
        u128 ways = 1;
        for (vertex_t u = 0; u < g.nv; ++u) {
            std::vector<vertex_t> nbrs;
            for (half_t h : g.inc[u]) {
                edge_ix e = multigraph::edge_of(h);
                if (!g.is_pendant(e)) {
                    vertex_t v = g.other_end(e, u);
                    if (v > u)
                        nbrs.push_back(v);
                }
            }
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            for (vertex_t v : nbrs)
                for (auto &kv : bundle_groups(g, u, v))
                    for (size_t m = kv.second.size(); m > 1; --m)
                        ways *= (u128)m;
            for (auto &kv : pendant_groups(g, u))
                for (size_t m = kv.second.size(); m > 1; --m)
                    ways *= (u128)m;
        }
        total += ways;
        return true;
    });
    return total;
}

bool is_automorphism(const multigraph &g, const perm &p)
{
    if ((int)p.img.size() != aut_domain_size(g) || !p.valid())
        return false;
    for (vertex_t v = 0; v < g.nv; ++v)
        if (p(v) >= g.nv || g.vcolor[p(v)] != g.vcolor[v])
            return false;
    for (half_t h = 0; h < g.nh(); ++h) {
        int hp = p(half_point(g, h)) - g.nv;
        if (hp < 0 || hp >= g.nh())
            return false;
        edge_ix e = multigraph::edge_of(h), f = multigraph::edge_of(hp);
        // twin halves stay twins, incidence follows the vertex map
        if (p(half_point(g, multigraph::twin(h))) - g.nv != multigraph::twin(hp))
            return false;
        if (g.edges[f].color != g.edges[e].color || g.edges[f].kind != g.edges[e].kind)
            return false;
        vertex_t v = g.endpoint(h);
        vertex_t w = g.endpoint(hp);
        if (v == no_vertex ? w != no_vertex : w != p(v))
            return false;
        if (g.edges[e].kind == edge_kind::directed &&
            (g.tail_half(e) == h) != (g.tail_half(f) == hp))
            return false;
    }
    return true;
}

std::optional<perm> find_isomorphism(const multigraph &a, const multigraph &b,
                                     int max_vertices)
{
    if (a.nv != b.nv || a.ne() != b.ne())
        return std::nullopt;
    if (a.nv > max_vertices)
        throw too_large("isomorphism test: graphs too large");
    std::optional<perm> out;
    match_vertices(a, b, [&](const std::vector<int> &pi) {
        // extend the vertex bijection over halves; per matched bundle/pendant
        // group the i-th edge goes to the i-th edge
        perm p(aut_domain_size(a));
        for (vertex_t v = 0; v < a.nv; ++v)
            p.img[v] = pi[v];
        auto map_group = [&](const std::vector<edge_ix> &src,
                             const std::vector<edge_ix> &dst) {
            for (size_t j = 0; j < src.size(); ++j) {
                edge_ix e = src[j], f = dst[j];
                for (int side = 0; side < 2; ++side) {
                    vertex_t end = a.edges[e].ends[side];
                    int fside;
                    if (end == no_vertex)
                        fside = 1;
                    else if (b.edges[f].ends[0] == pi[end])
                        fside = 0;
                    else
                        fside = 1;
                    if (end != no_vertex && b.edges[f].ends[0] == b.edges[f].ends[1])
                        fside = side;
                    p.img[half_point(a, multigraph::half(e, side))] =
                        half_point(b, multigraph::half(f, fside));
                }
            }
        };
        for (vertex_t u = 0; u < a.nv; ++u) {
            std::vector<vertex_t> nbrs;
            for (half_t h : a.inc[u]) {
                edge_ix e = multigraph::edge_of(h);
                if (!a.is_pendant(e)) {
                    vertex_t v = a.other_end(e, u);
                    if (v > u)
                        nbrs.push_back(v);
                }
            }
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            for (vertex_t v : nbrs) {
                auto src = bundle_groups(a, u, v);
                auto dst = bundle_groups(b, pi[u], pi[v]);
                auto it2 = dst.begin();
                for (auto it = src.begin(); it != src.end(); ++it, ++it2) {
                    assert(it->first == it2->first &&
                           it->second.size() == it2->second.size());
                    map_group(it->second, it2->second);
                }
            }
            auto psrc = pendant_groups(a, u);
            auto pdst = pendant_groups(b, pi[u]);
            auto it2 = pdst.begin();
            for (auto it = psrc.begin(); it != psrc.end(); ++it, ++it2) {
                assert(it->first == it2->first &&
                       it->second.size() == it2->second.size());
                map_group(it->second, it2->second);
            }
        }
        assert(p.valid());
        out = p;
        return false;
    });
    return out;
}

bool isomorphic(const multigraph &a, const multigraph &b, int max_vertices)
{
    if (a.nv != b.nv || a.ne() != b.ne())
        return false;
    if (a.nv > max_vertices)
        throw too_large("isomorphism test: graphs too large");
    bool found = false;
    match_vertices(a, b, [&](const std::vector<int> &) {
        found = true;
        return false;
    });
    return found;
}

} // namespace pga
