#include "pga/decomposition.hpp"

#include "pga/map_aut.hpp"
#include "pga/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

namespace pga {

namespace {

std::vector<std::vector<edge_ix>> vertex_pendants(const multigraph &g)
{
    std::vector<std::vector<edge_ix>> pend(g.nv);
    for (edge_ix e = 0; e < g.ne(); ++e)
        if (g.is_pendant(e))
            pend[g.edges[e].ends[0]].push_back(e);
    return pend;
}

// biconnected components of the core (pendant edges excluded); each block is
// an edge set, bridges come out as single-edge blocks
void biconnected(const multigraph &g, std::vector<std::vector<edge_ix>> &blocks,
                 std::vector<char> &art)
{
    int n = g.nv;
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<edge_ix> estack;
    int counter = 0;
    std::function<void(vertex_t, edge_ix)> dfs = [&](vertex_t v, edge_ix pe) {
        num[v] = low[v] = counter++;
        int children = 0;
        for (half_t h : g.inc[v]) {
            edge_ix e = multigraph::edge_of(h);
            if (g.is_pendant(e) || e == pe)
                continue;
            vertex_t w = g.other_end(e, v);
            if (num[w] < 0) {
                estack.push_back(e);
                ++children;
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    blocks.push_back({});
                    while (true) {
                        edge_ix f = estack.back();
                        estack.pop_back();
                        blocks.back().push_back(f);
                        if (f == e)
                            break;
                    }
                    if (pe != -1 || children > 1)
                        art[v] = 1;
                }
            } else if (num[w] < num[v]) {
                estack.push_back(e);
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    for (vertex_t v = 0; v < n; ++v)
        if (num[v] < 0 && g.real_degree(v) > 0)
            dfs(v, -1);
    assert(estack.empty());
}

} // namespace

block_tree build_block_tree(const multigraph &g, const center_track &track)
{
    block_tree bt;
    bt.is_articulation.assign(g.nv, 0);
    bt.blocks_of.assign(g.nv, {});
    bt.child_blocks.assign(g.nv, {});

    std::vector<std::vector<edge_ix>> beds;
    biconnected(g, beds, bt.is_articulation);
    for (auto &edges : beds) {
        block_tree::block_info bi;
        std::sort(edges.begin(), edges.end());
        bi.edges = edges;
        std::set<vertex_t> vs;
        for (edge_ix e : edges) {
            vs.insert(g.edges[e].ends[0]);
            vs.insert(g.edges[e].ends[1]);
        }
        bi.vertices.assign(vs.begin(), vs.end());
        bt.blocks.push_back(std::move(bi));
    }
    int nb = (int)bt.blocks.size();
    for (int b = 0; b < nb; ++b)
        for (vertex_t v : bt.blocks[b].vertices)
            bt.blocks_of[v].push_back(b);

    // block-tree node graph: blocks, then articulation vertices
    std::vector<vertex_t> arts;
    std::vector<int> aidx(g.nv, -1);
    for (vertex_t v = 0; v < g.nv; ++v)
        if (bt.is_articulation[v]) {
            aidx[v] = (int)arts.size();
            arts.push_back(v);
        }
    int nn = nb + (int)arts.size();
    std::vector<std::vector<int>> adj(nn);
    for (int b = 0; b < nb; ++b)
        for (vertex_t v : bt.blocks[b].vertices)
            if (aidx[v] >= 0) {
                adj[b].push_back(nb + aidx[v]);
                adj[nb + aidx[v]].push_back(b);
            }

    // pick the center: carried over from the original graph, or the tree
    // center of this graph (leaves are blocks, so the center is unique)
    if (track.fixed) {
        bt.centered_on_vertex = track.on_vertex;
        if (track.on_vertex) {
            bt.center_vertex = track.vertex;
        } else {
            std::set<vertex_t> want(track.block_vertices.begin(),
                                    track.block_vertices.end());
            int best = -1;
            size_t best_overlap = 0;
            for (int b = 0; b < nb; ++b) {
                size_t o = 0;
                for (vertex_t v : bt.blocks[b].vertices)
                    if (want.count(v))
                        ++o;
                if (o > best_overlap) {
                    best_overlap = o;
                    best = b;
                }
            }
            assert(best >= 0 && best_overlap >= 2);
            bt.center_block = best;
        }
    } else if (nb == 0) {
        bt.centered_on_vertex = true;
        bt.center_vertex = 0;
    } else {
        auto bfs_far = [&](int s, std::vector<int> *par) {
            std::vector<int> dist(nn, -1);
            if (par)
                par->assign(nn, -1);
            std::vector<int> q{s};
            dist[s] = 0;
            int far = s;
            for (size_t i = 0; i < q.size(); ++i) {
                int x = q[i];
                if (dist[x] > dist[far])
                    far = x;
                for (int y : adj[x])
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        if (par)
                            (*par)[y] = x;
                        q.push_back(y);
                    }
            }
            return std::make_pair(far, dist[far]);
        };
        int u = bfs_far(0, nullptr).first;
        std::vector<int> par;
        auto [w, diam] = bfs_far(u, &par);
        assert(diam % 2 == 0); // both endpoints of a longest path are blocks
        int c = w;
        for (int i = 0; i < diam / 2; ++i)
            c = par[c];
        if (c < nb) {
            bt.center_block = c;
        } else {
            bt.centered_on_vertex = true;
            bt.center_vertex = arts[c - nb];
        }
    }

    // orient away from the center
    std::vector<char> seen(nn, 0);
    std::vector<int> frontier;
    if (bt.centered_on_vertex) {
        vertex_t c = bt.center_vertex;
        if (aidx[c] >= 0)
            seen[nb + aidx[c]] = 1;
        for (int b : bt.blocks_of[c]) {
            bt.blocks[b].parent_art = c;
            seen[b] = 1;
            frontier.push_back(b);
        }
    } else {
        bt.blocks[bt.center_block].parent_art = no_vertex;
        seen[bt.center_block] = 1;
        frontier.push_back(bt.center_block);
    }
    for (size_t i = 0; i < frontier.size(); ++i) {
        int x = frontier[i];
        for (int y : adj[x]) {
            if (seen[y])
                continue;
            seen[y] = 1;
            if (y < nb) { // articulation x -> block y
                bt.blocks[y].parent_art = arts[x - nb];
                frontier.push_back(y);
            } else {
                frontier.push_back(y);
            }
        }
    }
    for (int b = 0; b < nb; ++b)
        if (bt.blocks[b].parent_art != no_vertex)
            bt.child_blocks[bt.blocks[b].parent_art].push_back(b);
    for (int b = 0; b < nb; ++b) {
        for (vertex_t v : bt.blocks[b].vertices)
            if (v != bt.blocks[b].parent_art && !bt.child_blocks[v].empty())
                bt.blocks[b].leaf = false;
    }
    return bt;
}

namespace {

// stand-alone atom graph; verts lists boundary vertices first
atom materialize(const multigraph &g, atom::kind_t kind,
                 const std::vector<vertex_t> &verts, int nboundary,
                 std::vector<edge_ix> edges)
{
    atom a;
    a.kind = kind;
    int nv = (int)verts.size();
    a.graph.nv = nv;
    a.graph.inc.resize(nv);
    a.graph.vcolor.assign(nv, 0);
    std::map<vertex_t, int> local;
    for (int i = 0; i < nv; ++i)
        local[verts[i]] = i;
    for (int i = 0; i < nboundary; ++i)
        a.boundary.push_back(i);
    std::sort(edges.begin(), edges.end());
    a.point_to_level.assign(nv + 2 * (int)edges.size(), -1);
    for (int i = 0; i < nv; ++i)
        a.point_to_level[i] = verts[i];
    for (edge_ix e : edges) {
        const edge_t &ed = g.edges[e];
        vertex_t lu = local.at(ed.ends[0]);
        vertex_t lv = ed.ends[1] == no_vertex ? no_vertex : local.at(ed.ends[1]);
        edge_ix le = a.graph.add_edge(lu, lv, ed.color, ed.kind, ed.tail);
        for (int side = 0; side < 2; ++side)
            a.point_to_level[nv + multigraph::half(le, side)] =
                g.nv + multigraph::half(e, side);
    }
    a.graph.check();
    return a;
}

// is there a pair of >=2 parallel edges with both endpoints of core degree
// >= 3 among the given edges?
bool has_inner_dipole(const multigraph &g, const std::vector<edge_ix> &edges)
{
    std::map<std::pair<vertex_t, vertex_t>, int> par;
    for (edge_ix e : edges) {
        if (g.is_pendant(e))
            continue;
        auto key = std::minmax(g.edges[e].ends[0], g.edges[e].ends[1]);
        if (++par[{key.first, key.second}] >= 2 &&
            g.real_degree(key.first) >= 3 && g.real_degree(key.second) >= 3)
            return true;
    }
    return false;
}

// components of the block after deleting two vertices
std::vector<std::vector<vertex_t>> block_split(const multigraph &g,
                                               const block_tree::block_info &B,
                                               vertex_t x, vertex_t y)
{
    std::map<vertex_t, int> local;
    for (vertex_t v : B.vertices)
        local[v] = (int)local.size();
    int k = (int)local.size();
    std::vector<std::vector<int>> adj(k);
    for (edge_ix e : B.edges) {
        vertex_t a = g.edges[e].ends[0], b = g.edges[e].ends[1];
        if (a == x || a == y || b == x || b == y)
            continue;
        adj[local[a]].push_back(local[b]);
        adj[local[b]].push_back(local[a]);
    }
    std::vector<int> comp(k, -1);
    comp[local[x]] = comp[local[y]] = -2;
    std::vector<std::vector<vertex_t>> out;
    for (vertex_t v : B.vertices) {
        int lv = local[v];
        if (comp[lv] != -1)
            continue;
        int id = (int)out.size();
        out.push_back({});
        std::vector<int> q{lv};
        comp[lv] = id;
        while (!q.empty()) {
            int a = q.back();
            q.pop_back();
            out[id].push_back(B.vertices[a]);
            for (int b : adj[a])
                if (comp[b] == -1) {
                    comp[b] = id;
                    q.push_back(b);
                }
        }
    }
    return out;
}

bool has_nontrivial_2cut(const multigraph &g, const block_tree::block_info &B)
{
    if (B.vertices.size() < 4)
        return false;
    for (size_t i = 0; i < B.vertices.size(); ++i) {
        vertex_t x = B.vertices[i];
        if (g.real_degree(x) < 3)
            continue;
        for (size_t j = i + 1; j < B.vertices.size(); ++j) {
            vertex_t y = B.vertices[j];
            if (g.real_degree(y) < 3)
                continue;
            if (block_split(g, B, x, y).size() >= 2)
                return true;
        }
    }
    return false;
}

} // namespace

std::vector<atom> find_atoms(const multigraph &g, const block_tree &bt)
{
    std::vector<atom> out;
    auto pend = vertex_pendants(g);

    // pendant stars: >= 2 pendant edges and nothing else hanging below
    for (vertex_t v = 0; v < g.nv; ++v)
        if (pend[v].size() >= 2 && bt.child_blocks[v].empty())
            out.push_back(materialize(g, atom::star, {v}, 1, pend[v]));

    if (g.nv <= 2) // two-vertex residues are primitive (possibly a dipole)
        return out;

    // dipoles: parallel bundles whose endpoints both have core degree >= 3
    std::map<std::pair<vertex_t, vertex_t>, std::vector<edge_ix>> bundles;
    for (edge_ix e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue;
        auto key = std::minmax(g.edges[e].ends[0], g.edges[e].ends[1]);
        bundles[{key.first, key.second}].push_back(e);
    }
    for (auto &[key, edges] : bundles) {
        auto [u, v] = key;
        if (edges.size() >= 2 && g.real_degree(u) >= 3 && g.real_degree(v) >= 3)
            out.push_back(materialize(g, atom::dipole, {u, v}, 2, edges));
    }

    // non-star block atoms: leaf blocks with plain interiors
    for (const auto &B : bt.blocks) {
        if (B.parent_art == no_vertex || !B.leaf)
            continue;
        bool ok = true;
        std::vector<edge_ix> edges = B.edges;
        for (vertex_t w : B.vertices) {
            if (w == B.parent_art)
                continue;
            if (pend[w].size() > 1 || !bt.child_blocks[w].empty()) {
                ok = false;
                break;
            }
            for (edge_ix e : pend[w])
                edges.push_back(e);
        }
        if (!ok || has_inner_dipole(g, B.edges) || has_nontrivial_2cut(g, B))
            continue;
        std::vector<vertex_t> verts{B.parent_art};
        for (vertex_t w : B.vertices)
            if (w != B.parent_art)
                verts.push_back(w);
        out.push_back(materialize(g, atom::block, verts, 1, edges));
    }

    // proper atoms: fragments cut off by a non-trivial 2-cut of a block,
    // with plain interiors, kept only if inclusion-minimal
    struct cand {
        std::set<vertex_t> all; // component plus the cut pair
        vertex_t x, y;
        std::vector<vertex_t> comp;
    };
    std::vector<cand> cands;
    std::set<std::set<vertex_t>> cand_keys;
    for (const auto &B : bt.blocks) {
        if (B.vertices.size() < 4)
            continue;
        for (size_t i = 0; i < B.vertices.size(); ++i) {
            vertex_t x = B.vertices[i];
            if (g.real_degree(x) < 3)
                continue;
            for (size_t j = i + 1; j < B.vertices.size(); ++j) {
                vertex_t y = B.vertices[j];
                if (g.real_degree(y) < 3)
                    continue;
                auto comps = block_split(g, B, x, y);
                if (comps.size() < 2)
                    continue;
                for (auto &C : comps) {
                    // skip the component on the center side
                    vertex_t toward = B.parent_art;
                    if (toward != no_vertex && toward != x && toward != y &&
                        std::find(C.begin(), C.end(), toward) != C.end())
                        continue;
                    bool ok = true;
                    for (vertex_t w : C)
                        if (bt.is_articulation[w] || pend[w].size() > 1) {
                            ok = false;
                            break;
                        }
                    if (!ok)
                        continue;
                    // collect the fragment's edges, checking for inner dipoles
                    std::set<vertex_t> inside(C.begin(), C.end());
                    std::vector<edge_ix> edges;
                    for (vertex_t w : C) {
                        for (half_t h : g.inc[w]) {
                            edge_ix e = multigraph::edge_of(h);
                            if (g.is_pendant(e)) {
                                edges.push_back(e);
                                continue;
                            }
                            vertex_t z = g.other_end(e, w);
                            assert(z == x || z == y || inside.count(z));
                            if (!inside.count(z) || z > w)
                                edges.push_back(e);
                        }
                    }
                    if (has_inner_dipole(g, edges)) {
                        continue;
                    }
                    cand cd;
                    cd.all = inside;
                    cd.all.insert(x);
                    cd.all.insert(y);
                    cd.x = x;
                    cd.y = y;
                    cd.comp = C;
                    if (cand_keys.insert(cd.all).second)
                        cands.push_back(std::move(cd));
                }
            }
        }
    }
    for (size_t i = 0; i < cands.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < cands.size() && minimal; ++j) {
            if (i == j || cands[j].all.size() >= cands[i].all.size())
                continue;
            if (std::includes(cands[i].all.begin(), cands[i].all.end(),
                              cands[j].all.begin(), cands[j].all.end()))
                minimal = false;
        }
        if (!minimal)
            continue;
        const cand &cd = cands[i];
        std::set<vertex_t> inside(cd.comp.begin(), cd.comp.end());
        std::vector<edge_ix> edges;
        for (vertex_t w : cd.comp) {
            for (half_t h : g.inc[w]) {
                edge_ix e = multigraph::edge_of(h);
                if (g.is_pendant(e)) {
                    edges.push_back(e);
                    continue;
                }
                vertex_t z = g.other_end(e, w);
                if (!inside.count(z) || z > w)
                    edges.push_back(e);
            }
        }
        std::vector<vertex_t> verts{cd.x, cd.y};
        for (vertex_t w : cd.comp)
            verts.push_back(w);
        out.push_back(materialize(g, atom::proper, verts, 2, edges));
    }
    return out;
}

namespace {

perm truncate_perm(const perm &p, int dom)
{
    perm q(dom);
    for (int i = 0; i < dom; ++i) {
        assert(p(i) < dom);
        q.img[i] = p(i);
    }
    return q;
}

// quick pre-key to avoid most isomorphism attempts while classing
std::vector<int> atom_key(const atom &a)
{
    std::vector<int> key{(int)a.kind, a.graph.nv, a.graph.ne()};
    std::vector<int> cols;
    for (const edge_t &e : a.graph.edges) {
        cols.push_back((int)e.color);
        cols.push_back((int)e.kind);
    }
    std::sort(cols.begin(), cols.end());
    key.insert(key.end(), cols.begin(), cols.end());
    std::vector<int> degs;
    for (vertex_t v = 0; v < a.graph.nv; ++v)
        degs.push_back(a.graph.degree(v));
    std::sort(degs.begin(), degs.end());
    key.insert(key.end(), degs.begin(), degs.end());
    return key;
}

multigraph paint_boundary_same(const atom &a)
{
    multigraph p = a.graph;
    for (vertex_t b : a.boundary)
        p.add_pendant(b, paint_color_base + 0);
    return p;
}

u128 factorial(size_t m)
{
    u128 f = 1;
    for (size_t i = 2; i <= m; ++i)
        f *= (u128)i;
    return f;
}

int make_class(std::vector<atom_class> &classes, const atom &a, int level)
{
    atom_class c;
    c.rep = a;
    c.level = level;
    c.color = atom_color_base + (color_t)classes.size();
    int dom = aut_domain_size(a.graph);

    if (a.kind == atom::star || a.kind == atom::dipole) {
        // pure shuffle groups: product of symmetric groups over interchangeable
        // edge bundles, computed without enumerating the group
        c.fix_gens = shuffle_generators(a.graph);
        std::map<std::tuple<color_t, int, vertex_t>, size_t> sizes;
        for (const edge_t &e : a.graph.edges) {
            vertex_t tv = e.kind == edge_kind::directed ? e.ends[e.tail] : no_vertex;
            ++sizes[{e.color, (int)e.kind, tv}];
        }
        c.fix_local = 1;
        for (auto &[key, m] : sizes)
            c.fix_local *= factorial(m);
        if (a.kind == atom::dipole) {
            auto sw = two_vertex_swap(a.graph);
            c.symmetric = sw.has_value();
            c.tau = sw ? *sw : perm(dom);
        } else {
            c.symmetric = true;
            c.tau = perm(dom);
        }
        c.fix_star = c.fix_local;
        for (const edge_t &e : a.graph.edges)
            if (is_atom_color(e.color))
                c.fix_star *= classes[(int)(e.color - atom_color_base)].fix_star;
        classes.push_back(std::move(c));
        return (int)classes.size() - 1;
    }

    multigraph base = a.graph;
    if (a.kind == atom::proper) // work with A+: the 2-cut gets a marker edge
        base.add_edge(a.boundary[0], a.boundary[1], paint_color_base + 9);

    multigraph distinct = base;
    distinct.add_pendant(a.boundary[0], paint_color_base + 1);
    if (a.boundary.size() == 2)
        distinct.add_pendant(a.boundary[1], paint_color_base + 2);
    map_aut_result fix = aut_map(distinct);
    c.fix_local = (u128)fix.elements.size();
    for (const auto &el : fix.elements)
        if (!el.p.is_identity())
            c.fix_gens.push_back(truncate_perm(el.p, dom));

    if (a.boundary.size() == 2) {
        multigraph same = base;
        same.add_pendant(a.boundary[0], paint_color_base + 1);
        same.add_pendant(a.boundary[1], paint_color_base + 1);
        map_aut_result stab = aut_map(same);
        c.symmetric = false;
        for (const auto &el : stab.elements)
            if (el.p(a.boundary[0]) == a.boundary[1]) {
                c.symmetric = true;
                c.tau = truncate_perm(el.p, dom);
                break;
            }
        assert((u128)stab.elements.size() == c.fix_local * (c.symmetric ? 2 : 1));
    } else {
        c.symmetric = true;
        c.tau = perm(dom);
    }

    c.fix_star = c.fix_local;
    for (const edge_t &e : a.graph.edges)
        if (is_atom_color(e.color))
            c.fix_star *= classes[(int)(e.color - atom_color_base)].fix_star;

    classes.push_back(std::move(c));
    return (int)classes.size() - 1;
}

primitive_kind classify_primitive(const multigraph &g)
{
    int core = 0;
    for (edge_ix e = 0; e < g.ne(); ++e)
        if (!g.is_pendant(e))
            ++core;
    if (g.nv == 1)
        return primitive_kind::k1;
    if (g.nv == 2)
        return core >= 2 ? primitive_kind::dipole : primitive_kind::k2;
    for (vertex_t v = 0; v < g.nv; ++v)
        if (g.real_degree(v) != 2)
            return primitive_kind::three_connected;
    return primitive_kind::cycle;
}

} // namespace

reduction_series reduce(const multigraph &g0)
{
    assert(is_connected(g0));
    for (vertex_t v = 0; v < g0.nv; ++v)
        assert(g0.vcolor[v] == 0); // callers normalize vertex colors first

    reduction_series s;
    center_track track;
    multigraph cur = g0;
    std::vector<vertex_t> pend_vparent;
    std::vector<int> pend_eparent;

    while (true) {
        reduction_level lvl;
        lvl.graph = cur;
        lvl.vparent = pend_vparent;
        lvl.eparent = pend_eparent;
        lvl.bt = build_block_tree(cur, track);
        if (!track.fixed) {
            track.fixed = true;
            track.on_vertex = lvl.bt.centered_on_vertex;
            if (track.on_vertex)
                track.vertex = lvl.bt.center_vertex;
            else
                track.block_vertices = lvl.bt.blocks[lvl.bt.center_block].vertices;
        }
        lvl.atoms = find_atoms(cur, lvl.bt);
        if (lvl.atoms.empty()) {
            s.levels.push_back(std::move(lvl));
            break;
        }

        // interiors are pairwise disjoint; boundaries may be shared
        std::vector<char> vgone(cur.nv, 0), egone(cur.ne(), 0);
        for (const atom &a : lvl.atoms) {
            for (vertex_t lv = 0; lv < a.graph.nv; ++lv) {
                if (std::find(a.boundary.begin(), a.boundary.end(), lv) !=
                    a.boundary.end())
                    continue;
                vertex_t v = a.point_to_level[lv];
                assert(!vgone[v]);
                vgone[v] = 1;
            }
            for (edge_ix le = 0; le < a.graph.ne(); ++le) {
                edge_ix e = multigraph::edge_of(
                    a.point_to_level[a.graph.nv + multigraph::half(le, 0)] - cur.nv);
                assert(!egone[e]);
                egone[e] = 1;
            }
        }

        // group into isomorphism classes (fresh classes per level) and record
        // the concrete class-rep -> instance point maps
        int level_index = (int)s.levels.size();
        std::vector<int> level_classes;
        std::vector<std::vector<int>> level_keys;
        for (atom &a : lvl.atoms) {
            std::vector<int> key = atom_key(a);
            int cls = -1;
            std::vector<int> psi;
            for (size_t ci = 0; ci < level_classes.size() && cls < 0; ++ci) {
                if (level_keys[ci] != key)
                    continue;
                const atom &rep = s.classes[level_classes[ci]].rep;
                auto iso = find_isomorphism(paint_boundary_same(rep),
                                            paint_boundary_same(a),
                                            std::max(rep.graph.nv, 16));
                if (iso) {
                    cls = level_classes[ci];
                    psi.resize(aut_domain_size(rep.graph));
                    for (size_t p = 0; p < psi.size(); ++p)
                        psi[p] = a.point_to_level[(*iso)(p)];
                }
            }
            if (cls < 0) {
                cls = make_class(s.classes, a, level_index);
                level_classes.push_back(cls);
                level_keys.push_back(key);
                psi = a.point_to_level;
            }
            lvl.atom_cls.push_back(cls);
            lvl.psi.push_back(std::move(psi));
        }

        // build the next level graph
        std::vector<vertex_t> vnew(cur.nv, -1);
        int nn = 0;
        for (vertex_t v = 0; v < cur.nv; ++v)
            if (!vgone[v])
                vnew[v] = nn++;
        multigraph nxt;
        nxt.nv = nn;
        nxt.inc.resize(nn);
        nxt.vcolor.assign(nn, 0);
        std::vector<vertex_t> vparent(nn);
        for (vertex_t v = 0; v < cur.nv; ++v)
            if (vnew[v] >= 0)
                vparent[vnew[v]] = v;
        std::vector<int> eparent;
        for (edge_ix e = 0; e < cur.ne(); ++e) {
            if (egone[e])
                continue;
            const edge_t &ed = cur.edges[e];
            vertex_t u = vnew[ed.ends[0]];
            vertex_t v = ed.ends[1] == no_vertex ? no_vertex : vnew[ed.ends[1]];
            assert(u >= 0 && (ed.ends[1] == no_vertex || v >= 0));
            nxt.add_edge(u, v, ed.color, ed.kind, ed.tail);
            eparent.push_back(e);
        }
        for (size_t ai = 0; ai < lvl.atoms.size(); ++ai) {
            const atom_class &c = s.classes[lvl.atom_cls[ai]];
            const std::vector<int> &psi = lvl.psi[ai];
            vertex_t u = vnew[psi[c.rep.boundary[0]]];
            edge_ix ne;
            if (c.rep.boundary.size() == 1) {
                ne = nxt.add_pendant(u, c.color);
            } else {
                vertex_t v = vnew[psi[c.rep.boundary[1]]];
                assert(u != v && u >= 0 && v >= 0);
                ne = nxt.add_edge(u, v, c.color,
                                  c.symmetric ? edge_kind::undirected
                                              : edge_kind::directed,
                                  0);
            }
            eparent.push_back(-1 - (int)ai);
            lvl.atom_edge.push_back(ne);
        }
        nxt.check();

        if (track.on_vertex) {
            track.vertex = vnew[track.vertex];
            assert(track.vertex >= 0);
        } else {
            std::vector<vertex_t> kept;
            for (vertex_t v : track.block_vertices)
                if (vnew[v] >= 0)
                    kept.push_back(vnew[v]);
            assert(kept.size() >= 2);
            track.block_vertices = kept;
        }

        s.levels.push_back(std::move(lvl));
        pend_vparent = std::move(vparent);
        pend_eparent = std::move(eparent);
        cur = nxt;
        assert(s.levels.size() <= (size_t)(2 * (g0.nv + g0.ne()) + 4));
    }

    s.kind = classify_primitive(s.levels.back().graph);
    s.center = track;
    return s;
}

} // namespace pga
