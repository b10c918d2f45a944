#include "pga/composer.hpp"

#include "pga/embedding.hpp"
#include "pga/map_aut.hpp"
#include "pga/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace pga {

namespace {

edge_ix edge_image(const multigraph &g, const perm &p, edge_ix e)
{
    return multigraph::edge_of(p(g.nv + multigraph::half(e, 0)) - g.nv);
}

bool edge_flip(const multigraph &g, const perm &p, edge_ix e)
{
    return multigraph::side_of(p(g.nv + multigraph::half(e, 0)) - g.nv) == 1;
}

// is there a bijection o1 -> o2 commuting with every generator? decided by
// anchoring o1's first edge and propagating through the action
bool equivariant(const multigraph &g, const std::vector<perm> &gens,
                 const std::vector<edge_ix> &o1, const std::vector<edge_ix> &o2)
{
    for (edge_ix anchor : o2) {
        std::map<edge_ix, edge_ix> m{{o1[0], anchor}};
        std::vector<edge_ix> q{o1[0]};
        bool ok = true;
        for (size_t i = 0; i < q.size() && ok; ++i) {
            for (const perm &p : gens) {
                edge_ix a = edge_image(g, p, q[i]);
                edge_ix b = edge_image(g, p, m[q[i]]);
                auto it = m.find(a);
                if (it == m.end()) {
                    m[a] = b;
                    q.push_back(a);
                } else if (it->second != b) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok)
            return true;
    }
    return false;
}

} // namespace

std::vector<edge_orbit_class> classify_edge_orbits(const multigraph &g,
                                                   const std::vector<perm> &gens)
{
    std::vector<edge_orbit_class> out;
    std::vector<int> orb(g.ne(), -1);
    for (edge_ix e0 = 0; e0 < g.ne(); ++e0) {
        if (orb[e0] >= 0)
            continue;
        int id = (int)out.size();
        out.push_back({});
        std::map<edge_ix, int> par{{e0, 0}}; // half-orbit side parity
        std::vector<edge_ix> q{e0};
        orb[e0] = id;
        bool refl = false;
        for (size_t i = 0; i < q.size(); ++i) {
            edge_ix e = q[i];
            for (const perm &p : gens) {
                edge_ix e2 = edge_image(g, p, e);
                int p2 = par[e] ^ (edge_flip(g, p, e) ? 1 : 0);
                if (orb[e2] < 0) {
                    orb[e2] = id;
                    par[e2] = p2;
                    q.push_back(e2);
                } else if (par[e2] != p2) {
                    refl = true;
                }
            }
        }
        std::sort(q.begin(), q.end());
        out[id].edges = q;
        out[id].reflected = refl;
    }
    int next = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i].equivalence >= 0)
            continue;
        out[i].equivalence = next;
        for (size_t j = i + 1; j < out.size(); ++j)
            if (out[j].equivalence < 0 &&
                out[j].edges.size() == out[i].edges.size() &&
                out[j].reflected == out[i].reflected &&
                equivariant(g, gens, out[i].edges, out[j].edges))
                out[j].equivalence = next;
        ++next;
    }
    return out;
}

std::vector<perm> reduce_generators(const std::vector<perm> &gens, int n)
{
    std::vector<perm> kept;
    stabilizer_chain ch = build_chain({}, n);
    for (const perm &g : gens) {
        if (g.is_identity() || ch.is_member(g))
            continue;
        kept.push_back(g);
        ch = build_chain(kept, n);
    }
    return kept;
}

namespace {

gx child_of(color_t col, const std::vector<gx> &memo)
{
    if (!is_atom_color(col))
        return gx_trivial();
    return memo[(int)(col - atom_color_base)];
}

gx wreath_sym(gx base, int m)
{
    if (m == 1)
        return base;
    return gx_wreath(std::move(base), gx_sym(m));
}

// (normal over colored-edge orbits) x| top, with the action recorded per
// coordinate (one per colored edge) and tau* twists on flipped edges;
// normalizes pure cyclic-orbit shapes to wreaths
gx orbit_semidirect(const reduction_series &s, const multigraph &g,
                    const std::vector<gx> &memo,
                    const std::vector<perm> &top_gens, gx top)
{
    std::vector<edge_orbit_class> orbits = classify_edge_orbits(g, top_gens);
    std::vector<gx> factors;
    std::vector<int> coord(g.ne(), -1);
    int cpos = 0;
    size_t kept_orbits = 0;
    gx lone_child = gx_trivial();
    for (const auto &o : orbits) {
        gx ch = child_of(g.edges[o.edges[0]].color, memo);
        if (ch->kind == gx_kind::trivial)
            continue;
        ++kept_orbits;
        lone_child = ch;
        factors.push_back(gx_pow(ch, (int)o.edges.size()));
        for (edge_ix e : o.edges)
            coord[e] = cpos++;
    }
    if (factors.empty())
        return top;
    action_descriptor act;
    bool any_twist = false;
    for (const perm &tg : top_gens) {
        action_descriptor::gen_action ga;
        ga.coord_img.assign(cpos, 0);
        ga.twist.assign(cpos, 0);
        for (edge_ix e = 0; e < g.ne(); ++e) {
            if (coord[e] < 0)
                continue;
            ga.coord_img[coord[e]] = coord[edge_image(g, tg, e)];
            if (edge_flip(g, tg, e)) {
                assert(s.class_of_color(g.edges[e].color).symmetric);
                ga.twist[coord[e]] = 1;
                any_twist = true;
            }
        }
        act.gens.push_back(std::move(ga));
    }
    if (!any_twist && kept_orbits == 1 && top->kind == gx_kind::cyc &&
        top->n == cpos) // regular cyclic action on the lone orbit
        return gx_wreath(lone_child, cpos == 2 ? gx_sym(2) : gx_cyc(cpos));
    return gx_semidirect(gx_direct(std::move(factors)), std::move(top),
                         std::move(act));
}

// cyclic-or-dihedral structure of a small permutation group, with the chosen
// generators aligned to the returned expression
struct small_top {
    gx expr;
    std::vector<perm> gens;
};

small_top identify_cyclic_or_dihedral(const std::vector<perm> &gens, int dom,
                                      u128 expected)
{
    std::vector<perm> elems = close_group(gens, dom);
    assert((u128)elems.size() == expected);
    int n = (int)elems.size();
    assert(n >= 2);
    for (const perm &r : elems)
        if (r.order() == n)
            return {gx_cyc(n), {r}};
    assert(n % 2 == 0);
    int m = n / 2;
    for (const perm &r : elems) {
        if (r.order() != m)
            continue;
        std::set<perm> powers;
        perm p(dom);
        for (int k = 0; k < m; ++k) {
            powers.insert(p);
            p = p.then(r);
        }
        for (const perm &f : elems) {
            if (powers.count(f))
                continue;
            if (!f.then(f).is_identity())
                continue;
            // dihedral relation f r f^-1 = r^-1
            if (f.then(r).then(f) == r.inverse())
                return {gx_dih(m), {r, f}};
        }
    }
    assert(false && "stabilizer group is neither cyclic nor dihedral");
    return {gx_trivial(), {}};
}

// interchangeable-edge bundles of a <=2-vertex graph in deterministic order
struct bundle {
    vertex_t at;    // pendant vertex, or directed tail vertex, or no_vertex
    bool shared;    // undirected core bundle (invariant under the end swap)
    color_t color;
    std::vector<edge_ix> edges;
};

std::vector<bundle> root_bundles(const multigraph &g)
{
    std::map<std::tuple<int, vertex_t, color_t>, std::vector<edge_ix>> m;
    for (edge_ix e = 0; e < g.ne(); ++e) {
        const edge_t &ed = g.edges[e];
        int cat;
        vertex_t at;
        if (g.is_pendant(e)) {
            cat = 0;
            at = ed.ends[0];
        } else if (ed.kind == edge_kind::directed) {
            cat = 1;
            at = ed.ends[ed.tail];
        } else {
            cat = 2;
            at = no_vertex;
        }
        m[{cat, at, ed.color}].push_back(e);
    }
    std::vector<bundle> out;
    for (auto &[key, lst] : m) {
        auto [cat, at, col] = key;
        out.push_back({at, cat == 2, col, lst});
    }
    return out;
}

// Aut expression of a 1- or 2-vertex primitive: shuffles per bundle, plus the
// end swap pairing the two sides and twisting the shared bundles
gx degenerate_root_expr(const reduction_series &s, const multigraph &g,
                        const std::vector<gx> &memo)
{
    std::vector<bundle> bs = root_bundles(g);
    auto factor = [&](const bundle &b) {
        return wreath_sym(child_of(b.color, memo), (int)b.edges.size());
    };
    bool swap = g.nv == 2 && two_vertex_swap(g).has_value();
    if (!swap) {
        std::vector<gx> fs;
        for (const bundle &b : bs)
            fs.push_back(factor(b));
        return gx_direct(std::move(fs));
    }
    std::vector<gx> side0, side1, shared;
    std::vector<char> twist;
    for (const bundle &b : bs) {
        if (b.shared) {
            gx ch = child_of(b.color, memo);
            shared.push_back(factor(b));
            twist.push_back(ch->kind != gx_kind::trivial ? 1 : 0);
        } else {
            (b.at == 0 ? side0 : side1).push_back(factor(b));
        }
    }
    assert(side0.size() == side1.size()); // the swap verified the balance
    bool shared_plain = std::find(twist.begin(), twist.end(), 1) == twist.end();
    if (shared_plain) {
        // the swap only exchanges the two sides: a wreath with Sym 2
        std::vector<gx> fs = shared;
        if (side0.empty())
            fs.push_back(gx_sym(2));
        else
            fs.push_back(gx_wreath(gx_direct(side0), gx_sym(2)));
        return gx_direct(std::move(fs));
    }
    // general: factor-level action; twist means tau* on every copy inside
    std::vector<gx> fs;
    action_descriptor::gen_action ga;
    for (size_t i = 0; i < side0.size(); ++i) {
        fs.push_back(side0[i]);
        fs.push_back(side1[i]);
        ga.coord_img.push_back((int)fs.size() - 1);
        ga.coord_img.push_back((int)fs.size() - 2);
        ga.twist.push_back(0);
        ga.twist.push_back(0);
    }
    for (size_t i = 0; i < shared.size(); ++i) {
        fs.push_back(shared[i]);
        ga.coord_img.push_back((int)fs.size() - 1);
        ga.twist.push_back(twist[i]);
    }
    action_descriptor act;
    act.gens.push_back(std::move(ga));
    return gx_semidirect(gx_direct(std::move(fs)), gx_cyc(2), std::move(act));
}

u128 factorial(size_t m)
{
    u128 f = 1;
    for (size_t i = 2; i <= m; ++i)
        f *= (u128)i;
    return f;
}

// |Aut| of the colored primitive, without expanding anything
u128 primitive_aut_order(const multigraph &g)
{
    if (g.nv <= 2) {
        u128 o = 1;
        for (const bundle &b : root_bundles(g))
            o *= factorial(b.edges.size());
        if (g.nv == 2 && two_vertex_swap(g))
            o *= 2;
        return o;
    }
    return (u128)aut_map(g).elements.size();
}

std::vector<perm> primitive_generators(const multigraph &g)
{
    if (g.nv <= 2) {
        std::vector<perm> gens = shuffle_generators(g);
        if (g.nv == 2)
            if (auto sw = two_vertex_swap(g))
                gens.push_back(*sw);
        return gens;
    }
    return reduce_generators(aut_map(g).generators(), aut_domain_size(g));
}

} // namespace

std::vector<gx> fix_expressions(const reduction_series &s)
{
    std::vector<gx> memo;
    for (const atom_class &c : s.classes) {
        const multigraph &g = c.rep.graph;
        gx e;
        if (c.rep.kind == atom::star || c.rep.kind == atom::dipole) {
            std::vector<gx> fs;
            for (const bundle &b : root_bundles(g))
                fs.push_back(wreath_sym(child_of(b.color, memo),
                                        (int)b.edges.size()));
            e = gx_direct(std::move(fs));
        } else if (c.fix_local == 1) {
            std::vector<gx> fs;
            for (const edge_t &ed : g.edges)
                fs.push_back(child_of(ed.color, memo));
            e = gx_direct(std::move(fs));
        } else {
            if (c.rep.kind == atom::proper)
                assert(c.fix_local == 2);
            small_top top = identify_cyclic_or_dihedral(
                c.fix_gens, aut_domain_size(g), c.fix_local);
            e = orbit_semidirect(s, g, memo, top.gens, top.expr);
        }
        assert(order(e) == c.fix_star);
        memo.push_back(std::move(e));
    }
    return memo;
}

gx compose_root(const reduction_series &s, const std::vector<gx> &class_fix)
{
    const multigraph &P = s.primitive();
    gx e;
    if (P.nv <= 2) {
        e = degenerate_root_expr(s, P, class_fix);
    } else {
        map_aut_result am = aut_map(P);
        assert(am.id);
        std::vector<perm> gens =
            reduce_generators(am.generators(), aut_domain_size(P));
        e = orbit_semidirect(s, P, class_fix, gens, spherical_expr(*am.id));
    }
    u128 want = primitive_aut_order(P);
    for (const edge_t &ed : P.edges)
        if (is_atom_color(ed.color))
            want *= s.class_of_color(ed.color).fix_star;
    assert(order(e) == want);
    return e;
}

namespace {

// permutation stored as its moved points only, sorted by point
struct sparse_perm {
    std::vector<std::pair<int, int>> m;
};

sparse_perm sparsify(const perm &p)
{
    sparse_perm s;
    for (int i = 0; i < p.size(); ++i)
        if (p(i) != i)
            s.m.push_back({i, p(i)});
    return s;
}

void normalize(sparse_perm &s)
{
    std::sort(s.m.begin(), s.m.end());
    size_t w = 0;
    for (size_t i = 0; i < s.m.size(); ++i) {
        if (w > 0 && s.m[w - 1].first == s.m[i].first) {
            assert(s.m[w - 1].second == s.m[i].second);
            continue;
        }
        s.m[w++] = s.m[i];
    }
    s.m.resize(w);
    s.m.erase(std::remove_if(s.m.begin(), s.m.end(),
                             [](const auto &e) { return e.first == e.second; }),
              s.m.end());
}

// p acts on G_{i+1}; the result acts on G_i, rewriting surviving points via
// the parent maps and moved replacement edges via the recorded psi point maps
sparse_perm lift_once(const reduction_series &s, int i, const sparse_perm &p)
{
    const reduction_level &up = s.levels[i + 1];
    const reduction_level &lo = s.levels[i];
    int nv_up = up.graph.nv, nv_lo = lo.graph.nv;
    sparse_perm out;
    for (auto [x, y] : p.m) {
        if (x < nv_up) {
            out.m.push_back({up.vparent[x], up.vparent[y]});
            continue;
        }
        half_t h = x - nv_up, h2 = y - nv_up;
        edge_ix e = multigraph::edge_of(h), e2 = multigraph::edge_of(h2);
        if (up.eparent[e] >= 0) {
            assert(up.eparent[e2] >= 0);
            out.m.push_back(
                {nv_lo + multigraph::half(up.eparent[e], multigraph::side_of(h)),
                 nv_lo + multigraph::half(up.eparent[e2], multigraph::side_of(h2))});
        } else if (multigraph::side_of(h) == 0) {
            int ai = -1 - up.eparent[e];
            assert(up.eparent[e2] < 0);
            int ai2 = -1 - up.eparent[e2];
            bool flip = multigraph::side_of(h2) == 1;
            const atom_class &c = s.classes[lo.atom_cls[ai]];
            assert(lo.atom_cls[ai] == lo.atom_cls[ai2]);
            assert(!flip || c.symmetric);
            const std::vector<int> &pa = lo.psi[ai];
            const std::vector<int> &pb = lo.psi[ai2];
            for (size_t r = 0; r < pa.size(); ++r)
                out.m.push_back({pa[r], pb[flip ? c.tau((int)r) : (int)r]});
        }
    }
    normalize(out);
    return out;
}

perm materialize(const sparse_perm &s, int dom)
{
    perm p(dom);
    for (auto [x, y] : s.m)
        p.img[x] = y;
    assert(p.valid());
    return p;
}

} // namespace

std::vector<perm> synthesize_generators(const reduction_series &s)
{
    int last = (int)s.levels.size() - 1;
    std::vector<std::pair<int, sparse_perm>> pending;
    for (const perm &g : primitive_generators(s.primitive()))
        pending.push_back({last, sparsify(g)});
    for (int i = 0; i < last; ++i) {
        const reduction_level &lvl = s.levels[i];
        for (size_t ai = 0; ai < lvl.atoms.size(); ++ai) {
            const atom_class &c = s.classes[lvl.atom_cls[ai]];
            const std::vector<int> &psi = lvl.psi[ai];
            for (const perm &fg : c.fix_gens) {
                sparse_perm sp;
                for (int r = 0; r < fg.size(); ++r)
                    if (fg(r) != r)
                        sp.m.push_back({psi[r], psi[fg(r)]});
                normalize(sp);
                pending.push_back({i, std::move(sp)});
            }
        }
    }
    int dom0 = aut_domain_size(s.levels[0].graph);
    std::vector<perm> out;
    for (auto &[level, sp] : pending) {
        for (int i = level - 1; i >= 0; --i)
            sp = lift_once(s, i, sp);
        if (sp.m.empty())
            continue;
        perm p = materialize(sp, dom0);
        assert(is_automorphism(s.levels[0].graph, p));
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

// split into standalone component graphs with their point embeddings
std::vector<analysis_report::component> split_components(const multigraph &g)
{
    auto comps = connected_components(g);
    std::vector<int> comp_of(g.nv, -1);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (vertex_t v : comps[ci])
            comp_of[v] = (int)ci;
    std::vector<analysis_report::component> out(comps.size());
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        auto &c = out[ci];
        std::vector<vertex_t> local(g.nv, -1);
        c.graph.nv = (int)comps[ci].size();
        c.graph.inc.resize(c.graph.nv);
        c.graph.vcolor.assign(c.graph.nv, 0);
        for (size_t i = 0; i < comps[ci].size(); ++i)
            local[comps[ci][i]] = (int)i;
        std::vector<edge_ix> edges;
        for (edge_ix e = 0; e < g.ne(); ++e)
            if (comp_of[g.edges[e].ends[0]] == (int)ci)
                edges.push_back(e);
        c.point_to_global.assign(c.graph.nv + 2 * (int)edges.size(), -1);
        for (size_t i = 0; i < comps[ci].size(); ++i)
            c.point_to_global[i] = comps[ci][i];
        for (edge_ix e : edges) {
            const edge_t &ed = g.edges[e];
            vertex_t lv = ed.ends[1] == no_vertex ? no_vertex : local[ed.ends[1]];
            edge_ix le = c.graph.add_edge(local[ed.ends[0]], lv, ed.color,
                                          ed.kind, ed.tail);
            for (int side = 0; side < 2; ++side)
                c.point_to_global[c.graph.nv + multigraph::half(le, side)] =
                    g.nv + multigraph::half(e, side);
        }
        c.graph.check();
    }
    return out;
}

analysis_report analyze_connected(multigraph g)
{
    analysis_report r;
    r.graph = std::move(g);
    r.series = reduce(r.graph);
    r.class_fix = fix_expressions(r.series);
    r.expr = compose_root(r.series, r.class_fix);
    r.generators = synthesize_generators(r.series);
    return r;
}

} // namespace

analysis_report analyze(const multigraph &input)
{
    multigraph g = normalize_vertex_colors(input);
    if (!is_planar(g))
        throw not_planar();
    if (is_connected(g) && g.nv > 0)
        return analyze_connected(std::move(g));

    analysis_report r;
    r.graph = g;
    r.connected = false;
    r.components = split_components(g);
    int dom = aut_domain_size(g);

    // group isomorphic components; analyze one representative per class
    std::vector<int> rep_of_group;
    std::vector<std::vector<int>> members;
    std::vector<std::vector<perm>> iso_to_rep; // per member, on rep domain
    for (size_t ci = 0; ci < r.components.size(); ++ci) {
        auto &c = r.components[ci];
        c.group = -1;
        for (size_t gi = 0; gi < rep_of_group.size() && c.group < 0; ++gi) {
            const auto &rep = r.components[rep_of_group[gi]];
            if (rep.graph.nv != c.graph.nv || rep.graph.ne() != c.graph.ne())
                continue;
            if (auto iso = find_isomorphism(rep.graph, c.graph)) {
                c.group = (int)gi;
                members[gi].push_back((int)ci);
                iso_to_rep[gi].push_back(*iso);
            }
        }
        if (c.group < 0) {
            c.group = (int)rep_of_group.size();
            rep_of_group.push_back((int)ci);
            members.push_back({(int)ci});
            iso_to_rep.push_back({perm(aut_domain_size(c.graph))});
        }
    }

    std::vector<gx> wreaths;
    for (size_t gi = 0; gi < rep_of_group.size(); ++gi) {
        const auto &rep = r.components[rep_of_group[gi]];
        analysis_report sub = analyze_connected(rep.graph);
        r.component_exprs.push_back(sub.expr);
        wreaths.push_back(wreath_sym(sub.expr, (int)members[gi].size()));

        // representative's generators, embedded
        for (const perm &p : sub.generators) {
            perm q(dom);
            for (int a = 0; a < p.size(); ++a)
                q.img[rep.point_to_global[a]] = rep.point_to_global[p(a)];
            r.generators.push_back(std::move(q));
        }
        // adjacent component swaps within the class
        for (size_t k = 0; k + 1 < members[gi].size(); ++k) {
            const auto &ca = r.components[members[gi][k]];
            const auto &cb = r.components[members[gi][k + 1]];
            // both isomorphisms start from the representative
            const perm &ma = iso_to_rep[gi][k];
            const perm &mb = iso_to_rep[gi][k + 1];
            perm q(dom);
            for (int a = 0; a < ma.size(); ++a) {
                q.img[ca.point_to_global[ma(a)]] = cb.point_to_global[mb(a)];
                q.img[cb.point_to_global[mb(a)]] = ca.point_to_global[ma(a)];
            }
            r.generators.push_back(std::move(q));
        }
    }
    r.expr = gx_direct(std::move(wreaths));
    for (const perm &p : r.generators)
        assert(is_automorphism(r.graph, p));
    return r;
}

} // namespace pga
