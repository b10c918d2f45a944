#include "pga/realizer.hpp"

#include "pga/composer.hpp"
#include "pga/map_aut.hpp"

#include <cassert>
#include <map>

namespace pga {

namespace {

vertex_t add_vertex(multigraph &g)
{
    g.inc.emplace_back();
    g.vcolor.push_back(0);
    return g.nv++;
}

// rigid pendant comb: a path of k >= 3 vertices with an extra tooth on the
// first one; distinct k give pairwise non-isomorphic asymmetric trees
void attach_comb(multigraph &g, vertex_t at, int k)
{
    assert(k >= 3);
    vertex_t prev = at;
    for (int i = 0; i < k; ++i) {
        vertex_t v = add_vertex(g);
        g.add_edge(prev, v);
        if (i == 0)
            g.add_edge(v, add_vertex(g));
        prev = v;
    }
}

// copy `part` into `host` and connect its root to `at`; returns the copy root
vertex_t graft(multigraph &host, vertex_t at, const rooted_graph &part)
{
    int base = host.nv;
    for (vertex_t v = 0; v < part.g.nv; ++v) {
        add_vertex(host);
        host.vcolor[base + v] = part.g.vcolor[v];
    }
    for (edge_ix e = 0; e < part.g.ne(); ++e) {
        const edge_t &ed = part.g.edges[e];
        if (part.g.is_pendant(e))
            host.add_pendant(base + ed.ends[0], ed.color);
        else
            host.add_edge(base + ed.ends[0], base + ed.ends[1], ed.color, ed.kind, ed.tail);
    }
    host.add_edge(at, (vertex_t)(base + part.root));
    return (vertex_t)(base + part.root);
}

rooted_graph new_root(realize_context &ctx)
{
    rooted_graph r;
    r.g.nv = 1;
    r.g.inc.resize(1);
    r.g.vcolor.assign(1, 0);
    r.root = 0;
    attach_comb(r.g, r.root, ctx.next_comb++);
    return r;
}

// chiral ring: hub -> r_0..r_{m-1} joined by oriented 2-paths whose tooth
// sits next to the tail vertex, killing all reflections; each ring vertex
// carries one copy of `unit`
rooted_graph ring_host(const rooted_graph &unit, int m, realize_context &ctx)
{
    assert(m >= 2);
    rooted_graph r = new_root(ctx);
    std::vector<vertex_t> ring(m);
    for (int i = 0; i < m; ++i) {
        ring[i] = add_vertex(r.g);
        r.g.add_edge(r.root, ring[i]);
    }
    for (int i = 0; i < m; ++i) {
        vertex_t p = add_vertex(r.g), q = add_vertex(r.g);
        r.g.add_edge(ring[i], p);
        r.g.add_edge(p, q);
        r.g.add_edge(q, ring[(i + 1) % m]);
        r.g.add_edge(p, add_vertex(r.g)); // the orientation tooth
    }
    for (int i = 0; i < m; ++i)
        graft(r.g, ring[i], unit);
    return r;
}

// decompose a semidirect normal subgroup into (factor, exponent) slots
std::vector<std::pair<gx, int>> normal_slots(const gx &normal)
{
    std::vector<std::pair<gx, int>> slots;
    std::vector<gx> factors;
    if (normal->kind == gx_kind::direct)
        factors = normal->children;
    else
        factors.push_back(normal);
    for (const gx &f : factors) {
        if (f->kind == gx_kind::pow)
            slots.push_back({f->children[0], f->n});
        else
            slots.push_back({f, 1});
    }
    return slots;
}

// mirror host for (Psi1^2 x Psi2) x| C_2: a triangle root-L-R whose swap is
// the C_2, paired Psi1 copies on the flanks, Psi2 on the axis vertex
rooted_graph mirror_host(const std::vector<std::pair<gx, int>> &slots, realize_context &ctx)
{
    rooted_graph r = new_root(ctx);
    vertex_t l = add_vertex(r.g), rt = add_vertex(r.g), w = add_vertex(r.g);
    r.g.add_edge(r.root, l);
    r.g.add_edge(r.root, rt);
    r.g.add_edge(l, rt);
    r.g.add_edge(r.root, w);
    attach_comb(r.g, w, ctx.next_comb++); // keep the axis vertex off the flanks
    for (const auto &[expr, exp] : slots) {
        if (exp == 2) {
            rooted_graph part = realize_fix(expr, ctx);
            graft(r.g, l, part);
            graft(r.g, rt, part);
        } else if (exp == 1) {
            graft(r.g, w, realize_fix(expr, ctx));
        } else {
            throw unsupported_shape();
        }
    }
    return r;
}

// wheel host for (Psi1^2n x Psi2^n) x| D_n, n >= 3: hub root, rim vertices
// carry the exponent-n copies, the two rim-path interior positions carry the
// exponent-2n copies
rooted_graph wheel_host(int n, const std::vector<std::pair<gx, int>> &slots,
                        realize_context &ctx)
{
    assert(n >= 3);
    rooted_graph r = new_root(ctx);
    std::vector<vertex_t> rim(n), a(n), b(n);
    for (int i = 0; i < n; ++i) {
        rim[i] = add_vertex(r.g);
        r.g.add_edge(r.root, rim[i]);
    }
    for (int i = 0; i < n; ++i) {
        a[i] = add_vertex(r.g);
        b[i] = add_vertex(r.g);
        r.g.add_edge(rim[i], a[i]);
        r.g.add_edge(a[i], b[i]);
        r.g.add_edge(b[i], rim[(i + 1) % n]);
    }
    for (const auto &[expr, exp] : slots) {
        rooted_graph part = realize_fix(expr, ctx);
        if (exp == 2 * n) {
            for (int i = 0; i < n; ++i) {
                graft(r.g, a[i], part);
                graft(r.g, b[i], part);
            }
        } else if (exp == n) {
            for (int i = 0; i < n; ++i)
                graft(r.g, rim[i], part);
        } else {
            throw unsupported_shape();
        }
    }
    return r;
}

// bipyramid host for (Psi1^4 x Psi2^2 x Psi3) x| D_2: square rim with two
// hubs; identical combs on two opposite rim vertices cut D_4 down to D_2
rooted_graph bipyramid_host(const std::vector<std::pair<gx, int>> &slots,
                            realize_context &ctx)
{
    rooted_graph r = new_root(ctx);
    vertex_t anti = add_vertex(r.g);
    std::vector<vertex_t> rim(4), mid(4);
    for (int i = 0; i < 4; ++i) {
        rim[i] = add_vertex(r.g);
        r.g.add_edge(r.root, rim[i]);
        r.g.add_edge(anti, rim[i]);
    }
    for (int i = 0; i < 4; ++i) {
        mid[i] = add_vertex(r.g);
        r.g.add_edge(rim[i], mid[i]);
        r.g.add_edge(mid[i], rim[(i + 1) % 4]);
    }
    int breaker = ctx.next_comb++;
    attach_comb(r.g, rim[0], breaker);
    attach_comb(r.g, rim[2], breaker);
    for (const auto &[expr, exp] : slots) {
        rooted_graph part = realize_fix(expr, ctx);
        if (exp == 4) {
            for (int i = 0; i < 4; ++i)
                graft(r.g, mid[i], part);
        } else if (exp == 2) {
            graft(r.g, rim[0], part);
            graft(r.g, rim[2], part);
        } else if (exp == 1) {
            graft(r.g, anti, part);
        } else {
            throw unsupported_shape();
        }
    }
    return r;
}

} // namespace

rooted_graph realize_fix(const gx &e, realize_context &ctx)
{
    switch (e->kind) {
    case gx_kind::trivial:
        return new_root(ctx);
    case gx_kind::direct: {
        rooted_graph r = new_root(ctx);
        for (const gx &c : e->children)
            graft(r.g, r.root, realize_fix(c, ctx));
        return r;
    }
    case gx_kind::pow: {
        rooted_graph r = new_root(ctx);
        for (int i = 0; i < e->n; ++i) // independent builds: a plain power
            graft(r.g, r.root, realize_fix(e->children[0], ctx));
        return r;
    }
    case gx_kind::sym: {
        rooted_graph r = new_root(ctx);
        rooted_graph unit = new_root(ctx);
        for (int i = 0; i < e->n; ++i)
            graft(r.g, r.root, unit);
        return r;
    }
    case gx_kind::cyc:
        return ring_host(new_root(ctx), e->n, ctx);
    case gx_kind::dih:
        if (e->n >= 3)
            return wheel_host(e->n, {}, ctx);
        return bipyramid_host({}, ctx); // D(1) never reaches here (-> C(2))
    case gx_kind::wreath: {
        const gx &top = e->children[1];
        rooted_graph unit = realize_fix(e->children[0], ctx);
        if (top->kind == gx_kind::sym) {
            rooted_graph r = new_root(ctx);
            for (int i = 0; i < top->n; ++i)
                graft(r.g, r.root, unit);
            return r;
        }
        assert(top->kind == gx_kind::cyc);
        return ring_host(unit, top->n, ctx);
    }
    case gx_kind::semidirect: {
        auto slots = normal_slots(e->children[0]);
        const gx &top = e->children[1];
        if (top->kind == gx_kind::cyc && top->n == 2)
            return mirror_host(slots, ctx);
        if (top->kind == gx_kind::dih && top->n >= 3)
            return wheel_host(top->n, slots, ctx);
        if (top->kind == gx_kind::dih && top->n == 2)
            return bipyramid_host(slots, ctx);
        throw unsupported_shape();
    }
    default:
        throw unsupported_shape(); // alt, xc2: not boundary-fixing groups
    }
}

realization realize_aut(const multigraph &seed, const std::vector<gx> &orbit_exprs)
{
    map_aut_result aut = aut_map(seed);
    auto orbits = classify_edge_orbits(seed, aut.generators());
    if (orbits.size() != orbit_exprs.size())
        throw orbit_count_mismatch();

    realization out;
    out.g.nv = seed.nv;
    out.g.inc.resize(seed.nv);
    out.g.vcolor = seed.vcolor;
    out.predicted = (u128)aut.elements.size();

    realize_context ctx;
    for (size_t i = 0; i < orbits.size(); ++i) {
        rooted_graph part = realize_fix(orbit_exprs[i], ctx);
        for (edge_ix e : orbits[i].edges) {
            vertex_t m = add_vertex(out.g);
            out.g.add_edge(seed.edges[e].ends[0], m);
            out.g.add_edge(m, seed.edges[e].ends[1]);
            graft(out.g, m, part);
        }
        u128 f = order(orbit_exprs[i]);
        for (size_t k = 0; k < orbits[i].edges.size(); ++k)
            out.predicted *= f;
    }
    out.g.check();
    return out;
}

multigraph make_seed(const std::string &name)
{
    auto from_pairs = [](int nv, const std::vector<std::pair<int, int>> &es) {
        multigraph g;
        g.nv = nv;
        g.inc.resize(nv);
        g.vcolor.assign(nv, 0);
        for (auto [u, v] : es)
            g.add_edge(u, v);
        g.check();
        return g;
    };
    auto param = [&](const std::string &prefix) -> int {
        if (name.rfind(prefix + ":", 0) != 0)
            return -1;
        return std::stoi(name.substr(prefix.size() + 1));
    };

    if (name == "k2")
        return from_pairs(2, {{0, 1}});
    if (name == "tetrahedron")
        return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "cube") {
        std::vector<std::pair<int, int>> es;
        for (int v = 0; v < 8; ++v)
            for (int b = 0; b < 3; ++b)
                if (v < (v ^ (1 << b)))
                    es.push_back({v, v ^ (1 << b)});
        return from_pairs(8, es);
    }
    if (name == "octahedron") {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (i / 2 != j / 2) // antipodal pairs (0,1),(2,3),(4,5)
                    es.push_back({i, j});
        return from_pairs(6, es);
    }
    if (name == "dodecahedron") {
        static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 20; ++i) {
            es.push_back({i, (i + 1) % 20});
            int j = ((i + lcf[i % 10]) % 20 + 20) % 20;
            if (i < j)
                es.push_back({i, j});
        }
        return from_pairs(20, es);
    }
    if (name == "icosahedron") {
        std::vector<std::pair<int, int>> es; // pentagonal antiprism + 2 apexes
        for (int i = 0; i < 5; ++i) {
            es.push_back({0, 1 + i});
            es.push_back({11, 6 + i});
            es.push_back({1 + i, 1 + (i + 1) % 5});
            es.push_back({6 + i, 6 + (i + 1) % 5});
            es.push_back({1 + i, 6 + i});
            es.push_back({1 + i, 6 + (i + 4) % 5});
        }
        return from_pairs(12, es);
    }
    if (int n = param("cycle"); n >= 3) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            es.push_back({i, (i + 1) % n});
        return from_pairs(n, es);
    }
    if (int n = param("prism"); n >= 3) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i) {
            es.push_back({i, (i + 1) % n});
            es.push_back({n + i, n + (i + 1) % n});
            es.push_back({i, n + i});
        }
        return from_pairs(2 * n, es);
    }
    if (int n = param("wheel"); n >= 3) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i) {
            es.push_back({i, (i + 1) % n});
            es.push_back({i, n});
        }
        return from_pairs(n + 1, es);
    }
    throw std::invalid_argument("unknown seed: " + name);
}

} // namespace pga
