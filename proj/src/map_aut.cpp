#include "pga/map_aut.hpp"

#include "pga/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace pga {

perm edge_transposition(const multigraph &g, edge_ix a, edge_ix b)
{
    perm t(aut_domain_size(g));
    // parallel edges may be stored with opposite orientations: pair the
    // halves by endpoint vertex, not by storage side
    int flip = g.edges[a].ends[0] != g.edges[b].ends[0];
    for (int side = 0; side < 2; ++side) {
        half_t ha = multigraph::half(a, side), hb = multigraph::half(b, side ^ flip);
        t.img[half_point(g, ha)] = half_point(g, hb);
        t.img[half_point(g, hb)] = half_point(g, ha);
    }
    return t;
}

namespace {

// sorted pendant-color multiset per vertex; an automorphism must map each
// vertex to one with the same marks
std::vector<std::vector<color_t>> pendant_marks(const multigraph &g)
{
    std::vector<std::vector<color_t>> marks(g.nv);
    for (edge_ix e = 0; e < g.ne(); ++e)
        if (g.is_pendant(e))
            marks[g.edges[e].ends[0]].push_back(g.edges[e].color);
    for (auto &m : marks)
        std::sort(m.begin(), m.end());
    return marks;
}

// pendant edges per vertex, sorted by (color, index)
std::vector<std::vector<edge_ix>> pendant_lists(const multigraph &g)
{
    std::vector<std::vector<edge_ix>> pe(g.nv);
    for (edge_ix e = 0; e < g.ne(); ++e)
        if (g.is_pendant(e))
            pe[g.edges[e].ends[0]].push_back(e);
    for (auto &lst : pe)
        std::sort(lst.begin(), lst.end(), [&](edge_ix a, edge_ix b) {
            if (g.edges[a].color != g.edges[b].color)
                return g.edges[a].color < g.edges[b].color;
            return a < b;
        });
    return pe;
}

// completes a vertex+core-dart assignment over pendant halves by matching the
// i-th pendant of each color at v with the i-th at p(v)
bool extend_pendants(const multigraph &g, const std::vector<std::vector<edge_ix>> &pe,
                     perm &p)
{
    for (vertex_t v = 0; v < g.nv; ++v) {
        vertex_t w = p(v);
        if (pe[v].size() != pe[w].size())
            return false;
        for (size_t i = 0; i < pe[v].size(); ++i) {
            edge_ix a = pe[v][i], b = pe[w][i];
            if (g.edges[a].color != g.edges[b].color)
                return false;
            p.img[half_point(g, multigraph::half(a, 0))] =
                half_point(g, multigraph::half(b, 0));
            p.img[half_point(g, multigraph::half(a, 1))] =
                half_point(g, multigraph::half(b, 1));
        }
    }
    return true;
}

bool darts_compatible(const multigraph &g, half_t d, half_t t)
{
    const edge_t &a = g.edges[multigraph::edge_of(d)];
    const edge_t &b = g.edges[multigraph::edge_of(t)];
    if (a.color != b.color || a.kind != b.kind)
        return false;
    if (a.kind == edge_kind::directed &&
        (g.tail_half(multigraph::edge_of(d)) == d) !=
            (g.tail_half(multigraph::edge_of(t)) == t))
        return false;
    return true;
}

// propagate d0 -> t0 across the whole rotation system; the unique candidate
// of the chosen orientation, or nothing if the constraints clash
std::optional<perm> dart_extension(const planar_map &m,
                                   const std::vector<std::vector<color_t>> &marks,
                                   const std::vector<std::vector<edge_ix>> &pe,
                                   half_t d0, half_t t0, bool mirror)
{
    const multigraph &g = m.g;
    std::vector<half_t> f(g.nh(), -1);
    std::vector<char> used(g.nh(), 0);
    std::vector<half_t> queue;
    auto assign = [&](half_t d, half_t t) -> bool {
        if (f[d] != -1)
            return f[d] == t;
        if (used[t] || !darts_compatible(g, d, t))
            return false;
        used[t] = 1;
        f[d] = t;
        queue.push_back(d);
        return true;
    };
    if (!assign(d0, t0))
        return std::nullopt;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        half_t d = queue[qi], t = f[d];
        if (!assign(multigraph::twin(d), multigraph::twin(t)))
            return std::nullopt;
        if (!assign(m.next(d), mirror ? m.prev(t) : m.next(t)))
            return std::nullopt;
    }

    perm p(aut_domain_size(g));
    std::vector<vertex_t> vimg(g.nv, no_vertex);
    for (edge_ix e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue;
        for (int side = 0; side < 2; ++side) {
            half_t d = multigraph::half(e, side);
            if (f[d] == -1) // core disconnected; callers never pass this
                return std::nullopt;
            vertex_t v = g.endpoint(d), w = g.endpoint(f[d]);
            if (vimg[v] == no_vertex) {
                if (marks[v] != marks[w])
                    return std::nullopt;
                vimg[v] = w;
            } else if (vimg[v] != w)
                return std::nullopt;
            p.img[v] = w;
            p.img[half_point(g, d)] = half_point(g, f[d]);
        }
    }
    for (vertex_t v = 0; v < g.nv; ++v)
        if (vimg[v] == no_vertex) // isolated-in-core vertex: impossible here
            return std::nullopt;
    if (!extend_pendants(g, pe, p))
        return std::nullopt;
    return p;
}

void add_pendant_shuffles(const multigraph &g, const std::vector<edge_ix> &pend,
                          std::vector<perm> &gens)
{
    for (size_t i = 0; i + 1 < pend.size(); ++i)
        if (g.edges[pend[i]].color == g.edges[pend[i + 1]].color)
            gens.push_back(edge_transposition(g, pend[i], pend[i + 1]));
}

std::vector<map_automorphism> wrap(const std::vector<perm> &elems)
{
    std::vector<map_automorphism> out;
    for (const perm &p : elems)
        out.push_back({p, false});
    return out;
}

// K_1 with pendants: independent symmetric shuffles per color
std::vector<map_automorphism> aut_single_vertex(const multigraph &g)
{
    return wrap(close_group(shuffle_generators(g), aut_domain_size(g)));
}

// K_2 / banana: bundle shuffles per (color, direction), pendant shuffles at
// both ends, and possibly the end swap
std::vector<map_automorphism> aut_two_vertices(const multigraph &g)
{
    std::vector<perm> gens = shuffle_generators(g);
    if (auto sw = two_vertex_swap(g))
        gens.push_back(*sw);
    return wrap(close_group(gens, aut_domain_size(g)));
}

// simple cycle, possibly with marks: filter the 2n dihedral candidates
std::vector<map_automorphism> aut_cycle(const multigraph &g)
{
    auto marks = pendant_marks(g);
    auto pe = pendant_lists(g);
    int n = g.nv;

    std::vector<vertex_t> verts;
    std::vector<edge_ix> cyc; // cyc[i] joins verts[i] and verts[(i+1)%n]
    std::vector<int> pos(g.nv, -1);
    vertex_t v = 0;
    edge_ix prev_e = -1;
    for (int i = 0; i < n; ++i) {
        verts.push_back(v);
        pos[v] = i;
        edge_ix nxt = -1;
        for (half_t h : g.inc[v]) {
            edge_ix e = multigraph::edge_of(h);
            if (!g.is_pendant(e) && e != prev_e) {
                nxt = e;
                break;
            }
        }
        assert(nxt != -1);
        cyc.push_back(nxt);
        v = g.other_end(nxt, v);
        prev_e = nxt;
    }
    assert(v == verts[0]);

    auto half_at = [&](edge_ix e, vertex_t x) {
        return multigraph::half(e, g.edges[e].ends[0] == x ? 0 : 1);
    };
    std::vector<map_automorphism> out;
    for (int refl = 0; refl < 2; ++refl) {
        for (int s = 0; s < n; ++s) {
            auto vi = [&](int i) { return ((refl ? s - i : s + i) % n + n) % n; };
            auto ei = [&](int i) { return ((refl ? s - i - 1 : s + i) % n + n) % n; };
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if (marks[verts[i]] != marks[verts[vi(i)]])
                    ok = false;
            }
            for (int i = 0; i < n && ok; ++i) {
                const edge_t &a = g.edges[cyc[i]];
                const edge_t &b = g.edges[cyc[ei(i)]];
                if (a.color != b.color || a.kind != b.kind)
                    ok = false;
                else if (a.kind == edge_kind::directed) {
                    vertex_t at = a.ends[a.tail], bt = b.ends[b.tail];
                    if (verts[vi(pos[at])] != bt)
                        ok = false;
                }
            }
            if (!ok)
                continue;
            perm p(aut_domain_size(g));
            for (int i = 0; i < n; ++i) {
                p.img[verts[i]] = verts[vi(i)];
                half_t ha = half_at(cyc[i], verts[i]);
                half_t hb = half_at(cyc[ei(i)], verts[vi(i)]);
                p.img[half_point(g, ha)] = half_point(g, hb);
                p.img[half_point(g, multigraph::twin(ha))] =
                    half_point(g, multigraph::twin(hb));
            }
            if (!extend_pendants(g, pe, p))
                continue;
            out.push_back({p, refl != 0});
        }
    }
    return out;
}

std::vector<map_automorphism> aut_3connected(const multigraph &g)
{
    // cheap necessary sanity: min core degree 3 and a simple core
    std::set<std::pair<vertex_t, vertex_t>> simple;
    for (edge_ix e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue;
        auto key = std::minmax(g.edges[e].ends[0], g.edges[e].ends[1]);
        if (!simple.insert({key.first, key.second}).second)
            throw not_essentially_3_connected();
    }
    for (vertex_t v = 0; v < g.nv; ++v)
        if (g.real_degree(v) < 3)
            throw not_essentially_3_connected();

    planar_map m = embed(g);
    auto marks = pendant_marks(g);
    auto pe = pendant_lists(g);
    half_t d0 = m.rot[0][0];
    std::vector<map_automorphism> out;
    for (vertex_t v = 0; v < g.nv; ++v) {
        for (half_t t : m.rot[v]) {
            for (int mirror = 0; mirror < 2; ++mirror) {
                auto p = dart_extension(m, marks, pe, d0, t, mirror != 0);
                if (p) {
                    assert(is_automorphism(g, *p));
                    out.push_back({*p, mirror != 0});
                }
            }
        }
    }
    return out;
}

} // namespace

std::vector<perm> shuffle_generators(const multigraph &g)
{
    std::vector<perm> gens;
    // key: (endpoints, color, kind, tail vertex for directed edges)
    std::map<std::tuple<vertex_t, vertex_t, color_t, int, vertex_t>,
             std::vector<edge_ix>>
        bundles;
    for (edge_ix e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue;
        const edge_t &ed = g.edges[e];
        auto mm = std::minmax(ed.ends[0], ed.ends[1]);
        vertex_t tv = ed.kind == edge_kind::directed ? ed.ends[ed.tail] : no_vertex;
        bundles[{mm.first, mm.second, ed.color, (int)ed.kind, tv}].push_back(e);
    }
    for (auto &[key, lst] : bundles)
        for (size_t i = 0; i + 1 < lst.size(); ++i)
            gens.push_back(edge_transposition(g, lst[i], lst[i + 1]));
    auto pe = pendant_lists(g);
    for (vertex_t v = 0; v < g.nv; ++v)
        add_pendant_shuffles(g, pe[v], gens);
    return gens;
}

std::optional<perm> two_vertex_swap(const multigraph &g)
{
    assert(g.nv == 2);
    int dom = aut_domain_size(g);
    auto pe = pendant_lists(g);
    std::map<std::tuple<color_t, int, vertex_t>, std::vector<edge_ix>> bundles;
    for (edge_ix e = 0; e < g.ne(); ++e) {
        if (g.is_pendant(e))
            continue;
        const edge_t &ed = g.edges[e];
        vertex_t tv = ed.kind == edge_kind::directed ? ed.ends[ed.tail] : no_vertex;
        bundles[{ed.color, (int)ed.kind, tv}].push_back(e);
    }
    perm sw(dom);
    std::swap(sw.img[0], sw.img[1]);
    std::set<std::tuple<color_t, int, vertex_t>> done;
    for (auto &[key, lst] : bundles) {
        if (done.count(key))
            continue;
        auto [c, k, tv] = key;
        if (k == (int)edge_kind::undirected) {
            done.insert(key);
            for (edge_ix e : lst) {
                half_t h = multigraph::half(e, 0);
                sw.img[half_point(g, h)] = half_point(g, multigraph::twin(h));
                sw.img[half_point(g, multigraph::twin(h))] = half_point(g, h);
            }
        } else {
            auto peer_key = std::make_tuple(c, k, (vertex_t)(1 - tv));
            auto it = bundles.find(peer_key);
            if (it == bundles.end() || it->second.size() != lst.size())
                return std::nullopt;
            done.insert(key);
            done.insert(peer_key);
            // pair edges across the two oppositely-directed bundles; halves
            // land at the opposite vertex, so tails go to tails
            for (size_t i = 0; i < lst.size(); ++i) {
                edge_ix a = lst[i], b = it->second[i];
                for (auto [e1, e2] : {std::pair{a, b}, std::pair{b, a}}) {
                    for (int side = 0; side < 2; ++side) {
                        half_t h1 = multigraph::half(e1, side);
                        int s2 = g.edges[e2].ends[0] == g.endpoint(h1) ? 1 : 0;
                        sw.img[half_point(g, h1)] =
                            half_point(g, multigraph::half(e2, s2));
                    }
                }
            }
        }
    }
    if (!extend_pendants(g, pe, sw))
        return std::nullopt;
    return sw;
}

std::optional<perm> try_extend(const planar_map &m, const angle &a, const angle &b,
                               bool mirrored)
{
    auto marks = pendant_marks(m.g);
    auto pe = pendant_lists(m.g);
    auto p = dart_extension(m, marks, pe, a.d1, b.d1, mirrored);
    if (!p)
        return std::nullopt;
    if ((*p)(half_point(m.g, a.d2)) != half_point(m.g, b.d2))
        return std::nullopt;
    return p;
}

map_aut_result aut_map(const multigraph &g)
{
    assert(is_connected(g));
    map_aut_result r;
    bool has_core = false;
    for (edge_ix e = 0; e < g.ne(); ++e)
        if (!g.is_pendant(e))
            has_core = true;

    if (!has_core) {
        if (g.nv != 1)
            throw not_essentially_3_connected();
        r.elements = aut_single_vertex(g);
    } else if (g.nv == 2) {
        r.elements = aut_two_vertices(g);
    } else {
        bool all_two = true;
        for (vertex_t v = 0; v < g.nv; ++v)
            if (g.real_degree(v) != 2)
                all_two = false;
        r.elements = all_two ? aut_cycle(g) : aut_3connected(g);
    }
    try {
        r.id = identify_spherical(r.elements);
    } catch (const unrecognized_group &) {
        r.id.reset(); // degenerate shuffle groups need not be spherical
    }
    return r;
}

std::vector<perm> stabilizer(const multigraph &g, vertex_t v)
{
    std::vector<perm> out;
    for (const auto &e : aut_map(g).elements)
        if (e.p(v) == v && !e.p.is_identity())
            out.push_back(e.p);
    return out;
}

namespace {

bool commute(const perm &a, const perm &b) { return a.then(b) == b.then(a); }

spherical_id make_id(spherical_id::family_t f, int n = 1) { return {f, n}; }

} // namespace

spherical_id identify_spherical(const std::vector<map_automorphism> &elements)
{
    size_t n = elements.size();
    assert(n > 0);
    std::vector<int> ord;
    int maxord = 1;
    for (const auto &e : elements) {
        ord.push_back(e.p.order());
        maxord = std::max(maxord, ord.back());
    }
    // cyclic
    if ((size_t)maxord == n)
        return make_id(spherical_id::C, (int)n);
    // abelian: the only non-cyclic spherical abelians are C_n x C_2
    bool abelian = true;
    for (size_t i = 0; i < n && abelian; ++i)
        for (size_t j = i + 1; j < n && abelian; ++j)
            if (!commute(elements[i].p, elements[j].p))
                abelian = false;
    if (abelian) {
        if (n != 2 * (size_t)maxord)
            throw unrecognized_group();
        return make_id(spherical_id::CxC2, maxord);
    }
    // a central orientation-reversing involution splits off a C_2 factor;
    // checking it before the dihedral test keeps D_m x C_2 (m odd) from being
    // reported as the abstractly isomorphic D_2m
    for (const auto &z : elements) {
        if (!z.reversing || z.p.order() != 2)
            continue;
        bool central = true;
        for (const auto &e : elements)
            if (!commute(z.p, e.p)) {
                central = false;
                break;
            }
        if (!central)
            continue;
        std::vector<map_automorphism> pres;
        for (const auto &e : elements)
            if (!e.reversing)
                pres.push_back(e);
        if (pres.size() * 2 != n)
            break; // z reversing yet preserving part is not index 2: give up
        spherical_id base = identify_spherical(pres);
        switch (base.family) {
        case spherical_id::C: return make_id(spherical_id::CxC2, base.n);
        case spherical_id::D: return make_id(spherical_id::DxC2, base.n);
        case spherical_id::A4: return make_id(spherical_id::A4xC2);
        case spherical_id::S4: return make_id(spherical_id::S4xC2);
        case spherical_id::A5: return make_id(spherical_id::A5xC2);
        default: throw unrecognized_group();
        }
    }
    // dihedral: a cyclic index-2 subgroup plus an inverting involution
    if (n % 2 == 0) {
        int m = (int)(n / 2);
        for (size_t i = 0; i < n; ++i) {
            if (ord[i] != m)
                continue;
            const perm &rot = elements[i].p;
            std::set<perm> powers;
            perm q(rot.size());
            for (int k = 0; k < m; ++k) {
                powers.insert(q);
                q = q.then(rot);
            }
            perm rinv = rot.inverse();
            for (size_t j = 0; j < n; ++j) {
                const perm &f = elements[j].p;
                if (ord[j] != 2 || powers.count(f))
                    continue;
                if (f.then(rot).then(f) == rinv)
                    return make_id(spherical_id::D, m);
            }
        }
    }
    if (n == 12 && maxord == 3)
        return make_id(spherical_id::A4);
    if (n == 24 && maxord == 4)
        return make_id(spherical_id::S4);
    if (n == 60 && maxord == 5)
        return make_id(spherical_id::A5);
    throw unrecognized_group();
}

std::string spherical_id::str() const
{
    switch (family) {
    case C: return "C(" + std::to_string(n) + ")";
    case D: return "D(" + std::to_string(n) + ")";
    case CxC2: return "xC2(C(" + std::to_string(n) + "))";
    case DxC2: return "xC2(D(" + std::to_string(n) + "))";
    case A4: return "A(4)";
    case S4: return "S(4)";
    case A5: return "A(5)";
    case A4xC2: return "xC2(A(4))";
    case S4xC2: return "xC2(S(4))";
    case A5xC2: return "xC2(A(5))";
    }
    return "?";
}

gx spherical_expr(const spherical_id &id)
{
    switch (id.family) {
    case spherical_id::C: return gx_cyc(id.n);
    case spherical_id::D: return gx_dih(id.n);
    case spherical_id::CxC2: return gx_xc2(gx_cyc(id.n));
    case spherical_id::DxC2: return gx_xc2(gx_dih(id.n));
    case spherical_id::A4: return gx_alt(4);
    case spherical_id::S4: return gx_sym(4);
    case spherical_id::A5: return gx_alt(5);
    case spherical_id::A4xC2: return gx_xc2(gx_alt(4));
    case spherical_id::S4xC2: return gx_xc2(gx_sym(4));
    case spherical_id::A5xC2: return gx_xc2(gx_alt(5));
    }
    return gx_trivial();
}

} // namespace pga
