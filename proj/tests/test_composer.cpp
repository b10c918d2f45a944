#include "doctest.h"

#include "builders.hpp"
#include "pga/composer.hpp"
#include "pga/embedding.hpp"
#include "pga/map_aut.hpp"
#include "pga/oracle.hpp"

#include <random>

using namespace pga;
using namespace pga::builders;

namespace {

// full cross-check: expression order == oracle count == order of the
// synthesized generators, and every generator replays as an automorphism
void check_full(const multigraph &g)
{
    analysis_report r = analyze(g);
    u128 want = brute_force_aut_count(r.graph, 12);
    CHECK(order(r.expr) == want);
    for (const perm &p : r.generators)
        CHECK(is_automorphism(r.graph, p));
    CHECK(group_order(r.generators, aut_domain_size(r.graph)) == want);
}

} // namespace

TEST_CASE("edge orbits of a path under its reflection")
{
    multigraph g = path(3);
    auto orbits = classify_edge_orbits(g, brute_force_aut(g));
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].edges.size() == 2);
    CHECK(!orbits[0].reflected); // halves split into two orbits of size 2
}

TEST_CASE("edge orbit of a cycle under its dihedral group is reflected")
{
    multigraph g = cycle(4);
    auto gens = aut_map(g).generators();
    auto orbits = classify_edge_orbits(g, gens);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].edges.size() == 4);
    CHECK(orbits[0].reflected); // a reflection maps some edge onto itself
}

TEST_CASE("equivariant orbits under a plain rotation")
{
    multigraph g = cycle(4);
    perm rot2;
    for (const auto &el : aut_map(g).elements)
        if (el.p.order() == 4)
            rot2 = el.p.then(el.p); // rotation by two steps
    REQUIRE(rot2.size() == aut_domain_size(g));
    auto orbits = classify_edge_orbits(g, {rot2});
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].edges.size() == 2);
    CHECK(orbits[0].equivalence == orbits[1].equivalence);
}

TEST_CASE("independent shuffle orbits are not equivariant")
{
    multigraph g = path(1);
    g.add_pendant(0, 1);
    g.add_pendant(0, 1);
    g.add_pendant(0, 2);
    g.add_pendant(0, 2);
    auto orbits = classify_edge_orbits(g, shuffle_generators(g));
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].equivalence != orbits[1].equivalence);
}

TEST_CASE("fix expressions of simple classes")
{
    reduction_series s = reduce(star(3));
    auto fx = fix_expressions(s);
    REQUIRE(fx.size() == 1);
    CHECK(print(fx[0]) == "S(3)");

    s = reduce(path(5));
    fx = fix_expressions(s);
    REQUIRE(fx.size() == 3);
    CHECK(fx[0]->kind == gx_kind::trivial);
    CHECK(fx[1]->kind == gx_kind::trivial);
    CHECK(print(fx[2]) == "S(2)");
}

TEST_CASE("platonic analyses")
{
    CHECK(print(analyze(tetrahedron()).expr) == "S(4)");
    CHECK(print(analyze(cube()).expr) == "xC2(S(4))");
    CHECK(print(analyze(octahedron()).expr) == "xC2(S(4))");
    CHECK(print(analyze(dodecahedron()).expr) == "xC2(A(5))");
    CHECK(print(analyze(icosahedron()).expr) == "xC2(A(5))");
    CHECK(analyze(cube()).aut_order() == 48);
    CHECK(analyze(dodecahedron()).aut_order() == 120);
}

TEST_CASE("tree analyses use only tree-shaped expressions")
{
    // double star: two adjacent centers with three leaves each
    multigraph dbl = path(2);
    for (vertex_t v : {0, 0, 0, 1, 1, 1})
        dbl.add_pendant(v, 1);

    for (const multigraph &g : {path(2), path(4), path(5), star(3), star(5), dbl}) {
        analysis_report r = analyze(g);
        CHECK(tree_shape_only(r.expr));
        check_full(g);
    }
    CHECK(print(analyze(dbl).expr) == "wr(S(3),S(2))");
    CHECK(analyze(dbl).aut_order() == 72);
    CHECK(print(analyze(path(4)).expr) == "S(2)");
}

TEST_CASE("decorated cycle gives the classic semidirect tower")
{
    // C_8 with a two-leaf cherry hanging from every rim vertex
    multigraph g = cycle(8);
    for (vertex_t v = 0; v < 8; ++v) {
        vertex_t w = g.nv;
        g.nv += 1;
        g.inc.resize(g.nv);
        g.vcolor.resize(g.nv, 0);
        g.add_edge(v, w);
        g.add_pendant(w, 7);
        g.add_pendant(w, 7);
    }
    analysis_report r = analyze(g);
    CHECK(r.aut_order() == (u128)4096); // 2^8 * 16
    CHECK(r.expr->kind == gx_kind::semidirect);
    CHECK(print(r.expr->children[1]) == "D(8)");
    CHECK(group_order(r.generators, aut_domain_size(r.graph)) == (u128)4096);
    for (const perm &p : r.generators)
        CHECK(is_automorphism(r.graph, p));

    // the halved variant is small enough for the oracle
    multigraph h = cycle(4);
    for (vertex_t v = 0; v < 4; ++v) {
        vertex_t w = h.nv;
        h.nv += 1;
        h.inc.resize(h.nv);
        h.vcolor.resize(h.nv, 0);
        h.add_edge(v, w);
        h.add_pendant(w, 7);
        h.add_pendant(w, 7);
    }
    check_full(h);
    CHECK(analyze(h).aut_order() == (u128)128); // 2^4 * 8
}

TEST_CASE("theta graph and directed variant")
{
    multigraph g = from_pairs(5, {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}});
    analysis_report r = analyze(g);
    CHECK(r.aut_order() == 12);
    CHECK(print(r.expr) == "prod(S(3),S(2))");
    check_full(g);

    multigraph d;
    d.nv = 5;
    d.inc.resize(5);
    d.vcolor.assign(5, 0);
    d.add_edge(0, 2, 7, edge_kind::directed, 0);
    d.add_edge(2, 1, 0);
    d.add_edge(0, 3, 7, edge_kind::directed, 0);
    d.add_edge(3, 1, 0);
    d.add_edge(0, 4, 0);
    d.add_edge(4, 1, 0);
    CHECK(analyze(d).aut_order() == 2);
    check_full(d);
}

TEST_CASE("disconnected graphs compose by wreath classes")
{
    multigraph two_k2 = from_pairs(4, {{0, 1}, {2, 3}});
    analysis_report r = analyze(two_k2);
    CHECK(!r.connected);
    CHECK(print(r.expr) == "wr(S(2),S(2))");
    CHECK(r.aut_order() == 8);
    check_full(two_k2);

    multigraph mixed = from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    r = analyze(mixed);
    CHECK(r.aut_order() == 12);
    check_full(mixed);

    multigraph three_k1;
    three_k1.nv = 3;
    three_k1.inc.resize(3);
    three_k1.vcolor.assign(3, 0);
    r = analyze(three_k1);
    CHECK(print(r.expr) == "S(3)");
    check_full(three_k1);
}

TEST_CASE("wheel and prism analyses match the oracle")
{
    for (const multigraph &g : {wheel(4), wheel(5), wheel(6), prism(3), prism(5),
                                prism(6), complete(4), banana(3), banana(4)})
        check_full(g);
    CHECK(print(analyze(prism(5)).expr) == "xC2(D(5))");
    CHECK(print(analyze(wheel(5)).expr) == "D(5)");
}

TEST_CASE("vertex colors break symmetry through normalization")
{
    multigraph g = cycle(6);
    g.vcolor[0] = 5;
    analysis_report r = analyze(g);
    CHECK(r.aut_order() == 2);
    check_full(g);
}

TEST_CASE("kernel law holds for the expression orders")
{
    multigraph g = path(7);
    g.add_pendant(2, 5);
    g.add_pendant(4, 5);
    analysis_report r = analyze(g);
    const reduction_series &s = r.series;
    // order at level i = order at level i+1 times the kernel size
    u128 acc = brute_force_aut_count(s.primitive(), 12);
    for (size_t i = s.levels.size() - 1; i-- > 0;) {
        for (int cls : s.levels[i].atom_cls)
            acc *= s.classes[cls].fix_local;
    }
    CHECK(acc == r.aut_order());
}

TEST_CASE("random planar graphs: expression, generators, oracle agree")
{
    std::mt19937 rng(7211);
    int tested = 0;
    while (tested < 80) {
        int n = 2 + (int)(rng() % 6);
        multigraph g;
        g.nv = n;
        g.inc.resize(n);
        g.vcolor.assign(n, 0);
        for (vertex_t v = 1; v < n; ++v)
            if (rng() % 8) // occasionally leave the graph disconnected
                g.add_edge((vertex_t)(rng() % v), v);
        int extra = (int)(rng() % 4);
        for (int i = 0; i < extra; ++i) {
            vertex_t u = (vertex_t)(rng() % n), v = (vertex_t)(rng() % n);
            if (u == v)
                continue;
            g.add_edge(u, v, rng() % 2);
        }
        for (int i = 0; i < (int)(rng() % 3); ++i)
            g.add_pendant((vertex_t)(rng() % n), 1 + rng() % 2);
        if (!is_planar(g))
            continue;
        ++tested;
        check_full(g);
    }
}

TEST_CASE("random trees stay within the tree closure")
{
    std::mt19937 rng(424242);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + (int)(rng() % 17);
        multigraph g;
        g.nv = n;
        g.inc.resize(n);
        g.vcolor.assign(n, 0);
        for (vertex_t v = 1; v < n; ++v)
            g.add_edge((vertex_t)(rng() % v), v);
        analysis_report r = analyze(g);
        CHECK(tree_shape_only(r.expr));
        if (n <= 9) {
            CHECK(r.aut_order() == brute_force_aut_count(g, 12));
            CHECK(group_order(r.generators, aut_domain_size(g)) == r.aut_order());
        }
    }
}
