#include "pga/oracle.hpp"

#include "builders.hpp"

#include <doctest.h>

using namespace pga;

TEST_CASE("brute force counts on plain graphs")
{
    CHECK(brute_force_aut_count(builders::path(3)) == 2);
    CHECK(brute_force_aut_count(builders::cycle(5)) == 10);
    CHECK(brute_force_aut_count(builders::complete(4)) == 24);
    CHECK(brute_force_aut_count(builders::cycle(3)) == 6);
    CHECK(brute_force_aut_count(builders::path(1)) == 1);
}

TEST_CASE("brute force counts with parallel edges and pendants")
{
    // banana: 3! bundle shuffles times the end swap
    CHECK(brute_force_aut_count(builders::banana(3)) == 12);
    // star: pendants of one color shuffle freely
    CHECK(brute_force_aut_count(builders::star(3)) == 6);
    multigraph g = builders::path(2);
    g.add_pendant(0, 1);
    g.add_pendant(0, 1);
    g.add_pendant(1, 1);
    // swap blocked by pendant counts; the two pendants at 0 still swap
    CHECK(brute_force_aut_count(g) == 2);
    g.add_pendant(1, 1);
    CHECK(brute_force_aut_count(g) == 8); // 2 * 2 * swap
}

TEST_CASE("colors and directions restrict automorphisms")
{
    multigraph g = builders::cycle(4);
    g.edges[0].color = 5;
    CHECK(brute_force_aut_count(g) == 2); // only the reflection through edge 0
    multigraph d = builders::cycle(4);
    for (auto &e : d.edges)
        e.kind = edge_kind::directed; // consistently oriented 4-cycle
    CHECK(brute_force_aut_count(d) == 4); // rotations only
    multigraph vc = build_graph({{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}, {{0, 9}});
    CHECK(brute_force_aut_count(normalize_vertex_colors(vc)) == 2);
}

TEST_CASE("element list matches the count and the replay check")
{
    multigraph g = builders::banana(2);
    g.add_pendant(0, 7);
    auto elems = brute_force_aut(g);
    CHECK((u128)elems.size() == brute_force_aut_count(g));
    for (const perm &p : elems) {
        CHECK(p.valid());
        CHECK(is_automorphism(g, p));
    }
    // a wrong map fails the replay check
    perm bad(aut_domain_size(g));
    std::swap(bad.img[0], bad.img[1]);
    CHECK_FALSE(is_automorphism(g, bad));
}

TEST_CASE("isomorphism testing")
{
    CHECK(isomorphic(builders::cycle(4), builders::cycle(4)));
    CHECK_FALSE(isomorphic(builders::cycle(4), builders::path(4)));
    CHECK_FALSE(isomorphic(builders::cycle(4), builders::cycle(5)));
    multigraph a = builders::path(3), b = builders::path(3);
    a.edges[0].color = 1;
    b.edges[1].color = 1;
    CHECK(isomorphic(a, b));
    b.edges[1].color = 2;
    CHECK_FALSE(isomorphic(a, b));
    // relabeled cube
    multigraph c = builders::cube();
    multigraph r = build_graph({{7, 6, 0}, {5, 4, 0}, {3, 2, 0}, {1, 0, 0},
                                {7, 5, 0}, {6, 4, 0}, {3, 1, 0}, {2, 0, 0},
                                {7, 3, 0}, {6, 2, 0}, {5, 1, 0}, {4, 0, 0}});
    CHECK(isomorphic(c, r, 8));
}
