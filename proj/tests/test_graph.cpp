#include "pga/graph.hpp"

#include "builders.hpp"

#include <doctest.h>

using namespace pga;

TEST_CASE("half packing invariants")
{
    multigraph g = builders::banana(2);
    CHECK(multigraph::half(1, 0) == 2);
    CHECK(multigraph::twin(2) == 3);
    CHECK(multigraph::edge_of(3) == 1);
    CHECK(g.endpoint(0) == 0);
    CHECK(g.endpoint(1) == 1);
    CHECK(g.nh() == 4);
}

TEST_CASE("loops are rejected")
{
    multigraph g;
    g.nv = 1;
    g.inc.resize(1);
    g.vcolor.assign(1, 0);
    CHECK_THROWS_AS(g.add_edge(0, 0), loop_rejected);
    CHECK_THROWS_AS(build_graph({{3, 3, 0}}), loop_rejected);
}

TEST_CASE("build_graph remaps sparse ids densely")
{
    multigraph g = build_graph({{10, 50, 0}, {50, 99, 7}});
    CHECK(g.nv == 3);
    CHECK(g.ne() == 2);
    CHECK(g.edges[1].color == 7);
}

TEST_CASE("pendant edges and degrees")
{
    multigraph g = builders::path(3);
    g.add_pendant(1, 5);
    CHECK(g.degree(1) == 3);
    CHECK(g.real_degree(1) == 2);
    CHECK(g.is_pendant(2));
    CHECK(g.is_free(g.free_half(2)));
    g.check();
}

TEST_CASE("vertex colors normalize to reserved pendants")
{
    multigraph g = build_graph({{0, 1, 0}}, {{1, 3}});
    CHECK(g.vcolor[1] == 3);
    multigraph n = normalize_vertex_colors(g);
    CHECK(n.vcolor[1] == 0);
    CHECK(n.ne() == 2);
    CHECK(n.is_pendant(1));
    CHECK(n.edges[1].color == (reserved_color_bit | 3));
}

TEST_CASE("edge list parse / serialize round trip")
{
    std::string text = "c a comment\np graph 4 3\ne 0 1\ne 1 2 9\ne 2 3\nn 3 2\n";
    multigraph g = parse_edge_list(text);
    CHECK(g.nv == 4);
    CHECK(g.ne() == 3);
    CHECK(g.edges[1].color == 9);
    CHECK(g.vcolor[3] == 2);
    multigraph h = parse_edge_list(serialize_edge_list(g));
    CHECK(h.nv == g.nv);
    CHECK(h.ne() == g.ne());
    CHECK(h.vcolor == g.vcolor);
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK_THROWS_WITH_AS(parse_edge_list("p graph 2 1\nz 0 1\n"),
                         doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("e 0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("p graph 2 2\ne 0 1\n"), parse_error);
}

TEST_CASE("isolated vertices from the problem line")
{
    multigraph g = parse_edge_list("p graph 5 1\ne 0 1\n");
    CHECK(g.nv == 5);
    auto comps = connected_components(g);
    CHECK(comps.size() == 4);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(builders::cycle(5)));
}
