#include "pga/embedding.hpp"

#include "builders.hpp"

#include <doctest.h>

using namespace pga;

namespace {

int core_edges(const multigraph &g)
{
    int n = 0;
    for (edge_ix e = 0; e < g.ne(); ++e)
        if (!g.is_pendant(e))
            ++n;
    return n;
}

void check_euler(const multigraph &g)
{
    planar_map m = embed(g);
    CHECK(m.g.nv - core_edges(g) + m.face_count() == 2);
}

} // namespace

TEST_CASE("planarity testing")
{
    CHECK(is_planar(builders::complete(4)));
    CHECK_FALSE(is_planar(builders::complete(5)));
    CHECK(is_planar(builders::cube()));
    CHECK(is_planar(builders::banana(5)));
    CHECK(is_planar(builders::dodecahedron()));
    CHECK(is_planar(builders::icosahedron()));
    // K_3,3
    multigraph k33 = build_graph({{0, 3, 0}, {0, 4, 0}, {0, 5, 0},
                                  {1, 3, 0}, {1, 4, 0}, {1, 5, 0},
                                  {2, 3, 0}, {2, 4, 0}, {2, 5, 0}});
    CHECK_FALSE(is_planar(k33));
    CHECK_THROWS_AS(embed(k33), not_planar);
}

TEST_CASE("rotation systems satisfy the Euler formula")
{
    check_euler(builders::complete(4));
    check_euler(builders::cube());
    check_euler(builders::octahedron());
    check_euler(builders::dodecahedron());
    check_euler(builders::icosahedron());
    check_euler(builders::cycle(7));
    check_euler(builders::banana(2));
    check_euler(builders::banana(5));
    check_euler(builders::wheel(6));
    // theta graph: two vertices, three internally disjoint paths collapse to
    // a banana here; a subdivided version exercises mixed degrees
    multigraph theta = build_graph({{0, 2, 0}, {2, 1, 0}, {0, 3, 0},
                                    {3, 1, 0}, {0, 4, 0}, {4, 1, 0}});
    check_euler(theta);
}

TEST_CASE("pendants stay out of the rotation")
{
    multigraph g = builders::complete(4);
    g.add_pendant(2, 3);
    planar_map m = embed(g);
    CHECK(m.pendants[2].size() == 1);
    for (vertex_t v = 0; v < g.nv; ++v)
        CHECK(m.rot[v].size() == 3);
    CHECK(m.face_count() == 4);
}

TEST_CASE("angle involutions")
{
    for (const multigraph &g :
         {builders::complete(4), builders::banana(3), builders::cube(),
          builders::cycle(5), builders::wheel(5)}) {
        planar_map m = embed(g);
        auto angles = m.all_angles();
        CHECK(!angles.empty());
        for (const angle &a : angles) {
            CHECK(rho(m, rho(m, a)) == a);
            CHECK(lambda(m, lambda(m, a)) == a);
            if (m.rot[a.v].size() > 2)
                CHECK(tau(m, tau(m, a)) == a);
        }
    }
}

TEST_CASE("next and prev are inverse walks")
{
    planar_map m = embed(builders::octahedron());
    for (vertex_t v = 0; v < m.g.nv; ++v)
        for (half_t d : m.rot[v]) {
            CHECK(m.prev(m.next(d)) == d);
            CHECK(m.g.endpoint(m.next(d)) == v);
        }
}
