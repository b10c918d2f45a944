#include "doctest.h"

#include "pga/composer.hpp"
#include "pga/oracle.hpp"
#include "pga/realizer.hpp"

using namespace pga;

namespace {

// |Fix(root)|: marking the root with a unique color pins it under every
// automorphism
u128 fix_order(const rooted_graph &r)
{
    multigraph g = r.g;
    g.vcolor[r.root] = 99;
    return analyze(g).aut_order();
}

void check_realization(const std::string &expr_text)
{
    gx e = parse(expr_text);
    realize_context ctx;
    rooted_graph r = realize_fix(e, ctx);
    CHECK(fix_order(r) == order(e));
}

} // namespace

TEST_CASE("combs are rigid")
{
    for (int k = 3; k <= 6; ++k) {
        realize_context ctx;
        ctx.next_comb = k; // a trivial realization is a root plus one comb
        rooted_graph t = realize_fix(gx_trivial(), ctx);
        t.g.vcolor[t.root] = 99; // rigid relative to the attachment vertex
        multigraph g = normalize_vertex_colors(t.g);
        CHECK(brute_force_aut_count(g, 10) == 1);
    }
}

TEST_CASE("fix realizations match their expression orders")
{
    for (const char *s : {"1", "S(2)", "S(3)", "C(2)", "C(3)", "C(4)", "D(2)", "D(3)",
                          "D(4)", "prod(S(2),C(3))", "pow(S(2),2)", "wr(C(2),S(2))",
                          "wr(S(2),C(3))", "wr(S(3),S(2))"})
        check_realization(s);
}

TEST_CASE("semidirect shapes realize with the right orders")
{
    check_realization("sd(prod(pow(S(2),2),C(3)),C(2))");           // 4*3*2
    check_realization("sd(pow(C(2),2),C(2))");                      // 4*2
    check_realization("sd(prod(pow(C(2),6),pow(S(2),3)),D(3))");    // 64*8*6
    check_realization("sd(pow(S(2),4),D(4))");                      // 16*8
    check_realization("sd(prod(pow(C(2),4),pow(S(2),2),S(3)),D(2))"); // 16*4*6*4
}

TEST_CASE("shapes outside the grammar are rejected")
{
    realize_context ctx;
    CHECK_THROWS_AS(realize_fix(parse("A(4)"), ctx), unsupported_shape);
    CHECK_THROWS_AS(realize_fix(parse("xC2(S(4))"), ctx), unsupported_shape);
    CHECK_THROWS_AS(realize_fix(parse("sd(pow(S(2),3),C(2))"), ctx), unsupported_shape);
}

TEST_CASE("decorated seeds realize full automorphism groups")
{
    // trivial gadgets on a cycle: only the dihedral symmetry remains
    realization r = realize_aut(make_seed("cycle:5"), {gx_trivial()});
    CHECK(r.predicted == 10);
    CHECK(analyze(r.g).aut_order() == 10);

    r = realize_aut(make_seed("k2"), {gx_cyc(2)});
    CHECK(r.predicted == 4);
    CHECK(analyze(r.g).aut_order() == 4);

    // the two prism orbits get distinct rigid gadgets
    r = realize_aut(make_seed("prism:3"), {gx_trivial(), gx_trivial()});
    CHECK(r.predicted == 12);
    CHECK(analyze(r.g).aut_order() == 12);

    r = realize_aut(make_seed("wheel:5"), {gx_trivial(), gx_sym(2)});
    CHECK(analyze(r.g).aut_order() == r.predicted);

    r = realize_aut(make_seed("cube"), {gx_cyc(2)});
    CHECK(r.predicted == (u128)4096 * 48);
    CHECK(analyze(r.g).aut_order() == r.predicted);
}

TEST_CASE("seed orbit counts are enforced")
{
    CHECK_THROWS_AS(realize_aut(make_seed("prism:3"), {gx_trivial()}), orbit_count_mismatch);
    CHECK_THROWS_AS(make_seed("pyramid"), std::invalid_argument);
}
