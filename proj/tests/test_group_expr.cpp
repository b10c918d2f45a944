#include "pga/group_expr.hpp"

#include "pga/graph.hpp" // error types

#include <doctest.h>

using namespace pga;

TEST_CASE("orders")
{
    CHECK(order(gx_trivial()) == 1);
    CHECK(order(gx_cyc(12)) == 12);
    CHECK(order(gx_dih(5)) == 10);
    CHECK(order(gx_sym(5)) == 120);
    CHECK(order(gx_alt(5)) == 60);
    CHECK(order(gx_xc2(gx_sym(4))) == 48);
    CHECK(order(gx_direct({gx_cyc(3), gx_cyc(4)})) == 12);
    CHECK(order(gx_pow(gx_cyc(2), 10)) == 1024);
    CHECK(order(gx_wreath(gx_cyc(2), gx_sym(3))) == 48);
    CHECK(order(gx_wreath(gx_sym(3), gx_cyc(4))) == 5184);
}

TEST_CASE("normalizations")
{
    CHECK(print(gx_cyc(1)) == "1");
    CHECK(print(gx_dih(1)) == "C(2)");
    CHECK(print(gx_dih(2, true)) == "prod(C(2),C(2))");
    CHECK(print(gx_dih(2)) == "D(2)");
    CHECK(print(gx_direct({})) == "1");
    CHECK(print(gx_direct({gx_trivial(), gx_cyc(3)})) == "C(3)");
    CHECK(print(gx_direct({gx_direct({gx_cyc(2), gx_cyc(3)}), gx_cyc(5)})) ==
          "prod(C(2),C(3),C(5))");
    CHECK(print(gx_pow(gx_cyc(3), 1)) == "C(3)");
    CHECK(print(gx_pow(gx_pow(gx_cyc(3), 2), 4)) == "pow(C(3),8)");
    CHECK(print(gx_wreath(gx_trivial(), gx_sym(4))) == "S(4)");
    CHECK(print(gx_semidirect(gx_cyc(3), gx_trivial(), {})) == "C(3)");
    CHECK(print(gx_semidirect(gx_trivial(), gx_sym(3), {})) == "S(3)");
    // a trivial action collapses to a direct product
    action_descriptor triv;
    triv.gens.push_back({{0, 1}, {0, 0}});
    CHECK(print(gx_semidirect(gx_pow(gx_cyc(2), 2), gx_cyc(2), triv)) ==
          "prod(pow(C(2),2),C(2))");
}

TEST_CASE("parse / print round trips")
{
    for (const char *text :
         {"1", "C(5)", "D(4)", "S(4)", "A(5)", "xC2(S(4))",
          "prod(C(2),C(3),C(5))", "pow(D(5),4)", "wr(C(3),S(4))",
          "wr(S(3),C(4))", "sd(prod(pow(D(5),4),pow(C(2),6)),S(4))",
          "sd(pow(C(3),2),C(2),act([1 0|11]))"}) {
        gx e = parse(text);
        CHECK(print(e) == text);
        CHECK(*parse(print(e)) == *e);
    }
    // whitespace tolerated, normalization applied
    CHECK(print(parse(" prod( C(3) , 1 ) ")) == "C(3)");
}

TEST_CASE("parse errors carry positions")
{
    CHECK_THROWS_AS(parse("C(x)"), parse_error);
    CHECK_THROWS_AS(parse("Q(3)"), parse_error);
    CHECK_THROWS_AS(parse("C(3))"), parse_error);
    CHECK_THROWS_AS(parse("wr(C(3),A(4))"), parse_error);
    CHECK_THROWS_AS(parse("A(6)"), parse_error);
    CHECK_THROWS_AS(parse("sd(C(3),C(2),act([0|00]))"), parse_error);
}

TEST_CASE("semidirect action semantics")
{
    action_descriptor swap2;
    swap2.gens.push_back({{1, 0}, {0, 0}});
    gx e = gx_semidirect(gx_pow(gx_cyc(5), 2), gx_cyc(2), swap2);
    CHECK(order(e) == 50);
    CHECK(e->kind == gx_kind::semidirect);
    CHECK_FALSE(e->action.trivial());
}

TEST_CASE("tree shape predicate")
{
    CHECK(tree_shape_only(gx_trivial()));
    CHECK(tree_shape_only(gx_sym(3)));
    CHECK(tree_shape_only(gx_wreath(gx_sym(2), gx_sym(3))));
    CHECK(tree_shape_only(gx_direct({gx_sym(2), gx_pow(gx_sym(3), 2)})));
    CHECK_FALSE(tree_shape_only(gx_cyc(3)));
    CHECK_FALSE(tree_shape_only(gx_wreath(gx_sym(2), gx_cyc(3))));
    CHECK_FALSE(tree_shape_only(gx_dih(4)));
}
