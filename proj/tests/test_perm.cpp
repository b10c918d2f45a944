#include "pga/perm.hpp"

#include "pga/graph.hpp" // error types

#include <doctest.h>

using namespace pga;

namespace {

perm cycle_perm(int n) // (0 1 2 ... n-1)
{
    perm p(n);
    for (int i = 0; i < n; ++i)
        p.img[i] = (i + 1) % n;
    return p;
}

perm transposition(int n, int a, int b)
{
    perm p(n);
    std::swap(p.img[a], p.img[b]);
    return p;
}

} // namespace

TEST_CASE("perm basics")
{
    perm p = cycle_perm(5);
    CHECK(p.valid());
    CHECK(p.order() == 5);
    CHECK(p.then(p.inverse()).is_identity());
    CHECK(p.inverse()(0) == 4);
    perm t = transposition(5, 0, 1);
    CHECK(t.then(p)(0) == 2); // apply t first
    CHECK(p.then(t)(0) == 0); // p sends 0 to 1, t sends 1 back to 0
}

TEST_CASE("group order via stabilizer chain")
{
    // S_6 from a transposition and a 6-cycle
    CHECK(group_order({cycle_perm(6), transposition(6, 0, 1)}, 6) == 720);
    // A_5 from two even permutations
    perm three(5);
    three.img = {1, 2, 0, 3, 4};
    perm five = cycle_perm(5);
    CHECK(group_order({three, five}, 5) == 60);
    // dihedral: rotation + reflection of a pentagon
    perm refl(5);
    for (int i = 0; i < 5; ++i)
        refl.img[i] = (5 - i) % 5;
    CHECK(group_order({cycle_perm(5), refl}, 5) == 10);
    CHECK(group_order({}, 4) == 1);
}

TEST_CASE("membership")
{
    auto chain = build_chain({cycle_perm(4)}, 4);
    CHECK(chain.order() == 4);
    perm sq = cycle_perm(4).then(cycle_perm(4));
    CHECK(chain.is_member(sq));
    CHECK_FALSE(chain.is_member(transposition(4, 0, 1)));
    CHECK(chain.is_member(perm(4)));
}

TEST_CASE("close_group enumerates small groups")
{
    auto s4 = close_group({cycle_perm(4), transposition(4, 0, 1)}, 4);
    CHECK(s4.size() == 24);
    CHECK_THROWS_AS(close_group({cycle_perm(8), transposition(8, 0, 1)}, 8, 100),
                    too_large);
}

TEST_CASE("u128 printing")
{
    CHECK(u128_str(0) == "0");
    CHECK(u128_str(12345) == "12345");
    u128 big = 1;
    for (int i = 0; i < 25; ++i)
        big *= 10;
    CHECK(u128_str(big) == "1" + std::string(25, '0'));
}
