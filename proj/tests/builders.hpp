#pragma once

// shared constructors for well-known test graphs

#include "pga/graph.hpp"

namespace pga {
namespace builders {

inline multigraph from_pairs(int nv, const std::vector<std::pair<int, int>> &es)
{
    multigraph g;
    g.nv = nv;
    g.inc.resize(nv);
    g.vcolor.assign(nv, 0);
    for (auto [u, v] : es)
        g.add_edge(u, v);
    g.check();
    return g;
}

inline multigraph path(int n)
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i)
        es.push_back({i, i + 1});
    return from_pairs(n, es);
}

inline multigraph cycle(int n)
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        es.push_back({i, (i + 1) % n});
    return from_pairs(n, es);
}

inline multigraph complete(int n)
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.push_back({i, j});
    return from_pairs(n, es);
}

// 2 vertices joined by k parallel edges
inline multigraph banana(int k)
{
    std::vector<std::pair<int, int>> es(k, {0, 1});
    return from_pairs(2, es);
}

inline multigraph star(int k) // K_1 with k pendant edges
{
    multigraph g;
    g.nv = 1;
    g.inc.resize(1);
    g.vcolor.assign(1, 0);
    for (int i = 0; i < k; ++i)
        g.add_pendant(0, 1);
    return g;
}

inline multigraph tetrahedron() { return complete(4); }

inline multigraph cube()
{
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b)))
                es.push_back({v, v ^ (1 << b)});
    return from_pairs(8, es);
}

inline multigraph octahedron()
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(i / 2 == j / 2)) // (0,1),(2,3),(4,5) are antipodal pairs
                es.push_back({i, j});
    return from_pairs(6, es);
}

inline multigraph dodecahedron()
{
    // LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2
    static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 20; ++i)
        es.push_back({i, (i + 1) % 20});
    for (int i = 0; i < 20; ++i) {
        int j = ((i + lcf[i % 10]) % 20 + 20) % 20;
        if (i < j)
            es.push_back({i, j});
    }
    return from_pairs(20, es);
}

inline multigraph icosahedron()
{
    // pentagonal antiprism 1..10 plus two apexes 0 and 11
    std::vector<std::pair<int, int>> es;
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

inline multigraph prism(int n) // two n-cycles joined by a perfect matching
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        es.push_back({i, (i + 1) % n});
        es.push_back({n + i, n + (i + 1) % n});
        es.push_back({i, n + i});
    }
    return from_pairs(2 * n, es);
}

inline multigraph wheel(int n) // n-cycle plus a hub
{
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        es.push_back({i, (i + 1) % n});
        es.push_back({i, n});
    }
    return from_pairs(n + 1, es);
}

} // namespace builders
} // namespace pga
