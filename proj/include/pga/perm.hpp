#pragma once

// Permutations over a fixed dense domain (vertex ids ++ half-edge ids) and a
// deterministic Schreier-Sims stabilizer chain for order/membership queries.

#include <string>
#include <vector>

namespace pga {

typedef unsigned __int128 u128;
std::string u128_str(u128 x);

struct perm {
    std::vector<int> img;

    perm() = default;
    explicit perm(int n) : img(n) {
        for (int i = 0; i < n; ++i) img[i] = i;
    }
    int size() const { return (int)img.size(); }
    int operator()(int x) const { return img[x]; }
    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img[i] != i) return false;
        return true;
    }
    bool operator==(const perm &o) const { return img == o.img; }
    bool operator<(const perm &o) const { return img < o.img; }
    perm then(const perm &o) const { // apply *this first, then o
        perm r((int)img.size());
        for (int i = 0; i < size(); ++i) r.img[i] = o.img[img[i]];
        return r;
    }
    perm inverse() const {
        perm r((int)img.size());
        for (int i = 0; i < size(); ++i) r.img[img[i]] = i;
        return r;
    }
    bool valid() const;
    int order() const;
};

struct stabilizer_chain {
    struct level {
        int base_point;
        std::vector<perm> gens;
        std::vector<int> orbit;          // points in discovery order
        std::vector<perm> transversal;   // transversal[i] maps base -> orbit[i]
        std::vector<int> where;          // point -> index in orbit, or -1
    };
    int n = 0;
    std::vector<level> levels;

    u128 order() const;
    bool is_member(const perm &p) const;
};

stabilizer_chain build_chain(const std::vector<perm> &generators, int n);
u128 group_order(const std::vector<perm> &generators, int n);

// element list of a small group by closure; throws too_large past cap
std::vector<perm> close_group(const std::vector<perm> &generators, int n,
                              size_t cap = 1u << 20);

} // namespace pga
