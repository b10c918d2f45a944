#include "pga/perm.hpp"

#include "pga/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace pga {

std::string u128_str(u128 x)
{
    if (x == 0)
        return "0";
    std::string s;
    while (x > 0) {
        s.push_back(char('0' + (int)(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

bool perm::valid() const
{
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
        if (v < 0 || v >= (int)img.size() || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

int perm::order() const
{
    std::vector<char> done(img.size(), 0);
    long long ord = 1;
    for (int i = 0; i < size(); ++i) {
        if (done[i])
            continue;
        int len = 0, j = i;
        do {
            done[j] = 1;
            j = img[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, (long long)len);
    }
    return (int)ord;
}

namespace {

void extend_orbit(stabilizer_chain::level &lv, int n)
{
    // rebuild orbit/transversal of lv.base_point under lv.gens
    lv.orbit.assign(1, lv.base_point);
    lv.transversal.assign(1, perm(n));
    lv.where.assign(n, -1);
    lv.where[lv.base_point] = 0;
    for (size_t i = 0; i < lv.orbit.size(); ++i) {
        for (const perm &g : lv.gens) {
            int img = g(lv.orbit[i]);
            if (lv.where[img] < 0) {
                lv.where[img] = (int)lv.orbit.size();
                lv.orbit.push_back(img);
                lv.transversal.push_back(lv.transversal[i].then(g));
            }
        }
    }
}

// sift p through the chain starting at level k; returns residue
perm sift_from(const stabilizer_chain &c, size_t k, perm p, bool *ok)
{
    *ok = true;
    for (size_t i = k; i < c.levels.size(); ++i) {
        const auto &lv = c.levels[i];
        int img = p(lv.base_point);
        if (lv.where[img] < 0) {
            *ok = false;
            return p;
        }
        p = p.then(lv.transversal[lv.where[img]].inverse());
    }
    if (!p.is_identity())
        *ok = false;
    return p;
}

} // namespace

u128 stabilizer_chain::order() const
{
    u128 o = 1;
    for (const auto &lv : levels) {
        u128 prev = o;
        o *= (u128)lv.orbit.size();
        assert(o >= prev);
    }
    return o;
}

bool stabilizer_chain::is_member(const perm &p) const
{
    if ((int)p.img.size() != n)
        return false;
    bool ok;
    sift_from(*this, 0, p, &ok);
    return ok;
}

stabilizer_chain build_chain(const std::vector<perm> &generators, int n)
{
    stabilizer_chain c;
    c.n = n;

    // deterministic incremental Schreier-Sims; invariant: level i holds every
    // known generator fixing the bases of levels < i, so <gens[i]> is the
    // chain's i-th stabilizer subgroup
    struct builder {
        stabilizer_chain &c;
        int n;

        void add_generator(size_t k, const perm &g) // g fixes bases of levels < k
        {
            bool ok;
            sift_from(c, k, g, &ok);
            if (ok)
                return;
            // g belongs to levels k .. j, where base_j is the first base it moves
            size_t j = k;
            while (j < c.levels.size() &&
                   g(c.levels[j].base_point) == c.levels[j].base_point)
                ++j;
            if (j == c.levels.size()) {
                int b = -1;
                for (int i = 0; i < n; ++i)
                    if (g(i) != i) {
                        b = i;
                        break;
                    }
                assert(b >= 0);
                c.levels.push_back({});
                c.levels.back().base_point = b;
                extend_orbit(c.levels.back(), n);
            }
            for (size_t i = k; i <= j; ++i)
                c.levels[i].gens.push_back(g);
            for (size_t i = j + 1; i-- > k;)
                close_level(i);
        }

        // rebuild the orbit and verify every Schreier generator one level down;
        // recursion may grow c.levels, so never hold a reference across it
        void close_level(size_t lvl)
        {
            extend_orbit(c.levels[lvl], n);
            for (size_t i = 0; i < c.levels[lvl].orbit.size(); ++i) {
                for (size_t gi = 0; gi < c.levels[lvl].gens.size(); ++gi) {
                    perm schreier =
                        c.levels[lvl].transversal[i].then(c.levels[lvl].gens[gi]);
                    int img = schreier(c.levels[lvl].base_point);
                    int w = c.levels[lvl].where[img];
                    schreier = schreier.then(c.levels[lvl].transversal[w].inverse());
                    if (!schreier.is_identity())
                        add_generator(lvl + 1, schreier);
                }
            }
        }
    } b{c, n};

    for (const perm &g : generators) {
        assert((int)g.img.size() == n && g.valid());
        if (!g.is_identity())
            b.add_generator(0, g);
    }
    return c;
}

u128 group_order(const std::vector<perm> &generators, int n)
{
    return build_chain(generators, n).order();
}

std::vector<perm> close_group(const std::vector<perm> &generators, int n, size_t cap)
{
    std::set<perm> seen;
    seen.insert(perm(n));
    std::vector<perm> queue{perm(n)};
    for (size_t i = 0; i < queue.size(); ++i) {
        for (const perm &g : generators) {
            perm q = queue[i].then(g);
            if (seen.insert(q).second) {
                if (seen.size() > cap)
                    throw too_large("group closure exceeds cap");
                queue.push_back(q);
            }
        }
    }
    return queue;
}

} // namespace pga
