#pragma once

// Group-expression trees: the analyzer's output vocabulary. Orders are exact
// (128-bit); abstract isomorphism testing is out of scope — verification goes
// through permutation groups.

#include "pga/perm.hpp"

#include <memory>
#include <string>
#include <vector>

namespace pga {

enum class gx_kind { trivial, cyc, dih, sym, alt, xc2, direct, pow, wreath, semidirect };

struct group_expr;
typedef std::shared_ptr<const group_expr> gx;

// for each generator of the top group: how it permutes the normal subgroup's
// factor coordinates, and which coordinates get the factor's boundary
// involution tau* applied
struct action_descriptor {
    struct gen_action {
        std::vector<int> coord_img;
        std::vector<char> twist;
    };
    std::vector<gen_action> gens;
    bool trivial() const
    {
        for (const auto &ga : gens) {
            for (size_t i = 0; i < ga.coord_img.size(); ++i)
                if (ga.coord_img[i] != (int)i || ga.twist[i])
                    return false;
        }
        return true;
    }
};

struct group_expr {
    gx_kind kind = gx_kind::trivial;
    int n = 0;                 // parameter of cyc/dih/sym/alt, exponent of pow
    std::vector<gx> children;  // direct factors; [base] for pow; [base, top]
                               // for wreath; [normal, top] for semidirect
    action_descriptor action;  // semidirect only
};

// smart constructors (normalizing: Dih(1) -> Cyc(2), empty prod -> 1, ...)
gx gx_trivial();
gx gx_cyc(int n);
gx gx_dih(int n, bool split_dih2 = false); // split: D(2) -> prod(C(2),C(2))
gx gx_sym(int n);
gx gx_alt(int n);
gx gx_xc2(gx base);
gx gx_direct(std::vector<gx> factors);
gx gx_pow(gx base, int k);
gx gx_wreath(gx base, gx top); // top must be Sym or Cyc
gx gx_semidirect(gx normal, gx top, action_descriptor action);

u128 order(const gx &e);
std::string print(const gx &e);
gx parse(const std::string &text); // throws parse_error with position

bool expr_isomorphic_order(const gx &lhs, const gx &rhs);

// thm about trees: closure under 1, direct products and wreath with Sym
bool tree_shape_only(const gx &e);

bool operator==(const group_expr &a, const group_expr &b);

} // namespace pga
