#include "pga/group_expr.hpp"

#include "pga/graph.hpp"

#include <cassert>
#include <sstream>

namespace pga {

namespace {

gx node(gx_kind k, int n = 0, std::vector<gx> children = {}, action_descriptor act = {})
{
    auto p = std::make_shared<group_expr>();
    p->kind = k;
    p->n = n;
    p->children = std::move(children);
    p->action = std::move(act);
    return p;
}

} // namespace

bool operator==(const group_expr &a, const group_expr &b)
{
    if (a.kind != b.kind || a.n != b.n || a.children.size() != b.children.size())
        return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!(*a.children[i] == *b.children[i]))
            return false;
    if (a.kind == gx_kind::semidirect) {
        if (a.action.gens.size() != b.action.gens.size())
            return false;
        for (size_t i = 0; i < a.action.gens.size(); ++i)
            if (a.action.gens[i].coord_img != b.action.gens[i].coord_img ||
                a.action.gens[i].twist != b.action.gens[i].twist)
                return false;
    }
    return true;
}

gx gx_trivial() { return node(gx_kind::trivial); }

gx gx_cyc(int n)
{
    assert(n >= 1);
    if (n == 1)
        return gx_trivial();
    return node(gx_kind::cyc, n);
}

gx gx_dih(int n, bool split_dih2)
{
    assert(n >= 1);
    if (n == 1)
        return gx_cyc(2);
    if (n == 2 && split_dih2)
        return gx_direct({gx_cyc(2), gx_cyc(2)});
    return node(gx_kind::dih, n);
}

gx gx_sym(int n)
{
    assert(n >= 1);
    if (n == 1)
        return gx_trivial();
    return node(gx_kind::sym, n);
}

gx gx_alt(int n)
{
    assert(n == 4 || n == 5);
    return node(gx_kind::alt, n);
}

gx gx_xc2(gx base)
{
    return node(gx_kind::xc2, 0, {std::move(base)});
}

gx gx_direct(std::vector<gx> factors)
{
    std::vector<gx> flat;
    for (auto &f : factors) {
        if (f->kind == gx_kind::trivial)
            continue;
        if (f->kind == gx_kind::direct)
            flat.insert(flat.end(), f->children.begin(), f->children.end());
        else
            flat.push_back(f);
    }
    if (flat.empty())
        return gx_trivial();
    if (flat.size() == 1)
        return flat[0];
    return node(gx_kind::direct, 0, std::move(flat));
}

gx gx_pow(gx base, int k)
{
    assert(k >= 1);
    if (base->kind == gx_kind::trivial || k == 1)
        return k == 1 ? base : gx_trivial();
    if (base->kind == gx_kind::pow)
        return node(gx_kind::pow, base->n * k, {base->children[0]});
    return node(gx_kind::pow, k, {std::move(base)});
}

gx gx_wreath(gx base, gx top)
{
    assert(top->kind == gx_kind::sym || top->kind == gx_kind::cyc);
    if (base->kind == gx_kind::trivial)
        return top;
    return node(gx_kind::wreath, 0, {std::move(base), std::move(top)});
}

gx gx_semidirect(gx normal, gx top, action_descriptor action)
{
    if (normal->kind == gx_kind::trivial)
        return top;
    if (top->kind == gx_kind::trivial)
        return normal;
    if (action.trivial())
        return gx_direct({normal, top});
    return node(gx_kind::semidirect, 0, {std::move(normal), std::move(top)},
                std::move(action));
}

u128 order(const gx &e)
{
    switch (e->kind) {
    case gx_kind::trivial: return 1;
    case gx_kind::cyc: return (u128)e->n;
    case gx_kind::dih: return (u128)(2 * e->n);
    case gx_kind::sym: {
        u128 o = 1;
        for (int i = 2; i <= e->n; ++i)
            o *= (u128)i;
        return o;
    }
    case gx_kind::alt: return e->n == 4 ? 12 : 60;
    case gx_kind::xc2: return 2 * order(e->children[0]);
    case gx_kind::direct: {
        u128 o = 1;
        for (const gx &c : e->children) {
            u128 prev = o;
            o *= order(c);
            assert(order(c) == 0 || o / order(c) == prev);
        }
        return o;
    }
    case gx_kind::pow: {
        u128 o = 1, b = order(e->children[0]);
        for (int i = 0; i < e->n; ++i) {
            u128 prev = o;
            o *= b;
            assert(b == 0 || o / b == prev);
        }
        return o;
    }
    case gx_kind::wreath: {
        const gx &top = e->children[1];
        int m = top->n;
        u128 o = order(top), b = order(e->children[0]);
        for (int i = 0; i < m; ++i)
            o *= b;
        return o;
    }
    case gx_kind::semidirect:
        return order(e->children[0]) * order(e->children[1]);
    }
    return 1;
}

namespace {

void print_rec(const gx &e, std::ostream &os)
{
    switch (e->kind) {
    case gx_kind::trivial: os << "1"; break;
    case gx_kind::cyc: os << "C(" << e->n << ")"; break;
    case gx_kind::dih: os << "D(" << e->n << ")"; break;
    case gx_kind::sym: os << "S(" << e->n << ")"; break;
    case gx_kind::alt: os << "A(" << e->n << ")"; break;
    case gx_kind::xc2:
        os << "xC2(";
        print_rec(e->children[0], os);
        os << ")";
        break;
    case gx_kind::direct:
        os << "prod(";
        for (size_t i = 0; i < e->children.size(); ++i) {
            if (i)
                os << ",";
            print_rec(e->children[i], os);
        }
        os << ")";
        break;
    case gx_kind::pow:
        os << "pow(";
        print_rec(e->children[0], os);
        os << "," << e->n << ")";
        break;
    case gx_kind::wreath:
        os << "wr(";
        print_rec(e->children[0], os);
        os << ",";
        print_rec(e->children[1], os);
        os << ")";
        break;
    case gx_kind::semidirect:
        os << "sd(";
        print_rec(e->children[0], os);
        os << ",";
        print_rec(e->children[1], os);
        if (!e->action.gens.empty()) {
            os << ",act(";
            for (size_t gi = 0; gi < e->action.gens.size(); ++gi) {
                if (gi)
                    os << ",";
                os << "[";
                const auto &ga = e->action.gens[gi];
                for (size_t i = 0; i < ga.coord_img.size(); ++i) {
                    if (i)
                        os << " ";
                    os << ga.coord_img[i];
                }
                os << "|";
                for (char t : ga.twist)
                    os << (t ? '1' : '0');
                os << "]";
            }
            os << ")";
        }
        os << ")";
        break;
    }
}

struct parser {
    const std::string &s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &what)
    {
        throw parse_error("group expression, position " + std::to_string(pos) + ": " + what);
    }
    void skip_ws()
    {
        while (pos < s.size() && isspace((unsigned char)s[pos]))
            ++pos;
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int number()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos]))
            ++pos;
        if (pos == start)
            fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    }
    std::string word()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos])))
            ++pos;
        return s.substr(start, pos - start);
    }

    action_descriptor parse_action()
    {
        action_descriptor act;
        expect('(');
        while (true) {
            expect('[');
            action_descriptor::gen_action ga;
            while (peek() != '|')
                ga.coord_img.push_back(number());
            expect('|');
            while (peek() == '0' || peek() == '1') {
                ga.twist.push_back(s[pos] == '1');
                ++pos;
            }
            expect(']');
            if (ga.twist.size() != ga.coord_img.size())
                fail("twist bits do not match coordinate count");
            act.gens.push_back(std::move(ga));
            if (!accept(','))
                break;
        }
        expect(')');
        return act;
    }

    gx expr()
    {
        skip_ws();
        if (accept('1'))
            return gx_trivial();
        std::string w = word();
        if (w == "C" || w == "D" || w == "S" || w == "A") {
            expect('(');
            int n = number();
            expect(')');
            if (w == "C")
                return gx_cyc(n);
            if (w == "D")
                return gx_dih(n);
            if (w == "S")
                return gx_sym(n);
            if (n != 4 && n != 5)
                fail("A(n) requires n in {4,5}");
            return gx_alt(n);
        }
        if (w == "xC2") {
            expect('(');
            gx base = expr();
            expect(')');
            return gx_xc2(base);
        }
        if (w == "prod") {
            expect('(');
            std::vector<gx> fs;
            if (peek() != ')') {
                fs.push_back(expr());
                while (accept(','))
                    fs.push_back(expr());
            }
            expect(')');
            return gx_direct(std::move(fs));
        }
        if (w == "pow") {
            expect('(');
            gx base = expr();
            expect(',');
            int k = number();
            expect(')');
            return gx_pow(base, k);
        }
        if (w == "wr") {
            expect('(');
            gx base = expr();
            expect(',');
            gx top = expr();
            expect(')');
            if (top->kind != gx_kind::sym && top->kind != gx_kind::cyc)
                fail("wr top must be S(n) or C(n)");
            return gx_wreath(base, top);
        }
        if (w == "sd") {
            expect('(');
            gx normal = expr();
            expect(',');
            gx top = expr();
            action_descriptor act;
            if (accept(',')) {
                std::string aw = word();
                if (aw != "act")
                    fail("expected act(...)");
                act = parse_action();
            }
            expect(')');
            if (act.gens.empty()) // action omitted: keep the node as written
                return node(gx_kind::semidirect, 0, {normal, top});
            return gx_semidirect(normal, top, std::move(act));
        }
        fail("unknown token '" + w + "'");
    }
};

} // namespace

std::string print(const gx &e)
{
    std::ostringstream os;
    print_rec(e, os);
    return os.str();
}

gx parse(const std::string &text)
{
    parser p{text};
    gx e = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return e;
}

bool expr_isomorphic_order(const gx &lhs, const gx &rhs)
{
    return order(lhs) == order(rhs);
}

bool tree_shape_only(const gx &e)
{
    switch (e->kind) {
    case gx_kind::trivial:
    case gx_kind::sym:
        return true;
    case gx_kind::direct:
    case gx_kind::pow:
        for (const gx &c : e->children)
            if (!tree_shape_only(c))
                return false;
        return true;
    case gx_kind::wreath:
        return e->children[1]->kind == gx_kind::sym && tree_shape_only(e->children[0]);
    default:
        return false;
    }
}

} // namespace pga
