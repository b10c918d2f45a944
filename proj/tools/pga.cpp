// command-line surface: analyze / reduce / realize / oracle / verify / bench
//
// exit codes: 0 ok, 1 usage or input error, 2 non-planar input,
// 3 verification mismatch

#include "CLI11.hpp"
#include "json.hpp"

#include "pga/composer.hpp"
#include "pga/embedding.hpp"
#include "pga/map_aut.hpp"
#include "pga/oracle.hpp"
#include "pga/realizer.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace pga;

namespace {

std::string read_input(const std::string &path)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f)
            throw std::runtime_error("cannot open " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

std::string cycles(const perm &p)
{
    std::string s;
    std::vector<char> seen(p.size(), 0);
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i] || p(i) == i)
            continue;
        s += "(";
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            if (j != i)
                s += " ";
            s += std::to_string(j);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

const char *atom_kind_name(atom::kind_t k)
{
    switch (k) {
    case atom::star: return "star";
    case atom::block: return "block";
    case atom::proper: return "proper";
    case atom::dipole: return "dipole";
    }
    return "?";
}

const char *primitive_name(primitive_kind k)
{
    switch (k) {
    case primitive_kind::k1: return "K1";
    case primitive_kind::k2: return "K2";
    case primitive_kind::cycle: return "cycle";
    case primitive_kind::three_connected: return "3-connected";
    case primitive_kind::dipole: return "dipole";
    }
    return "?";
}

std::vector<perm> primitive_gens(const multigraph &p)
{
    if (p.nv > 2)
        return aut_map(p).generators();
    std::vector<perm> gens = shuffle_generators(p); // avoids factorial blowups
    if (p.nv == 2)
        if (auto sw = two_vertex_swap(p))
            gens.push_back(*sw);
    return gens;
}

json tree_json(const analysis_report &r)
{
    json t;
    if (!r.connected) {
        json comps = json::array();
        for (const auto &c : r.components)
            comps.push_back({{"vertices", c.graph.nv}, {"class", c.group}});
        t["components"] = comps;
        json cls = json::array();
        for (const gx &e : r.component_exprs)
            cls.push_back(print(e));
        t["component_groups"] = cls;
        return t;
    }
    const reduction_series &s = r.series;
    json levels = json::array();
    for (const auto &lvl : s.levels) {
        json atoms = json::array();
        for (size_t a = 0; a < lvl.atoms.size(); ++a)
            atoms.push_back({{"kind", atom_kind_name(lvl.atoms[a].kind)},
                             {"class", lvl.atom_cls[a]}});
        levels.push_back({{"vertices", lvl.graph.nv},
                          {"edges", (int)lvl.graph.ne()},
                          {"atoms", atoms}});
    }
    t["levels"] = levels;
    t["primitive"] = primitive_name(s.kind);
    json classes = json::array();
    for (size_t c = 0; c < s.classes.size(); ++c) {
        const atom_class &ac = s.classes[c];
        classes.push_back({{"kind", atom_kind_name(ac.rep.kind)},
                           {"level", ac.level},
                           {"symmetric", ac.symmetric},
                           {"fix_local", u128_str(ac.fix_local)},
                           {"fix_star", u128_str(ac.fix_star)},
                           {"fix", print(r.class_fix[c])}});
    }
    t["classes"] = classes;
    return t;
}

json orbits_json(const analysis_report &r)
{
    json out = json::array();
    if (!r.connected)
        return out;
    const multigraph &p = r.series.primitive();
    for (const auto &o : classify_edge_orbits(p, primitive_gens(p))) {
        json edges = json::array();
        for (edge_ix e : o.edges)
            edges.push_back((int)e);
        out.push_back({{"edges", edges},
                       {"reflected", o.reflected},
                       {"equivalence", o.equivalence}});
    }
    return out;
}

json report_json(const analysis_report &r)
{
    json gens = json::array();
    for (const perm &p : r.generators)
        gens.push_back(cycles(p));
    return {{"group", print(r.expr)},
            {"order", u128_str(r.aut_order())},
            {"generators", gens},
            {"tree", tree_json(r)},
            {"orbits", orbits_json(r)}};
}

// nested family: spine path with one leaf per spine vertex; peels from the
// spine ends, so the reduction depth grows linearly with n
multigraph caterpillar(int n)
{
    int spine = std::max(2, n / 2);
    multigraph g;
    g.nv = spine;
    g.inc.resize(spine);
    g.vcolor.assign(spine, 0);
    for (vertex_t v = 1; v < spine; ++v)
        g.add_edge(v - 1, v);
    for (vertex_t v = 0; v < spine && g.nv < n; ++v) {
        vertex_t leaf = g.nv;
        g.nv += 1;
        g.inc.emplace_back();
        g.vcolor.push_back(0);
        g.add_edge(v, leaf);
    }
    return g;
}

std::vector<int> parse_sizes(const std::string &spec)
{
    std::vector<int> out;
    if (auto dots = spec.find(".."); dots != std::string::npos) {
        int a = std::stoi(spec.substr(0, dots)), b = std::stoi(spec.substr(dots + 2));
        for (int n = a; n <= b; n *= 2)
            out.push_back(n);
        return out;
    }
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

int run(int argc, char **argv)
{
    CLI::App app{"automorphism groups of planar graphs"};
    app.require_subcommand(1);

    std::string path = "-", out_path, seed_name, family = "nested", sizes = "100..1600";
    std::vector<std::string> exprs;
    bool as_json = false;
    int max_oracle = 10;

    auto *cmd_analyze = app.add_subcommand("analyze", "group expression and generators");
    cmd_analyze->add_option("file", path);
    cmd_analyze->add_flag("--json", as_json);

    auto *cmd_reduce = app.add_subcommand("reduce", "dump the reduction tree");
    cmd_reduce->add_option("file", path);

    auto *cmd_realize = app.add_subcommand("realize", "build a graph for an expression");
    cmd_realize->add_option("expr", exprs)->required();
    cmd_realize->add_option("--seed", seed_name, "decorate a seed, one expr per edge-orbit");
    cmd_realize->add_option("-o,--output", out_path);

    auto *cmd_oracle = app.add_subcommand("oracle", "brute-force count and generators");
    cmd_oracle->add_option("file", path);
    cmd_oracle->add_option("--max-oracle", max_oracle);

    auto *cmd_verify = app.add_subcommand("verify", "cross-check analyzer, chain, oracle");
    cmd_verify->add_option("file", path);
    cmd_verify->add_option("--max-oracle", max_oracle);

    auto *cmd_bench = app.add_subcommand("bench", "timing table over a generated family");
    cmd_bench->add_option("--family", family);
    cmd_bench->add_option("--n", sizes);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    if (*cmd_analyze) {
        analysis_report r = analyze(parse_edge_list(read_input(path)));
        if (as_json) {
            std::cout << report_json(r).dump(2) << "\n";
        } else {
            std::cout << "group: " << print(r.expr) << "\n"
                      << "order: " << u128_str(r.aut_order()) << "\n"
                      << "generators: " << r.generators.size() << "\n";
        }
    } else if (*cmd_reduce) {
        analysis_report r = analyze(parse_edge_list(read_input(path)));
        std::cout << tree_json(r).dump(2) << "\n";
    } else if (*cmd_realize) {
        realize_context ctx;
        multigraph g;
        u128 predicted;
        if (seed_name.empty()) {
            if (exprs.size() != 1)
                throw CLI::ValidationError("realize", "exactly one expression without --seed");
            gx e = pga::parse(exprs[0]);
            rooted_graph r = realize_fix(e, ctx);
            r.g.vcolor[r.root] = 1; // marked root = the designated boundary
            g = r.g;
            predicted = order(e);
        } else {
            std::vector<gx> oe;
            for (const std::string &s : exprs)
                oe.push_back(pga::parse(s));
            realization r = realize_aut(make_seed(seed_name), oe);
            g = r.g;
            predicted = r.predicted;
        }
        std::string text = serialize_edge_list(g);
        if (out_path.empty())
            std::cout << text;
        else
            std::ofstream(out_path) << text;
        std::cerr << "predicted order: " << u128_str(predicted) << "\n";
    } else if (*cmd_oracle) {
        multigraph g = normalize_vertex_colors(parse_edge_list(read_input(path)));
        if (g.nv > max_oracle)
            throw std::runtime_error("graph too large for the oracle");
        auto auts = brute_force_aut(g, max_oracle);
        std::cout << "order: " << auts.size() << "\n";
        for (const perm &p : auts)
            if (!p.is_identity())
                std::cout << cycles(p) << "\n";
    } else if (*cmd_verify) {
        multigraph in = parse_edge_list(read_input(path));
        analysis_report r = analyze(in);
        u128 want = r.aut_order();
        bool ok = group_order(r.generators, aut_domain_size(r.graph)) == want;
        for (const perm &p : r.generators)
            ok = ok && is_automorphism(r.graph, p);
        if (r.graph.nv <= max_oracle)
            ok = ok && brute_force_aut_count(r.graph, max_oracle) == want;
        std::cout << "group: " << print(r.expr) << "\norder: " << u128_str(want) << "\n"
                  << (ok ? "verified" : "MISMATCH") << "\n";
        if (!ok)
            return 3;
    } else if (*cmd_bench) {
        if (family != "nested")
            throw CLI::ValidationError("bench", "unknown family: " + family);
        std::cout << "n\tseconds\torder_digits\n";
        for (int n : parse_sizes(sizes)) {
            multigraph g = caterpillar(n);
            auto t0 = std::chrono::steady_clock::now();
            analysis_report r = analyze(g);
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", dt.count());
            std::cout << n << "\t" << buf << "\t" << u128_str(r.aut_order()).size() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    try {
        return run(argc, argv);
    } catch (const not_planar &) {
        std::cerr << "error: graph is not planar\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
