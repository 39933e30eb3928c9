// Command-line front end: every library operation behind a subcommand, JSON
// in and out, stdin/stdout when paths are omitted so the tool composes in
// pipelines. Exit 0 on success, 1 on validation failure (machine-readable
// error object on stderr), 2 on usage errors.

#include "gaidec/decompose.hpp"
#include "gaidec/elicit.hpp"
#include "gaidec/errors.hpp"
#include "gaidec/gai.hpp"
#include "gaidec/json_io.hpp"
#include "gaidec/kary.hpp"
#include "gaidec/polytope.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using gaidec::json_io::json;

std::string read_input(const std::string& path) {
    if (path.empty()) return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gaidec::ValidationError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gaidec::ValidationError("cannot write " + path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_input(const std::string& path) {
    return gaidec::json_io::parse_json(read_input(path), path.empty() ? "<stdin>" : path);
}

std::vector<std::vector<int>> parse_scopes(const std::string& text) {
    // "1;0,2;0,1" -> {{1},{0,2},{0,1}}
    std::vector<std::vector<int>> scopes;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> scope;
        std::stringstream axes(group);
        std::string axis;
        while (std::getline(axes, axis, ',')) {
            try {
                std::size_t used = 0;
                const int value = std::stoi(axis, &used);
                if (used != axis.size()) throw std::invalid_argument(axis);
                scope.push_back(value);
            } catch (const std::exception&) {
                throw gaidec::ValidationError("bad attribute index '" + axis + "' in --order");
            }
        }
        if (scope.empty()) throw gaidec::ValidationError("empty scope in --order");
        scopes.push_back(std::move(scope));
    }
    if (scopes.empty()) throw gaidec::ValidationError("--order lists no scopes");
    return scopes;
}

std::vector<int> parse_level_list(const std::string& text) {
    std::vector<int> m;
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            m.push_back(value);
        } catch (const std::exception&) {
            throw gaidec::ValidationError("bad level bound '" + part + "' in --m");
        }
    }
    if (m.empty()) throw gaidec::ValidationError("--m lists no level bounds");
    return m;
}

struct Cli {
    std::string in, out;
    int decimal = -1;
    std::string fill = "clamp";
    std::string order, anchor;
    int p = 0;
    int n = 0, k = 0;
    std::string m_list;
    std::string method = "lp";
    std::string engine = "direct";
    bool minimize_interaction = false;
    bool soft = false;
};

void add_io(CLI::App* cmd, Cli& cli) {
    cmd->add_option("input", cli.in, "input file (stdin when omitted)");
    cmd->add_option("output", cli.out, "output file (stdout when omitted)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete 2-additive utility models: transforms, decompositions, polytope vertices, elicitation"};
    app.require_subcommand(1);
    app.fallthrough();
    Cli cli;
    app.add_option("--decimal", cli.decimal,
                   "render rationals as N-digit decimal approximations (marked non-exact) instead of p/q")
        ->check(CLI::NonNegativeNumber);

    CLI::App* c_mobius = app.add_subcommand("mobius", "game JSON -> sparse Mobius coefficients");
    add_io(c_mobius, cli);
    CLI::App* c_zeta = app.add_subcommand("zeta", "Mobius coefficients JSON -> game JSON");
    add_io(c_zeta, cli);
    CLI::App* c_check = app.add_subcommand("check", "diagnose capacity laws; exit 1 when any fails");
    add_io(c_check, cli);
    CLI::App* c_padd = app.add_subcommand("padd", "additivity degree of a game");
    add_io(c_padd, cli);

    CLI::App* c_embed = app.add_subcommand("embed", "tabulated function or model JSON -> capacity on the hypercube");
    add_io(c_embed, cli);
    c_embed->add_option("--fill", cli.fill, "off-grid fill: clamp (default) or constant")
        ->check(CLI::IsMember({"clamp", "constant"}));

    CLI::App* c_canonical = app.add_subcommand("canonical", "scope-ordered decomposition of a tabulated function");
    add_io(c_canonical, cli);
    c_canonical->add_option("--order", cli.order, "scope list, e.g. \"1;0,2;0,1\" (0-based attribute indices)")
        ->required();
    c_canonical->add_option("--anchor", cli.anchor, "anchor alternative, e.g. \"0,0,0\" (default: all-worst)");

    CLI::App* c_delta = app.add_subcommand("delta-decompose", "variation-based decomposition of a p-additive function");
    add_io(c_delta, cli);
    c_delta->add_option("--p", cli.p, "additivity degree to decompose at")->required()->check(CLI::PositiveNumber);

    CLI::App* c_vertices = app.add_subcommand("vertices", "extreme points of the 2-additive capacity polytope");
    c_vertices->require_subcommand(1);
    CLI::App* c_vcount = c_vertices->add_subcommand("count", "closed-form vertex counts");
    CLI::App* c_venum = c_vertices->add_subcommand("enum", "stream every vertex as one JSON record per line");
    for (CLI::App* cmd : {c_vcount, c_venum}) {
        cmd->add_option("--n", cli.n, "number of attributes")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--k", cli.k, "levels per attribute (0..k)")->required()->check(CLI::PositiveNumber);
        cmd->add_option("output", cli.out, "output file (stdout when omitted)");
    }

    CLI::App* c_antichains = app.add_subcommand("antichains", "antichains of the (k+1)x(k+1) pair lattice, one per line");
    c_antichains->add_option("--k", cli.k, "levels per axis (0..k)")->required()->check(CLI::PositiveNumber);
    c_antichains->add_option("output", cli.out, "output file (stdout when omitted)");

    CLI::App* c_decompose = app.add_subcommand("decompose", "monotone decomposition of a 2-additive capacity");
    add_io(c_decompose, cli);
    c_decompose->add_option("--method", cli.method, "lp (term tables, default) or vertex (convex combination)")
        ->check(CLI::IsMember({"lp", "vertex"}));
    c_decompose->add_option("--engine", cli.engine, "lp method backend: direct (default) or simplex")
        ->check(CLI::IsMember({"direct", "simplex"}));
    c_decompose->add_flag("--minimize-interaction", cli.minimize_interaction,
                          "bias toward small pair terms (forces the simplex backend)");

    CLI::App* c_recompose = app.add_subcommand("recompose", "sum decomposition tables back into a capacity");
    add_io(c_recompose, cli);

    CLI::App* c_census = app.add_subcommand("census", "variable/constraint counts of the monotone-decomposition program");
    c_census->add_option("--n", cli.n, "number of attributes (with --k)")->check(CLI::PositiveNumber);
    c_census->add_option("--k", cli.k, "levels per attribute (with --n)")->check(CLI::PositiveNumber);
    c_census->add_option("--m", cli.m_list, "per-attribute level bounds, e.g. \"2,3,4\"");
    c_census->add_option("output", cli.out, "output file (stdout when omitted)");

    CLI::App* c_elicit = app.add_subcommand("elicit", "fit a monotone 2-additive model to preference data");
    add_io(c_elicit, cli);
    c_elicit->add_flag("--soft", cli.soft, "minimize total violation instead of failing on inconsistent data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const gaidec::json_io::RenderOptions opts{cli.decimal};
    try {
        if (*c_mobius) {
            const auto v = gaidec::json_io::game_from_json(parse_input(cli.in));
            write_output(cli.out, dump(gaidec::json_io::mobius_json(gaidec::kary::mobius(v), opts)));
        } else if (*c_zeta) {
            const auto m = gaidec::json_io::mobius_from_json(parse_input(cli.in));
            write_output(cli.out, dump(gaidec::json_io::game_json(gaidec::kary::zeta(m), opts)));
        } else if (*c_check) {
            const auto v = gaidec::json_io::game_from_json(parse_input(cli.in));
            const auto report = gaidec::kary::check_capacity(v);
            write_output(cli.out, dump(gaidec::json_io::capacity_report_json(report, opts)));
            if (!report.ok()) {
                json err;
                err["error"] = "input is not a capacity";
                err["kind"] = "validation";
                std::cerr << err.dump() << "\n";
                return 1;
            }
        } else if (*c_padd) {
            const auto v = gaidec::json_io::game_from_json(parse_input(cli.in));
            const int degree = gaidec::kary::p_additivity_degree(v);
            json j;
            j["n"] = v.n;
            j["k"] = v.k;
            j["degree"] = degree;
            j["degenerate"] = degree == 0;
            write_output(cli.out, dump(j));
        } else if (*c_embed) {
            const json doc = parse_input(cli.in);
            const auto fill = cli.fill == "clamp" ? gaidec::gai::FillMode::Clamp : gaidec::gai::FillMode::Constant;
            const auto capacity = doc.contains("terms") ? gaidec::gai::embed(gaidec::json_io::model_from_json(doc), fill)
                                                        : gaidec::gai::embed(gaidec::json_io::tabulated_from_json(doc), fill);
            write_output(cli.out, dump(gaidec::json_io::game_json(capacity.game(), opts)));
        } else if (*c_canonical) {
            const auto u = gaidec::json_io::tabulated_from_json(parse_input(cli.in));
            const auto scopes = parse_scopes(cli.order);
            const gaidec::GridPoint anchor = cli.anchor.empty() ? u.space.grid().origin()
                                                                : gaidec::grid_point_parse(cli.anchor, u.space.arity());
            const auto model = gaidec::gai::canonical_decomposition(u, scopes, anchor);
            write_output(cli.out, dump(gaidec::json_io::model_json(model, opts)));
        } else if (*c_delta) {
            const auto u = gaidec::json_io::tabulated_from_json(parse_input(cli.in));
            const auto model = gaidec::gai::delta_decomposition(u, cli.p);
            write_output(cli.out, dump(gaidec::json_io::model_json(model, opts)));
        } else if (*c_vcount) {
            write_output(cli.out, dump(gaidec::json_io::vertex_census_json(gaidec::polytope::count_vertices(cli.n, cli.k))));
        } else if (*c_venum) {
            std::ostringstream lines;
            gaidec::polytope::enumerate_vertices(cli.n, cli.k, [&](const gaidec::polytope::VertexCapacity& v) {
                lines << gaidec::json_io::vertex_json(v, opts).dump() << "\n";
                if (cli.out.empty()) {
                    std::cout << lines.str();
                    lines.str({});
                }
            });
            if (!cli.out.empty()) write_output(cli.out, lines.str());
        } else if (*c_antichains) {
            std::ostringstream lines;
            for (const auto& a : gaidec::polytope::enumerate_antichains(cli.k)) {
                json rec = json::array();
                for (const auto& [x, y] : a.points) rec.push_back(json::array({x, y}));
                lines << rec.dump() << "\n";
            }
            write_output(cli.out, lines.str());
        } else if (*c_decompose) {
            const gaidec::kary::KaryCapacity v(gaidec::json_io::game_from_json(parse_input(cli.in)));
            if (cli.method == "vertex") {
                write_output(cli.out, dump(gaidec::json_io::combination_json(gaidec::decompose::vertex_decompose(v), opts)));
            } else {
                gaidec::decompose::DecomposeOptions options;
                options.engine = cli.engine == "simplex" ? gaidec::decompose::Engine::Simplex
                                                         : gaidec::decompose::Engine::Direct;
                options.minimize_interaction = cli.minimize_interaction;
                const auto d = gaidec::decompose::monotone_decompose(v, options);
                write_output(cli.out, dump(gaidec::json_io::decomposition_json(d, opts)));
            }
        } else if (*c_recompose) {
            const auto d = gaidec::json_io::decomposition_from_json(parse_input(cli.in));
            write_output(cli.out, dump(gaidec::json_io::game_json(gaidec::decompose::recompose(d).game(), opts)));
        } else if (*c_census) {
            const bool uniform = c_census->count("--n") > 0 || c_census->count("--k") > 0;
            const bool general = c_census->count("--m") > 0;
            if (uniform == general)
                throw gaidec::ValidationError("census needs either --n with --k, or --m");
            if (uniform) {
                if (c_census->count("--n") == 0 || c_census->count("--k") == 0)
                    throw gaidec::ValidationError("census needs both --n and --k");
                write_output(cli.out, dump(gaidec::json_io::constraint_census_json(
                                          gaidec::decompose::constraint_census(cli.n, cli.k), cli.n, cli.k)));
            } else {
                const auto m = parse_level_list(cli.m_list);
                write_output(cli.out,
                             dump(gaidec::json_io::constraint_census_json(gaidec::decompose::constraint_census(m), m)));
            }
        } else if (*c_elicit) {
            const auto data = gaidec::json_io::dataset_from_json(parse_input(cli.in));
            if (cli.soft)
                write_output(cli.out, dump(gaidec::json_io::soft_fit_json(gaidec::elicit::elicit_soft(data), opts)));
            else
                write_output(cli.out, dump(gaidec::json_io::elicitation_json(gaidec::elicit::elicit(data), opts)));
        }
    } catch (const gaidec::ValidationError& e) {
        json err;
        err["error"] = e.what();
        err["kind"] = "validation";
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const gaidec::InternalCheckError& e) {
        json err;
        err["error"] = e.what();
        err["kind"] = "internal";
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
