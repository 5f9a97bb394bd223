#include "rainbowdom/cli.hpp"

#include "rainbowdom/constructions.hpp"
#include "rainbowdom/extremal.hpp"
#include "rainbowdom/scan.hpp"
#include "rainbowdom/serialize.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace rainbowdom::cli {

namespace {

int parse_int(std::string_view s, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InputError("graph spec: expected an integer for " + std::string(what) + ", got \"" + std::string(s) + "\"");
    return value;
}

std::pair<int, int> parse_pair(std::string_view s, std::string_view what)
{
    auto comma = s.find(',');
    if (comma == std::string_view::npos)
        throw InputError("graph spec: " + std::string(what) + " expects two comma-separated integers");
    return {parse_int(s.substr(0, comma), what), parse_int(s.substr(comma + 1), what)};
}

}  // namespace

Graph parse_graph_arg(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InputError("graph spec \"" + std::string(text) + "\" has no kind prefix");
    const std::string_view kind = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);

    if (kind == "path")
        return path_graph(parse_int(rest, "path"));
    if (kind == "cycle")
        return cycle_graph(parse_int(rest, "cycle"));
    if (kind == "star")
        return star_graph(parse_int(rest, "star"));
    if (kind == "complete")
        return complete_graph(parse_int(rest, "complete"));
    if (kind == "spider") {
        auto [x, y] = parse_pair(rest, "spider");
        return spider_graph({x, y, 0});
    }
    if (kind == "ds") {
        auto [r, s] = parse_pair(rest, "ds");
        return double_star_graph(r, s);
    }
    if (kind == "l_k")
        return l_k_graph(parse_int(rest, "l_k"));
    if (kind == "corona")
        return corona(parse_graph_arg(rest));
    if (kind == "product") {
        // Try each 'x' as the separator; the first split where both sides parse wins.
        for (auto pos = rest.find('x'); pos != std::string_view::npos; pos = rest.find('x', pos + 1)) {
            try {
                Graph left = parse_graph_arg(rest.substr(0, pos));
                Graph right = parse_graph_arg(rest.substr(pos + 1));
                return cartesian_product(left, right);
            } catch (const InputError&) {
                continue;
            }
        }
        throw InputError("graph spec: cannot split product \"" + std::string(rest) + "\" into two graph specs");
    }
    if (kind == "file") {
        std::ifstream in{std::string(rest)};
        if (!in)
            throw InputError("cannot open edge list \"" + std::string(rest) + "\"");
        return read_edge_list(in);
    }
    if (kind == "g6")
        return parse_graph6(rest);
    throw InputError("unknown graph kind \"" + std::string(kind) + "\"");
}

namespace {

SolverOptions options_from_env()
{
    SolverOptions opts;
    if (const char* env = std::getenv("RAINBOWDOM_NODE_BUDGET")) {
        std::string_view s(env);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
            throw InputError("RAINBOWDOM_NODE_BUDGET must be a positive integer");
        opts.node_budget = v;
    }
    return opts;
}

std::string scalar_text(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void render_flat(std::ostream& out, const Json& j, const std::string& prefix)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_flat(out, value, prefix.empty() ? key : prefix + "." + key);
        return;
    }
    out << std::left << std::setw(32) << prefix << ' ' << scalar_text(j) << '\n';
}

void render_pretty(std::ostream& out, const Json& j)
{
    if (j.contains("bounds")) {
        render_flat(out, j.at("values"), "values");
        out << '\n' << std::left << std::setw(24) << "bound" << std::setw(8) << "lhs" << std::setw(10) << "rhs"
            << std::setw(8) << "holds" << "tight\n";
        for (const auto& b : j.at("bounds"))
            out << std::setw(24) << scalar_text(b.at("name")) << std::setw(8) << scalar_text(b.at("lhs"))
                << std::setw(10) << scalar_text(b.at("rhs")) << std::setw(8) << scalar_text(b.at("holds"))
                << scalar_text(b.at("tight")) << '\n';
        return;
    }
    if (j.contains("hits")) {
        for (const auto& key : {"spec", "instances_checked", "budget_exhausted", "hit_count", "violation_count"})
            render_flat(out, j.at(key), key);
        for (const auto& h : j.at("hits"))
            out << "hit " << scalar_text(h.at("graph")) << ' ' << h.at("values").dump() << '\n';
        for (const auto& v : j.at("violations"))
            out << "violation " << scalar_text(v.at("graph")) << ' ' << v.at("values").dump() << '\n';
        return;
    }
    render_flat(out, j, "");
}

struct Emitter {
    std::ostream& out;
    bool pretty = false;

    void operator()(const Json& j) const
    {
        if (pretty)
            render_pretty(out, j);
        else
            out << j.dump() << '\n';
    }
};

int compute(const Graph& g, const std::string& invariant, int k, const std::string& method, const SolverOptions& opts,
            const SolverSet& solvers, const Emitter& emit)
{
    if (invariant == "gamma") {
        emit(to_json(solvers.gamma(g, opts), "gamma"));
    } else if (invariant == "gamma-R" || invariant == "gamma-roman") {
        emit(to_json(solvers.gamma_roman(g, opts), "gamma_R"));
    } else if (invariant == "gamma-r2" || invariant == "gamma-rk") {
        if (invariant == "gamma-r2")
            k = 2;
        const std::string name = "gamma_r" + std::to_string(k);
        if (k != 2) {
            emit(to_json(rainbow_domination_number(g, k, opts), name));
        } else if (method == "auto") {
            emit(to_json(solvers.gamma_r2(g, opts), name));
        } else if (method == "bb") {
            emit(to_json(rainbow_domination_number(g, 2, opts), name));
        } else if (method == "tree") {
            emit(to_json(tree_rainbow2(g), name));
        } else if (method == "product") {
            emit(to_json(rainbow2_via_product(g, opts), name));
        } else {
            throw InputError("unknown method \"" + method + "\"");
        }
    } else if (invariant == "profile") {
        auto p = structural_profile(g);
        emit(Json{{"n", g.order()},
                  {"edges", g.edge_count()},
                  {"diameter", p.diameter ? Json(*p.diameter) : Json(nullptr)},
                  {"leaves", p.leaf_count},
                  {"penultimate", p.penultimate_count},
                  {"max_degree", p.max_degree},
                  {"is_tree", p.is_tree},
                  {"components", p.component_count}});
    } else {
        throw InputError("unknown invariant \"" + invariant + "\"");
    }
    return success;
}

int construct(const Graph& g, std::string algo, const Emitter& emit)
{
    if (algo == "auto")
        algo = (is_tree(g) && g.order() >= 3) ? "tree" : "diametral";
    ConstructedRdf c;
    if (algo == "tree") {
        c = tree_rdf_three_quarters(g);
    } else if (algo == "spider") {
        c = spider_rdf(g);
    } else if (algo == "diametral") {
        c = diametral_rdf(g);
    } else if (algo == "path") {
        if (!(g == path_graph(g.order())))
            throw InputError("construct --algo path needs a path in index order");
        c = path_rdf(g.order());
    } else {
        throw InputError("unknown construction \"" + algo + "\"");
    }
    emit(to_json(c));
    return success;
}

int recognize(const Graph& g, const Emitter& emit)
{
    const ExtremalVerdict v = recognize_extremal_graph(g);
    Json j{{"n", g.order()}, {"extremal", v.extremal}};
    if (v.is_corona_c4)
        j["kind"] = "corona_c4";
    if (v.certificate) {
        j["kind"] = "p4_partition";
        j["certificate"] = to_json(*v.certificate);
    }
    emit(j);
    return success;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const SolverSet& solvers)
{
    CLI::App app{"Exact 2-rainbow domination toolkit", "rainbowdom"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Render a human-readable table instead of JSON");

    std::string graph_spec, second_spec, invariant = "gamma-r2", method = "auto", algo = "auto";
    int k = 2;
    int product_cap = 25;

    auto* compute_cmd = app.add_subcommand("compute", "Exact gamma, gamma_rk or gamma_R with a witness");
    compute_cmd->add_option("--graph", graph_spec, "Graph spec")->required();
    compute_cmd->add_option("--invariant", invariant, "gamma | gamma-r2 | gamma-rk | gamma-R | profile");
    compute_cmd->add_option("--k", k, "Color count for gamma-rk")->check(CLI::Range(1, kMaxSolverColors));
    compute_cmd->add_option("--method", method, "auto | bb | tree | product (gamma-r2 only)");

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every bound on a connected graph");
    bounds_cmd->add_option("--graph", graph_spec, "Graph spec")->required();

    auto* construct_cmd = app.add_subcommand("construct", "Certified constructive 2RDF");
    construct_cmd->add_option("--graph", graph_spec, "Graph spec")->required();
    construct_cmd->add_option("--algo", algo, "auto | tree | spider | diametral | path");

    auto* recognize_cmd = app.add_subcommand("recognize", "Decide gamma_r2 = 3n/4 and emit a certificate");
    recognize_cmd->add_option("--graph", graph_spec, "Graph spec")->required();

    auto* product_cmd = app.add_subcommand("product", "Vizing-type inequalities on G x H");
    product_cmd->set_help_flag("--help", "Print this help message and exit");
    product_cmd->add_option("--g", graph_spec, "First factor")->required();
    product_cmd->add_option("--h", second_spec, "Second factor")->required();
    product_cmd->add_option("--cap", product_cap, "Largest product order")->check(CLI::Range(1, kMaxBitsetOrder));

    ScanSpec spec;
    std::string family = "all_trees", predicate = "bound_violation";
    auto* scan_cmd = app.add_subcommand("scan", "Check a predicate over a graph family");
    scan_cmd->add_option("--family", family, "Graph family");
    scan_cmd->add_option("--min", spec.min_n, "Smallest order");
    scan_cmd->add_option("--max", spec.max_n, "Largest order");
    scan_cmd->add_option("--predicate", predicate, "bound_violation | tight_3n4 | lower_bound_equality | product_violation");
    scan_cmd->add_option("--seed", spec.seed, "Seed for random families");
    scan_cmd->add_option("--samples", spec.sample_count, "Instances for random families");
    scan_cmd->add_option("--edge-prob", spec.edge_probability, "Edge probability for random_connected");
    scan_cmd->add_option("--threads", spec.threads, "Worker threads (0: all cores)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::ParseError& e) {
        err << "rainbowdom: " << e.what() << '\n';
        return usage_error;
    }

    const Emitter emit{out, pretty};
    try {
        const SolverOptions opts = options_from_env();

        if (*scan_cmd) {
            auto f = parse_family(family);
            auto p = parse_predicate(predicate);
            if (!f)
                throw InputError("unknown family \"" + family + "\"");
            if (!p)
                throw InputError("unknown predicate \"" + predicate + "\"");
            spec.family = *f;
            spec.predicate = *p;
            ScanReport report = scan(spec, opts, solvers);
            emit(to_json(report));
            if (!report.violations.empty()) {
                err << "rainbowdom: " << report.violations.size() << " theorem violation(s)\n";
                return theorem_violated;
            }
            return report.budget_exhausted > 0 ? budget_exhausted : success;
        }

        const Graph g = parse_graph_arg(graph_spec);
        if (g.had_duplicate_edges())
            err << "rainbowdom: warning: duplicate edges collapsed\n";

        if (*compute_cmd)
            return compute(g, invariant, k, method, opts, solvers, emit);
        if (*construct_cmd)
            return construct(g, algo, emit);
        if (*recognize_cmd)
            return recognize(g, emit);
        if (*bounds_cmd) {
            BoundReport r = bound_report(g, opts, solvers);
            emit(to_json(r));
            if (r.any_violation())
                return theorem_violated;
            bool unknown = std::any_of(r.entries.begin(), r.entries.end(), [](const auto& e) { return !e.known(); });
            return unknown ? budget_exhausted : success;
        }
        if (*product_cmd) {
            const Graph h = parse_graph_arg(second_spec);
            ProductReport r = product_check(g, h, opts, solvers, product_cap);
            Json j = to_json(r);
            if (r.rainbow_vizing && !*r.rainbow_vizing)
                j["counterexample_candidate"] = true;
            emit(j);
            if (r.theorem_violated())
                return theorem_violated;
            return r.complete() ? success : budget_exhausted;
        }
    } catch (const BudgetExhausted& e) {
        err << "rainbowdom: " << e.what() << '\n';
        return budget_exhausted;
    } catch (const ConstructionFailure& e) {
        err << "rainbowdom: " << e.what() << '\n';
        return theorem_violated;
    } catch (const InputError& e) {
        err << "rainbowdom: " << e.what() << '\n';
        return usage_error;
    } catch (const CapExceeded& e) {
        err << "rainbowdom: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace rainbowdom::cli
