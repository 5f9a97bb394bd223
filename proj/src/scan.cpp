#include "rainbowdom/scan.hpp"

#include "rainbowdom/extremal.hpp"
#include "rainbowdom/families.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <thread>

namespace rainbowdom {

namespace {

constexpr std::array<std::pair<ScanFamily, std::string_view>, 9> kFamilies{{
    {ScanFamily::all_trees, "all_trees"},
    {ScanFamily::random_trees, "random_trees"},
    {ScanFamily::random_connected, "random_connected"},
    {ScanFamily::paths, "paths"},
    {ScanFamily::cycles, "cycles"},
    {ScanFamily::spiders, "spiders"},
    {ScanFamily::l_k, "l_k"},
    {ScanFamily::double_stars, "double_stars"},
    {ScanFamily::product_pairs, "product_pairs"},
}};

constexpr std::array<std::pair<ScanPredicate, std::string_view>, 4> kPredicates{{
    {ScanPredicate::bound_violation, "bound_violation"},
    {ScanPredicate::tight_3n4, "tight_3n4"},
    {ScanPredicate::lower_bound_equality, "lower_bound_equality"},
    {ScanPredicate::product_violation, "product_violation"},
}};

bool tree_family(ScanFamily f)
{
    switch (f) {
    case ScanFamily::all_trees:
    case ScanFamily::random_trees:
    case ScanFamily::paths:
    case ScanFamily::spiders:
    case ScanFamily::l_k:
    case ScanFamily::double_stars: return true;
    default: return false;
    }
}

bool random_family(ScanFamily f)
{
    return f == ScanFamily::random_trees || f == ScanFamily::random_connected;
}

struct Instance {
    std::string label;
    Graph g;
    Graph h;  // second factor for product pairs
};

struct Outcome {
    bool checked = false;
    bool exhausted = false;
    bool hit = false;
    bool violation = false;
    Json values;
};

std::string label_of(const Graph& g)
{
    return g.order() <= 62 ? to_graph6(g) : "order:" + std::to_string(g.order());
}

std::vector<Instance> generate(const ScanSpec& spec)
{
    std::vector<Instance> out;
    auto add = [&](Graph g) {
        auto label = label_of(g);
        out.push_back({std::move(label), std::move(g), {}});
    };
    Rng rng(spec.seed);
    std::uniform_int_distribution<int> size(spec.min_n, spec.max_n);

    switch (spec.family) {
    case ScanFamily::all_trees:
        for (int n = spec.min_n; n <= spec.max_n; ++n)
            for_each_tree(n, [&](const Graph& t) { add(t); });
        break;
    case ScanFamily::random_trees:
        for (int i = 0; i < spec.sample_count; ++i)
            add(random_tree(size(rng), rng));
        break;
    case ScanFamily::random_connected:
        for (int i = 0; i < spec.sample_count; ++i)
            add(random_connected_graph(size(rng), spec.edge_probability, rng));
        break;
    case ScanFamily::paths:
        for (int n = spec.min_n; n <= spec.max_n; ++n)
            add(path_graph(n));
        break;
    case ScanFamily::cycles:
        for (int n = std::max(3, spec.min_n); n <= spec.max_n; ++n)
            add(cycle_graph(n));
        break;
    case ScanFamily::spiders:
        for (int n = spec.min_n; n <= spec.max_n; ++n)
            for (int x = 0; 2 * x + 1 <= n; ++x) {
                int y = n - 1 - 2 * x;
                if (x + y >= 2)
                    add(spider_graph({x, y, 0}));
            }
        break;
    case ScanFamily::l_k:
        for (int k = 1; 4 * k <= spec.max_n; ++k)
            if (4 * k >= spec.min_n)
                add(l_k_graph(k));
        break;
    case ScanFamily::double_stars:
        for (int n = spec.min_n; n <= spec.max_n; ++n)
            for (int s = 1; 2 * s + 2 <= n; ++s)
                add(double_star_graph(n - 2 - s, s));
        break;
    case ScanFamily::product_pairs:
        for (int a = spec.min_n; a <= spec.max_n; ++a)
            for (int b = a; b <= spec.max_n; ++b)
                out.push_back({"product:path:" + std::to_string(a) + "xpath:" + std::to_string(b), path_graph(a),
                               path_graph(b)});
        break;
    }
    return out;
}

Outcome evaluate(const ScanSpec& spec, const Instance& inst, const SolverOptions& opts, const SolverSet& solvers)
{
    Outcome o;
    const int n = inst.g.order();
    switch (spec.predicate) {
    case ScanPredicate::bound_violation: {
        BoundReport r = bound_report(inst.g, opts, solvers);
        o.exhausted = std::any_of(r.entries.begin(), r.entries.end(), [](const auto& e) { return !e.known(); });
        o.hit = o.violation = r.any_violation();
        o.values = to_json(r);
        break;
    }
    case ScanPredicate::tight_3n4: {
        if (n < 3)
            return o;
        const int value = solvers.gamma_r2(inst.g, opts).value;
        const bool tight = 4 * value == 3 * n;
        const ExtremalVerdict verdict = recognize_extremal_graph(inst.g);
        o.hit = tight || verdict.extremal;
        o.violation = tight != verdict.extremal;
        o.values = Json{{"n", n}, {"gamma_r2", value}, {"tight", tight}, {"recognized", verdict.extremal}};
        if (verdict.certificate)
            o.values["certificate"] = to_json(*verdict.certificate);
        break;
    }
    case ScanPredicate::lower_bound_equality: {
        if (n < 3)
            return o;
        const auto p = structural_profile(inst.g);
        const int gamma = solvers.gamma(inst.g, opts).value;
        const int value = solvers.gamma_r2(inst.g, opts).value;
        const auto lower = gamma + ceil_div(p.leaf_count - p.penultimate_count, p.max_degree);
        o.hit = value == lower;
        o.violation = value < lower;
        o.values = Json{{"n", n}, {"gamma", gamma}, {"gamma_r2", value}, {"lower_bound", lower}};
        break;
    }
    case ScanPredicate::product_violation: {
        ProductReport r = product_check(inst.g, inst.h, opts, solvers, kDefaultProductCap);
        o.exhausted = !r.complete();
        o.hit = (r.rainbow_vizing && !*r.rainbow_vizing) || r.theorem_violated();
        o.violation = r.theorem_violated();
        o.values = to_json(r);
        if (r.rainbow_vizing && !*r.rainbow_vizing)
            o.values["counterexample_candidate"] = true;
        break;
    }
    }
    o.checked = true;
    return o;
}

}  // namespace

std::string_view to_string(ScanFamily f)
{
    for (auto [v, name] : kFamilies)
        if (v == f)
            return name;
    return "unknown";
}

std::string_view to_string(ScanPredicate p)
{
    for (auto [v, name] : kPredicates)
        if (v == p)
            return name;
    return "unknown";
}

std::optional<ScanFamily> parse_family(std::string_view s)
{
    for (auto [v, name] : kFamilies)
        if (name == s)
            return v;
    return std::nullopt;
}

std::optional<ScanPredicate> parse_predicate(std::string_view s)
{
    for (auto [v, name] : kPredicates)
        if (name == s)
            return v;
    return std::nullopt;
}

int family_size_cap(ScanFamily f)
{
    switch (f) {
    case ScanFamily::all_trees: return 16;
    case ScanFamily::random_connected: return 24;
    case ScanFamily::product_pairs: return 5;
    default: return 40;
    }
}

void validate(const ScanSpec& spec)
{
    if (spec.min_n < 1 || spec.max_n < spec.min_n)
        throw InputError("scan: size range must satisfy 1 <= min <= max");
    if (spec.max_n > family_size_cap(spec.family))
        throw CapExceeded("scan: family " + std::string(to_string(spec.family)) + " is capped at n = " +
                          std::to_string(family_size_cap(spec.family)));
    if (random_family(spec.family) && spec.sample_count < 0)
        throw InputError("scan: sample count must be non-negative");
    if (spec.family == ScanFamily::random_connected && (spec.edge_probability <= 0.0 || spec.edge_probability > 1.0))
        throw InputError("scan: edge probability must lie in (0, 1]");

    const bool product_pred = spec.predicate == ScanPredicate::product_violation;
    if (product_pred != (spec.family == ScanFamily::product_pairs))
        throw InputError("scan: product_violation goes with (and only with) the product_pairs family");
    if (spec.predicate == ScanPredicate::lower_bound_equality && !tree_family(spec.family))
        throw InputError("scan: lower_bound_equality needs a tree family");
}

ScanReport scan(const ScanSpec& spec, const SolverOptions& opts, const SolverSet& solvers)
{
    validate(spec);
    const std::vector<Instance> instances = generate(spec);
    std::vector<Outcome> outcomes(instances.size());
    std::vector<std::exception_ptr> errors(instances.size());

    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(instances.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
            try {
                outcomes[i] = evaluate(spec, instances[i], opts, solvers);
            } catch (const BudgetExhausted&) {
                outcomes[i].exhausted = true;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(work);
        work();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    ScanReport report;
    report.spec = spec;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Outcome& o = outcomes[i];
        report.instances_checked += o.checked;
        report.budget_exhausted += o.exhausted;
        if (o.hit)
            report.hits.push_back({instances[i].label, o.values});
        if (o.violation)
            report.violations.push_back({instances[i].label, o.values});
    }
    return report;
}

Json to_json(const ScanReport& r)
{
    auto entries = [](const std::vector<ScanEntry>& list) {
        Json out = Json::array();
        for (const auto& e : list)
            out.push_back(Json{{"graph", e.graph}, {"values", e.values}});
        return out;
    };
    Json spec{{"family", to_string(r.spec.family)},
              {"predicate", to_string(r.spec.predicate)},
              {"size_range", {r.spec.min_n, r.spec.max_n}},
              {"seed", r.spec.seed}};
    if (random_family(r.spec.family))
        spec["sample_count"] = r.spec.sample_count;
    if (r.spec.family == ScanFamily::random_connected)
        spec["edge_probability"] = r.spec.edge_probability;
    return Json{{"spec", std::move(spec)},
                {"instances_checked", r.instances_checked},
                {"budget_exhausted", r.budget_exhausted},
                {"hit_count", r.hits.size()},
                {"violation_count", r.violations.size()},
                {"hits", entries(r.hits)},
                {"violations", entries(r.violations)}};
}

}  // namespace rainbowdom
