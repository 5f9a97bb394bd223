#include "rainbowdom/bounds.hpp"

#include <algorithm>

namespace rainbowdom {

const BoundEntry* BoundReport::find(std::string_view name) const
{
    auto it = std::find_if(entries.begin(), entries.end(), [&](const BoundEntry& e) { return e.name == name; });
    return it == entries.end() ? nullptr : &*it;
}

bool BoundReport::any_violation() const
{
    return std::any_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.known() && !e.holds(); });
}

namespace {

template <typename Solve>
std::optional<int> try_value(Solve&& solve)
{
    try {
        return solve().value;
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
}

std::optional<std::int64_t> lift(std::optional<int> v)
{
    return v ? std::optional<std::int64_t>(*v) : std::nullopt;
}

std::optional<Rational> lift_r(std::optional<int> v)
{
    return v ? std::optional<Rational>(Rational(*v)) : std::nullopt;
}

}  // namespace

int tree_lower_bound(const Graph& tree, const SolverOptions& opts)
{
    if (!is_tree(tree))
        throw InputError("tree_lower_bound requires a tree");
    if (tree.order() < 3)
        throw InputError("tree_lower_bound requires n >= 3");
    const auto p = structural_profile(tree);
    return domination_number(tree, opts).value +
           static_cast<int>(ceil_div(p.leaf_count - p.penultimate_count, p.max_degree));
}

BoundReport bound_report(const Graph& g, const SolverOptions& opts, const SolverSet& solvers)
{
    if (!is_connected(g))
        throw InputError("bound_report requires a connected graph");

    BoundReport r;
    const int n = r.order = g.order();
    const auto profile = structural_profile(g);
    const int diam = *profile.diameter;

    auto& v = r.values;
    v.gamma = try_value([&] { return solvers.gamma(g, opts); });
    v.gamma_r2 = try_value([&] { return solvers.gamma_r2(g, opts); });
    v.gamma_roman = try_value([&] { return solvers.gamma_roman(g, opts); });

    auto twice = [](std::optional<int> x) { return x ? std::optional<int>(2 * *x) : std::nullopt; };

    // gamma <= gamma_r2 <= gamma_R <= 2 gamma
    r.entries.push_back({"gamma_le_gamma_r2", lift(v.gamma), lift_r(v.gamma_r2)});
    r.entries.push_back({"gamma_r2_le_gamma_R", lift(v.gamma_r2), lift_r(v.gamma_roman)});
    r.entries.push_back({"gamma_R_le_2gamma", lift(v.gamma_roman), lift_r(twice(v.gamma))});

    // min{n, gamma + k - 2} <= gamma_rk <= k gamma with k = 2
    std::optional<int> hr_lower;
    if (v.gamma)
        hr_lower = std::min(n, *v.gamma);
    r.entries.push_back({"hartnell_rall_lower", lift(hr_lower), lift_r(v.gamma_r2)});
    r.entries.push_back({"hartnell_rall_upper", lift(v.gamma_r2), lift_r(twice(v.gamma))});

    if (n >= 3)
        r.entries.push_back({"three_quarter_upper", lift(v.gamma_r2), Rational(3 * n, 4)});
    r.entries.push_back({"diam_upper", lift(v.gamma_r2), Rational(n - floor_div(diam - 1, 2))});
    r.entries.push_back({"diam_lower", ceil_div(2 * diam + 2, 5), lift_r(v.gamma_r2)});

    if (profile.is_tree && n >= 3) {
        std::optional<std::int64_t> lower;
        if (v.gamma)
            lower = *v.gamma + ceil_div(profile.leaf_count - profile.penultimate_count, profile.max_degree);
        r.entries.push_back({"tree_lower", lower, lift_r(v.gamma_r2)});
    }
    return r;
}

ProductReport product_check(const Graph& g, const Graph& h, const SolverOptions& opts, const SolverSet& solvers,
                            int max_product_order)
{
    const Graph gh = cartesian_product(g, h, max_product_order);
    ProductReport r;
    r.gamma_g = try_value([&] { return solvers.gamma(g, opts); });
    r.gamma_h = try_value([&] { return solvers.gamma(h, opts); });
    r.gamma_product = try_value([&] { return solvers.gamma(gh, opts); });
    r.gamma_r2_product = try_value([&] { return solvers.gamma_r2(gh, opts); });
    r.gamma_roman_product = try_value([&] { return solvers.gamma_roman(gh, opts); });

    if (r.gamma_g && r.gamma_h) {
        const int target = *r.gamma_g * *r.gamma_h;
        if (r.gamma_r2_product)
            r.rainbow_vizing = *r.gamma_r2_product >= target;
        if (r.gamma_roman_product)
            r.roman_vizing = *r.gamma_roman_product >= target;
        if (r.gamma_product)
            r.clark_suen = 2 * *r.gamma_product >= target;
    }
    return r;
}

}  // namespace rainbowdom
