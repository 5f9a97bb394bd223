#include "oracles.hpp"

#include "rainbowdom/bounds.hpp"
#include "rainbowdom/extremal.hpp"
#include "rainbowdom/families.hpp"
#include "rainbowdom/serialize.hpp"

#include <doctest.h>

using namespace rainbowdom;

namespace {

const BoundEntry& entry(const BoundReport& r, std::string_view name)
{
    const BoundEntry* e = r.find(name);
    REQUIRE(e != nullptr);
    return *e;
}

void check_all_hold(const BoundReport& r)
{
    for (const auto& e : r.entries) {
        CHECK(e.known());
        CHECK_MESSAGE(e.holds(), e.name);
    }
    CHECK_FALSE(r.any_violation());
}

}  // namespace

TEST_CASE("rational arithmetic")
{
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(6, -8) == Rational(-3, 4));
    CHECK(Rational(15, 2).str() == "15/2");
    CHECK(Rational(8, 2).str() == "4");
    CHECK(Rational(3) < Rational(13, 4));
    CHECK(floor_div(-1, 2) == -1);
    CHECK(floor_div(7, 2) == 3);
    CHECK(ceil_div(6, 5) == 2);
    CHECK(ceil_div(0, 2) == 0);
    CHECK(ceil_div(-3, 4) == 0);
}

TEST_CASE("tree lower bound examples")
{
    CHECK(tree_lower_bound(star_graph(4)) == 2);
    CHECK(tree_lower_bound(double_star_graph(4, 4)) == 4);
    CHECK(tree_lower_bound(path_graph(6)) == 2);
    CHECK(oracle::gamma_r2(path_graph(6)) == 4);
    CHECK_THROWS_AS(tree_lower_bound(cycle_graph(5)), InputError);
    CHECK_THROWS_AS(tree_lower_bound(path_graph(2)), InputError);
}

TEST_CASE("bound report examples")
{
    auto p3 = bound_report(path_graph(3));
    CHECK(entry(p3, "diam_lower").tight());
    CHECK(*entry(p3, "diam_lower").rhs == Rational(2));

    auto c4 = bound_report(cycle_graph(4));
    CHECK(entry(c4, "diam_lower").tight());
    CHECK(c4.find("tree_lower") == nullptr);

    auto p6 = bound_report(path_graph(6));
    CHECK(entry(p6, "diam_upper").tight());
    CHECK(*entry(p6, "diam_upper").lhs == 4);

    auto p7 = bound_report(path_graph(7));
    CHECK(p7.values.gamma == 3);
    CHECK(p7.values.gamma_r2 == 4);
    CHECK(p7.values.gamma_roman == 5);
    check_all_hold(p7);
    CHECK(*entry(p7, "gamma_R_le_2gamma").rhs == Rational(6));

    auto ds = bound_report(double_star_graph(4, 4));
    CHECK(entry(ds, "tree_lower").tight());
    CHECK(*entry(ds, "three_quarter_upper").rhs == Rational(15, 2));

    CHECK(bound_report(path_graph(2)).find("three_quarter_upper") == nullptr);

    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(bound_report(Graph::from_edge_list(4, split)), InputError);
}

TEST_CASE("every bound holds on trees and random graphs")
{
    for (int n = 1; n <= 10; ++n)
        for_each_tree(n, [](const Graph& t) { check_all_hold(bound_report(t)); });
    Rng rng(808);
    std::uniform_int_distribution<int> size(1, 12);
    for (int i = 0; i < 150; ++i)
        check_all_hold(bound_report(random_connected_graph(size(rng), 0.2 + 0.1 * (i % 5), rng)));
}

TEST_CASE("3n/4 tightness census")
{
    for (int n = 3; n <= 11; ++n)
        for_each_tree(n, [](const Graph& t) {
            auto r = bound_report(t);
            CHECK(entry(r, "three_quarter_upper").tight() == recognize_extremal_tree(t).has_value());
        });
}

TEST_CASE("tree lower bound equality families")
{
    for (int r = 2; r <= 6; ++r)
        CHECK(entry(bound_report(star_graph(r)), "tree_lower").tight());
    for (int r = 4; r <= 5; ++r)
        for (int s = 4; s <= r; ++s)
            CHECK(entry(bound_report(double_star_graph(r, s)), "tree_lower").tight());
    for (int r = 2; r <= 5; ++r)
        CHECK(entry(bound_report(double_star_graph(r, 1)), "tree_lower").tight());
}

TEST_CASE("unknown entries on budget exhaustion")
{
    SolverSet solvers;
    solvers.gamma_roman = [](const Graph&, const SolverOptions&) -> SolveResult { throw BudgetExhausted(7); };
    auto r = bound_report(path_graph(6), {}, solvers);
    CHECK_FALSE(r.values.gamma_roman);
    CHECK_FALSE(entry(r, "gamma_r2_le_gamma_R").known());
    CHECK_FALSE(entry(r, "gamma_R_le_2gamma").holds());
    CHECK(entry(r, "gamma_le_gamma_r2").known());
    CHECK_FALSE(r.any_violation());
    const Json j = to_json(r);
    bool saw_unknown = false;
    for (const auto& b : j["bounds"])
        saw_unknown = saw_unknown || (b.contains("status") && b["status"] == "unknown");
    CHECK(saw_unknown);
}

TEST_CASE("a broken solver shows up as a violation")
{
    SolverSet solvers;
    solvers.gamma_r2 = [](const Graph& g, const SolverOptions& o) {
        SolveResult r = rainbow2_auto(g, o);
        r.value = g.order();
        return r;
    };
    auto r = bound_report(path_graph(8), {}, solvers);
    CHECK(r.any_violation());
    CHECK_FALSE(entry(r, "three_quarter_upper").holds());
}

TEST_CASE("product checks")
{
    auto c4 = product_check(path_graph(2), path_graph(2));
    CHECK(c4.complete());
    CHECK(c4.gamma_g == 1);
    CHECK(c4.gamma_r2_product == 2);
    CHECK(*c4.rainbow_vizing);

    auto grid = product_check(path_graph(4), path_graph(4));
    CHECK(grid.complete());
    CHECK(*grid.gamma_r2_product >= 4);
    CHECK_FALSE(grid.theorem_violated());

    auto mixed = product_check(star_graph(3), path_graph(3));
    CHECK(mixed.complete());
    CHECK(*mixed.roman_vizing);
    CHECK(*mixed.clark_suen);

    CHECK_THROWS_AS(product_check(path_graph(6), path_graph(5)), CapExceeded);

    SolverSet broken;
    broken.gamma = [](const Graph& g, const SolverOptions& o) {
        SolveResult r = domination_number(g, o);
        if (g.order() > 10)
            r.value = 1;
        return r;
    };
    auto bad = product_check(path_graph(6), path_graph(4), {}, broken);
    CHECK(bad.theorem_violated());

    const Json j = to_json(grid);
    CHECK(j["complete"] == true);
    CHECK(j["verdicts"]["rainbow_vizing"] == true);
}
