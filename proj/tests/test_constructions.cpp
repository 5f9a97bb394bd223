#include "oracles.hpp"

#include "rainbowdom/constructions.hpp"
#include "rainbowdom/extremal.hpp"
#include "rainbowdom/families.hpp"
#include "rainbowdom/serialize.hpp"
#include "rainbowdom/solvers.hpp"

#include <doctest.h>

using namespace rainbowdom;

namespace {

void check_certified(const Graph& g, const ConstructedRdf& c)
{
    CHECK(c.assignment.k == 2);
    CHECK(c.assignment.order() == g.order());
    CHECK(is_valid_krdf(g, c.assignment));
    CHECK(Rational(weight(c.assignment)) <= c.claimed_bound);
}

Rational three_quarters(int n)
{
    return Rational(3 * n, 4);
}

}  // namespace

TEST_CASE("spider examples")
{
    auto s30 = spider_rdf(spider_graph({3, 0, 0}));
    CHECK(weight(s30.assignment) == 5);
    CHECK(s30.provenance == Provenance::spider_case_A);

    auto p5 = spider_rdf(path_graph(5));
    CHECK(weight(p5.assignment) == 3);
    CHECK(p5.provenance == Provenance::spider_case_B);

    auto p4 = spider_rdf(path_graph(4));
    CHECK(weight(p4.assignment) == 3);
    CHECK(p4.provenance == Provenance::spider_p4);
    CHECK(p4.claimed_bound == Rational(3));

    CHECK_THROWS_AS(spider_rdf(path_graph(6)), InputError);
}

TEST_CASE("all spiders up to eight legs")
{
    for (int x = 0; x <= 8; ++x)
        for (int y = 0; x + y <= 8; ++y) {
            if (x + y < 2)
                continue;
            const Graph s = spider_graph({x, y, 0});
            auto c = spider_rdf(s);
            check_certified(s, c);
            const Rational w(weight(c.assignment));
            if (x == 1 && y == 1)
                CHECK(w == three_quarters(4));
            else
                CHECK(w < three_quarters(s.order()));
            if (x >= 3 || y >= 2)
                CHECK(weight(c.assignment) == 2 + x);
            else if (x == 2)
                CHECK(weight(c.assignment) == 3 + y);
        }
}

TEST_CASE("tree construction examples")
{
    CHECK(weight(tree_rdf_three_quarters(path_graph(4)).assignment) == 3);
    CHECK(weight(tree_rdf_three_quarters(path_graph(5)).assignment) == 3);
    auto l3 = tree_rdf_three_quarters(l_k_graph(3));
    check_certified(l_k_graph(3), l3);
    CHECK(weight(l3.assignment) == 9);
    CHECK_THROWS_AS(tree_rdf_three_quarters(cycle_graph(5)), InputError);
    CHECK_THROWS_AS(tree_rdf_three_quarters(path_graph(2)), InputError);
}

TEST_CASE("tree construction when the longest path turns at a branching parent")
{
    // path l-v-u-w-x-y-z, a leaf on w, and a second leg u-v2-l2
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {2, 8}, {8, 9}};
    const Graph t = Graph::from_edge_list(10, edges);
    check_certified(t, tree_rdf_three_quarters(t));
}

TEST_CASE("tree construction on every tree up to 11 vertices")
{
    for (int n = 3; n <= 11; ++n)
        for_each_tree(n, [n](const Graph& t) {
            auto c = tree_rdf_three_quarters(t);
            check_certified(t, c);
            CHECK(c.claimed_bound == three_quarters(n));
            const bool tight = 4 * weight(c.assignment) == 3 * n;
            CHECK(tight == recognize_extremal_tree(t).has_value());
        });
}

TEST_CASE("tree construction on random trees")
{
    Rng rng(505);
    std::uniform_int_distribution<int> size(3, 40);
    for (int i = 0; i < 500; ++i) {
        const Graph t = random_tree(size(rng), rng);
        check_certified(t, tree_rdf_three_quarters(t));
    }
}

TEST_CASE("diametral construction")
{
    auto p6 = diametral_rdf(path_graph(6));
    check_certified(path_graph(6), p6);
    CHECK(weight(p6.assignment) == 4);
    CHECK(p6.claimed_bound == Rational(4));

    auto c4 = diametral_rdf(cycle_graph(4));
    check_certified(cycle_graph(4), c4);
    CHECK(c4.claimed_bound == Rational(4));

    auto star = diametral_rdf(star_graph(6));
    check_certified(star_graph(6), star);
    CHECK(star.claimed_bound == Rational(7));

    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(diametral_rdf(Graph::from_edge_list(4, split)), InputError);

    Rng rng(606);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_connected_graph(1 + i % 30, 0.1 + 0.05 * (i % 8), rng);
        auto c = diametral_rdf(g);
        check_certified(g, c);
        const int d = *structural_profile(g).diameter;
        CHECK(c.claimed_bound == Rational(g.order() - floor_div(d - 1, 2)));
    }
    for (int n = 3; n <= 30; ++n) {
        check_certified(cycle_graph(n), diametral_rdf(cycle_graph(n)));
        check_certified(path_graph(n), diametral_rdf(path_graph(n)));
    }
}

TEST_CASE("path pattern is optimal")
{
    for (int n = 1; n <= 24; ++n) {
        auto c = path_rdf(n);
        check_certified(path_graph(n), c);
        CHECK(weight(c.assignment) == n / 2 + 1);
        CHECK(weight(c.assignment) == rainbow_domination_number(path_graph(n), 2).value);
        if (n <= 12)
            CHECK(weight(c.assignment) == oracle::gamma_r2(path_graph(n)));
    }
    CHECK(weight(path_rdf(1).assignment) == 1);
    CHECK_THROWS_AS(path_rdf(0), InputError);
}

TEST_CASE("construction JSON")
{
    auto j = to_json(tree_rdf_three_quarters(l_k_graph(2)));
    CHECK(j["claimed_bound"] == "3n/4");
    CHECK(j["claimed_bound_value"] == "6");
    CHECK(j["weight"] == 6);
    CHECK(j.contains("provenance"));
}
