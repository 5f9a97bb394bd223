#include "rainbowdom/extremal.hpp"
#include "rainbowdom/families.hpp"
#include "rainbowdom/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace rainbowdom;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph::from_edge_list(g.order(), edges);
}

void check_symmetric(const Graph& g)
{
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        for (Vertex u : nb) {
            CHECK(u != v);
            CHECK(g.adjacent(u, v));
        }
        degree_sum += nb.size();
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("edge list normalization")
{
    const std::vector<Edge> p4{{0, 1}, {1, 2}, {2, 3}};
    Graph g = Graph::from_edge_list(4, p4);
    CHECK(g == path_graph(4));
    CHECK_FALSE(g.had_duplicate_edges());

    const Graph k1 = Graph::from_edge_list(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    const std::vector<Edge> bad{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, bad), InputError);
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, loop), InputError);

    const std::vector<Edge> dup{{0, 1}, {1, 0}, {1, 2}};
    Graph d = Graph::from_edge_list(3, dup);
    CHECK(d.had_duplicate_edges());
    CHECK(d.edge_count() == 2);
    check_symmetric(d);
}

TEST_CASE("named families")
{
    auto p4 = structural_profile(path_graph(4));
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(p4.diameter == 3);
    CHECK(p4.leaf_count == 2);
    CHECK(p4.penultimate_count == 2);
    CHECK(p4.max_degree == 2);
    CHECK(p4.is_tree);

    auto c4 = structural_profile(cycle_graph(4));
    CHECK(c4.diameter == 2);
    CHECK(c4.leaf_count == 0);
    CHECK(c4.penultimate_count == 0);
    CHECK_FALSE(c4.is_tree);

    auto k15 = structural_profile(star_graph(5));
    CHECK(k15.max_degree == 5);
    CHECK(k15.leaf_count == 5);
    CHECK(k15.penultimate_count == 1);
    CHECK(star_graph(5).degree(0) == 5);

    CHECK_THROWS_AS(path_graph(0), InputError);
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK_THROWS_AS(star_graph(0), InputError);
    CHECK(complete_graph(5).edge_count() == 10);

    for (int n = 1; n <= 12; ++n)
        check_symmetric(path_graph(n));
}

TEST_CASE("spiders and double stars")
{
    CHECK(isomorphic_small(spider_graph({1, 1, 0}), path_graph(4)));
    CHECK(isomorphic_small(spider_graph({2, 0, 0}), path_graph(5)));
    CHECK(spider_graph({3, 2, 0}).order() == 9);
    CHECK_THROWS_AS(spider_graph({1, 0, 0}), InputError);
    CHECK_THROWS_AS(spider_graph({0, 1, 0}), InputError);

    CHECK(isomorphic_small(double_star_graph(1, 1), path_graph(4)));
    const Graph ds44 = double_star_graph(4, 4);
    auto p = structural_profile(ds44);
    CHECK(ds44.order() == 10);
    CHECK(p.diameter == 3);
    CHECK(p.leaf_count == 8);
    CHECK(p.penultimate_count == 2);
    CHECK(p.max_degree == 5);
    CHECK(isomorphic_small(double_star_graph(2, 1), spider_graph({1, 2, 0})));
    CHECK_THROWS_AS(double_star_graph(3, 0), InputError);
}

TEST_CASE("spider classification")
{
    auto p5 = classify_spider(path_graph(5));
    REQUIRE(p5);
    CHECK(p5->x == 2);
    CHECK(p5->y == 0);

    auto star = classify_spider(star_graph(4));
    REQUIRE(star);
    CHECK(star->x == 0);
    CHECK(star->y == 4);
    CHECK(star->center == 0);

    auto p4 = classify_spider(path_graph(4));
    REQUIRE(p4);
    CHECK(p4->center == 1);

    CHECK_FALSE(classify_spider(double_star_graph(2, 2)));
    CHECK_FALSE(classify_spider(cycle_graph(5)));
    CHECK_FALSE(classify_spider(path_graph(6)));

    Rng rng(11);
    for (int x = 0; x <= 8; ++x)
        for (int y = 0; x + y <= 8; ++y) {
            if (x + y < 2)
                continue;
            const Graph s = spider_graph({x, y, 0});
            CHECK(s.order() == 2 * x + y + 1);
            std::vector<Vertex> perm(static_cast<std::size_t>(s.order()));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const Graph shuffled = relabel(s, perm);
            auto shape = classify_spider(shuffled);
            REQUIRE(shape);
            if (x == 1 && y == 1)
                continue;  // P4: both interior vertices qualify
            CHECK(shape->x == x);
            CHECK(shape->y == y);
            CHECK(shape->center == perm[0]);
            if (s.order() <= 10)
                CHECK(isomorphic_small(spider_graph({shape->x, shape->y, 0}), shuffled));
        }
}

TEST_CASE("L_k layout")
{
    CHECK(l_k_graph(1) == path_graph(4));
    const Graph l5 = l_k_graph(5);
    CHECK(l5.order() == 20);
    CHECK(l5.edge_count() == 19);
    CHECK(is_tree(l5));
    // the two copies meet at their centers, so the spine adds one hop
    CHECK(structural_profile(l_k_graph(2)).diameter == 5);
    CHECK_THROWS_AS(l_k_graph(0), InputError);

    for (int k = 1; k <= 6; ++k) {
        const Graph g = l_k_graph(k);
        for (int i = 0; i < k; ++i) {
            std::vector<Vertex> part{4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3};
            CHECK(isomorphic_small(induced_subgraph(g, part), path_graph(4)));
            for (Vertex v : part) {
                if (v == l_k_center(i))
                    continue;
                for (Vertex u : g.neighbors(v))
                    CHECK(u / 4 == i);
            }
        }
    }
}

TEST_CASE("corona")
{
    const Graph c = corona(cycle_graph(4));
    CHECK(c.order() == 8);
    CHECK(c.edge_count() == 8);
    for (Vertex v = 0; v < 4; ++v) {
        CHECK(c.adjacent(v, 4 + v));
        CHECK(c.degree(4 + v) == 1);
    }
    CHECK(corona(Graph::from_edge_list(1, {})) == path_graph(2));
    auto p = structural_profile(corona(path_graph(3)));
    CHECK(p.is_tree);
    CHECK(p.leaf_count == 3);
    CHECK_THROWS_AS(corona(Graph{}), InputError);
}

TEST_CASE("cartesian product")
{
    const Graph grid = cartesian_product(path_graph(4), path_graph(2));
    CHECK(grid.order() == 8);
    CHECK(grid.edge_count() == 10);
    CHECK(cartesian_product(Graph::from_edge_list(1, {}), cycle_graph(5)) == cycle_graph(5));
    CHECK(isomorphic_small(cartesian_product(path_graph(2), path_graph(2)), cycle_graph(4)));
    CHECK_THROWS_AS(cartesian_product(path_graph(9), path_graph(8)), CapExceeded);
    CHECK(cartesian_product(path_graph(9), path_graph(8), 72).order() == 72);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(2 + trial % 5, 0.5, rng);
        const Graph h = random_tree(2 + trial % 4, rng);
        const Graph gh = cartesian_product(g, h);
        const int nh = h.order();
        check_symmetric(gh);
        CHECK(gh.edge_count() == g.edge_count() * static_cast<std::size_t>(nh) +
                                     h.edge_count() * static_cast<std::size_t>(g.order()));
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = 0; b < nh; ++b) {
                CHECK(gh.degree(a * nh + b) == g.degree(a) + h.degree(b));
                for (Vertex a2 = 0; a2 < g.order(); ++a2)
                    for (Vertex b2 = 0; b2 < nh; ++b2) {
                        const bool expect = (a == a2 && h.adjacent(b, b2)) || (b == b2 && g.adjacent(a, a2));
                        CHECK(gh.adjacent(a * nh + b, a2 * nh + b2) == expect);
                    }
            }
    }
}

TEST_CASE("structural profile and connectivity")
{
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    const Graph split = Graph::from_edge_list(4, two);
    auto p = structural_profile(split);
    CHECK_FALSE(p.diameter.has_value());
    CHECK(p.component_count == 2);
    CHECK_FALSE(p.is_tree);
    CHECK_FALSE(is_connected(split));
    CHECK(bfs_distances(split, 0)[2] < 0);

    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        const Graph t = random_tree(1 + i % 15, rng);
        auto tp = structural_profile(t);
        CHECK(tp.is_tree);
        CHECK(t.edge_count() + 1 == static_cast<std::size_t>(t.order()));
        if (tp.leaf_count > 0)
            CHECK(tp.penultimate_count <= tp.leaf_count);
    }
}

TEST_CASE("bitset view cap")
{
    CHECK_NOTHROW(BitAdjacency(path_graph(64)));
    CHECK_THROWS_AS(BitAdjacency(path_graph(65)), CapExceeded);
    BitAdjacency b(cycle_graph(5));
    CHECK(b.open[0] == (bit(1) | bit(4)));
    CHECK(b.closed[0] == (bit(0) | bit(1) | bit(4)));
}

TEST_CASE("edge list text round trip")
{
    Rng rng(17);
    for (int i = 0; i < 25; ++i) {
        const Graph g = random_connected_graph(1 + i % 12, 0.4, rng);
        std::stringstream ss;
        write_edge_list(ss, g);
        CHECK(read_edge_list(ss) == g);
    }
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(truncated), InputError);
    std::istringstream junk("x y\n");
    CHECK_THROWS_AS(read_edge_list(junk), InputError);
}

TEST_CASE("graph6")
{
    // reference decodings produced by an independent graph6 implementation
    const std::vector<Edge> cr{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    CHECK(parse_graph6("Cr") == Graph::from_edge_list(4, cr));
    const std::vector<Edge> star{{0, 4}, {1, 4}, {2, 4}, {3, 4}};
    CHECK(parse_graph6("D?{") == Graph::from_edge_list(5, star));
    const std::vector<Edge> g8{{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {5, 6}};
    CHECK(parse_graph6("Gr`?G?") == Graph::from_edge_list(8, g8));
    CHECK(to_graph6(path_graph(5)) == "DhC");
    CHECK(to_graph6(cycle_graph(8)) == "GhCGKC");

    CHECK_THROWS_AS(parse_graph6(""), InputError);
    CHECK_THROWS_AS(parse_graph6("Cr?"), InputError);
    CHECK_THROWS_AS(parse_graph6("C"), InputError);

    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        const Graph g = random_connected_graph(1 + i % 20, 0.3, rng);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}
