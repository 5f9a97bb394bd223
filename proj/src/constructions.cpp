#include "rainbowdom/constructions.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace rainbowdom {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::spider_case_A: return "spider_case_A";
    case Provenance::spider_case_B: return "spider_case_B";
    case Provenance::spider_p4: return "spider_p4";
    case Provenance::tree_case1: return "tree_case1";
    case Provenance::tree_case2: return "tree_case2";
    case Provenance::tree_case31: return "tree_case31";
    case Provenance::tree_case32: return "tree_case32";
    case Provenance::tree_base: return "tree_base";
    case Provenance::diametral: return "diametral";
    case Provenance::path_pattern: return "path_pattern";
    }
    return "unknown";
}

namespace {

using Colors = std::vector<ColorSet>;

struct Partial {
    Colors colors;
    Provenance provenance;
};

Rational three_quarters(int n) { return Rational(3 * n, 4); }

void certify(const Graph& g, const Colors& colors, const Rational& bound, std::string_view what)
{
    RainbowAssignment f{2, colors};
    if (!is_valid_krdf(g, f))
        throw ConstructionFailure(std::string(what) + " produced an invalid 2RDF");
    if (Rational(weight(f)) > bound)
        throw ConstructionFailure(std::string(what) + " produced weight " + std::to_string(weight(f)) +
                                  " above its bound " + bound.str());
}

Vertex other_neighbor(const Graph& g, Vertex v, Vertex not_this)
{
    for (Vertex w : g.neighbors(v))
        if (w != not_this)
            return w;
    return -1;
}

Partial spider_colors(const Graph& g)
{
    auto shape = classify_spider(g);
    if (!shape)
        throw InputError("spider_rdf: graph is not a spider");
    const Vertex c = shape->center;
    Colors f(static_cast<std::size_t>(g.order()));
    auto at = [&](Vertex v) -> ColorSet& { return f[static_cast<std::size_t>(v)]; };

    if (shape->x >= 3 || shape->y >= 2) {
        at(c) = {1, 2};
        for (Vertex w : g.neighbors(c))
            if (g.degree(w) == 2)
                at(other_neighbor(g, w, c)) = {1};
        return {std::move(f), Provenance::spider_case_A};
    }
    if (shape->x == 2) {
        at(c) = {1};
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) == 1)
                at(v) = {2};
        return {std::move(f), Provenance::spider_case_B};
    }
    // x = y = 1: the path on four vertices.
    at(c) = {1, 2};
    for (Vertex w : g.neighbors(c))
        if (g.degree(w) == 2)
            at(other_neighbor(g, w, c)) = {1};
    return {std::move(f), Provenance::spider_p4};
}

/// Copies `sub` (indexed like `keep`) into `into`.
void splice(Colors& into, const Colors& sub, std::span<const Vertex> keep)
{
    for (std::size_t i = 0; i < keep.size(); ++i)
        into[static_cast<std::size_t>(keep[i])] = sub[i];
}

std::vector<Vertex> complement(int n, std::span<const Vertex> removed)
{
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (Vertex v : removed)
        gone[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[static_cast<std::size_t>(v)])
            keep.push_back(v);
    return keep;
}

Partial tree_colors(const Graph& t);

/// Recurse on the subtree induced by `keep` and splice the result into a fresh assignment.
Colors recurse_on(const Graph& t, std::span<const Vertex> keep)
{
    Colors f(static_cast<std::size_t>(t.order()));
    splice(f, tree_colors(induced_subgraph(t, keep)).colors, keep);
    return f;
}

Partial tree_colors(const Graph& t)
{
    const int n = t.order();
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<std::size_t>(n));
    std::vector<int> ecc(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        dist.push_back(bfs_distances(t, v));
        ecc[static_cast<std::size_t>(v)] = *std::max_element(dist.back().begin(), dist.back().end());
    }
    const int diam = *std::max_element(ecc.begin(), ecc.end());
    auto d = [&](Vertex a, Vertex b) { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    auto is_leaf = [&](Vertex v) { return t.degree(v) == 1; };

    Partial out{Colors(static_cast<std::size_t>(n)), Provenance::tree_base};
    auto at = [&](Vertex v) -> ColorSet& { return out.colors[static_cast<std::size_t>(v)]; };

    if (diam <= 2) {
        Vertex c = static_cast<Vertex>(std::find_if(ecc.begin(), ecc.end(), [](int e) { return e <= 1; }) - ecc.begin());
        at(c) = {1, 2};
        return out;
    }
    if (diam == 3) {
        if (n <= 5)
            return spider_colors(t);
        for (Vertex v = 0; v < n; ++v)
            if (!is_leaf(v))
                at(v) = {1, 2};
        return out;
    }

    // Penultimate vertices of maximum degree over all longest-path ends; the
    // first one that avoids splitting off a spider wins.
    struct Plan {
        Vertex v = -1, l = -1, u = -1, next = -1;
        bool split = false;
    };
    auto plan_for = [&](Vertex pv) {
        Plan p;
        p.v = pv;
        for (Vertex w : t.neighbors(pv)) {
            if (is_leaf(w) && ecc[static_cast<std::size_t>(w)] == diam && p.l < 0)
                p.l = w;
            if (!is_leaf(w))
                p.u = w;
        }
        Vertex far = 0;
        while (d(p.l, far) != diam)
            ++far;
        // Next vertex after u on the longest path from l to `far`.
        for (Vertex w : t.neighbors(p.u))
            if (d(far, w) == d(far, p.u) - 1) {
                p.next = w;
                break;
            }
        if (t.degree(pv) == 2 && t.degree(p.u) > 2) {
            const Vertex nx = p.next;
            p.split = !(is_leaf(nx) || (t.degree(nx) == 2 && is_leaf(other_neighbor(t, nx, p.u))));
        }
        return p;
    };
    int best_degree = 0;
    for (Vertex w = 0; w < n; ++w)
        if (is_leaf(w) && ecc[static_cast<std::size_t>(w)] == diam)
            best_degree = std::max(best_degree, t.degree(t.neighbors(w)[0]));
    std::optional<Plan> chosen;
    for (Vertex w = 0; w < n && !(chosen && !chosen->split); ++w) {
        if (t.degree(w) != best_degree)
            continue;
        const bool ends_path = std::ranges::any_of(t.neighbors(w), [&](Vertex x) {
            return is_leaf(x) && ecc[static_cast<std::size_t>(x)] == diam;
        });
        if (!ends_path)
            continue;
        Plan p = plan_for(w);
        if (!chosen || (chosen->split && !p.split))
            chosen = p;
    }
    const auto [v, l, u, next, split] = *chosen;

    if (t.degree(v) > 2) {
        std::vector<Vertex> removed{v};
        for (Vertex w : t.neighbors(v))
            if (is_leaf(w))
                removed.push_back(w);
        out.colors = recurse_on(t, complement(n, removed));
        at(v) = {1, 2};
        out.provenance = Provenance::tree_case1;
        return out;
    }

    if (t.degree(u) == 2) {
        out.provenance = Provenance::tree_case2;
        if (n == 5) {
            // P5 laid out as l v u a b.
            Vertex a = other_neighbor(t, u, v);
            Vertex b = other_neighbor(t, a, u);
            at(l) = {1};
            at(u) = {2};
            at(b) = {1};
            return out;
        }
        const std::array<Vertex, 3> removed{u, v, l};
        out.colors = recurse_on(t, complement(n, removed));
        at(v) = {1, 2};
        return out;
    }

    // deg v = 2 < deg u. Every neighbor of u off the path is a leaf or a
    // two-vertex leg, so only `next` can lead anywhere else.
    if (!split) {
        Partial s = spider_colors(t);
        s.provenance = Provenance::tree_case31;
        return s;
    }

    std::vector<Vertex> spider_side;
    std::vector<char> in_spider(static_cast<std::size_t>(n), 0);
    spider_side.push_back(u);
    in_spider[static_cast<std::size_t>(u)] = 1;
    for (std::size_t i = 0; i < spider_side.size(); ++i)
        for (Vertex w : t.neighbors(spider_side[i]))
            if (!in_spider[static_cast<std::size_t>(w)] && !(spider_side[i] == u && w == next)) {
                in_spider[static_cast<std::size_t>(w)] = 1;
                spider_side.push_back(w);
            }
    std::sort(spider_side.begin(), spider_side.end());

    const Graph spider = induced_subgraph(t, spider_side);
    if (!classify_spider(spider))
        throw ConstructionFailure("tree construction: split-off component is not a spider");
    out.colors = recurse_on(t, complement(n, spider_side));
    splice(out.colors, spider_colors(spider).colors, spider_side);
    out.provenance = Provenance::tree_case32;
    return out;
}

}  // namespace

ConstructedRdf spider_rdf(const Graph& spider)
{
    Partial p = spider_colors(spider);
    const Rational bound = three_quarters(spider.order());
    certify(spider, p.colors, bound, "spider_rdf");
    return {RainbowAssignment{2, std::move(p.colors)}, bound, "3n/4", p.provenance};
}

ConstructedRdf tree_rdf_three_quarters(const Graph& tree)
{
    if (!is_tree(tree))
        throw InputError("tree_rdf_three_quarters requires a tree");
    if (tree.order() < 3)
        throw InputError("tree_rdf_three_quarters requires n >= 3");
    Partial p = tree_colors(tree);
    const Rational bound = three_quarters(tree.order());
    certify(tree, p.colors, bound, "tree_rdf_three_quarters");
    return {RainbowAssignment{2, std::move(p.colors)}, bound, "3n/4", p.provenance};
}

ConstructedRdf path_rdf(int n)
{
    if (n < 1)
        throw InputError("path_rdf requires n >= 1");
    Colors f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; i += 2)
        f[static_cast<std::size_t>(i)] = (i % 4 == 0) ? ColorSet{1} : ColorSet{2};
    // Even order leaves the last vertex with one neighbor; color it.
    if (n % 2 == 0)
        f[static_cast<std::size_t>(n - 1)] = {1};
    const Rational bound(n / 2 + 1);
    certify(path_graph(n), f, bound, "path_rdf");
    return {RainbowAssignment{2, std::move(f)}, bound, "floor(n/2)+1", Provenance::path_pattern};
}

ConstructedRdf diametral_rdf(const Graph& g)
{
    if (!is_connected(g))
        throw InputError("diametral_rdf requires a connected graph");
    const int n = g.order();

    // Lexicographically smallest pair (a, b) realizing the diameter.
    int diam = -1;
    Vertex a = 0, b = 0;
    for (Vertex s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (Vertex w = 0; w < n; ++w)
            if (dist[static_cast<std::size_t>(w)] > diam) {
                diam = dist[static_cast<std::size_t>(w)];
                a = s;
                b = w;
            }
    }
    const auto to_b = bfs_distances(g, b);
    std::vector<Vertex> path{a};
    while (path.back() != b) {
        Vertex cur = path.back();
        for (Vertex w : g.neighbors(cur))
            if (to_b[static_cast<std::size_t>(w)] == to_b[static_cast<std::size_t>(cur)] - 1) {
                path.push_back(w);
                break;
            }
    }

    Colors f(static_cast<std::size_t>(n), ColorSet{1});
    const auto along = path_rdf(static_cast<int>(path.size())).assignment.colors;
    for (std::size_t i = 0; i < path.size(); ++i)
        f[static_cast<std::size_t>(path[i])] = along[i];

    const Rational bound(n - floor_div(diam - 1, 2));
    certify(g, f, bound, "diametral_rdf");
    return {RainbowAssignment{2, std::move(f)}, bound, "n-floor((diam-1)/2)", Provenance::diametral};
}

}  // namespace rainbowdom
