#include "rainbowdom/families.hpp"

#include <algorithm>
#include <map>

namespace rainbowdom {

namespace {

std::string code_below(const Graph& t, Vertex v, Vertex parent)
{
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(v))
        if (w != parent)
            kids.push_back(code_below(t, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids)
        out += k;
    out += ")";
    return out;
}

std::vector<Vertex> tree_centers(const Graph& t)
{
    const int n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            all[static_cast<std::size_t>(v)] = v;
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1)
            layer.push_back(v);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbors(v))
                if (--deg[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

Graph add_leaf(const Graph& t, Vertex at)
{
    auto e = t.edges();
    e.emplace_back(at, t.order());
    return Graph::from_edge_list(t.order() + 1, e);
}

}  // namespace

std::string rooted_tree_code(const Graph& tree, Vertex root)
{
    return code_below(tree, root, -1);
}

std::string free_tree_code(const Graph& tree)
{
    if (!is_tree(tree))
        throw InputError("free_tree_code requires a tree");
    std::string best;
    for (Vertex c : tree_centers(tree)) {
        auto code = rooted_tree_code(tree, c);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

void for_each_tree(int n, const std::function<void(const Graph&)>& visit)
{
    if (n < 1)
        return;
    if (n == 1) {
        visit(Graph::from_edge_list(1, {}));
        return;
    }
    for_each_tree(n - 1, [&](const Graph& parent) {
        // One attachment point per vertex orbit of the parent.
        std::map<std::string, Vertex> orbit_rep;
        for (Vertex p = 0; p < parent.order(); ++p)
            orbit_rep.try_emplace(rooted_tree_code(parent, p), p);
        std::vector<Vertex> points;
        for (const auto& [code, p] : orbit_rep)
            points.push_back(p);
        std::sort(points.begin(), points.end());

        for (Vertex p : points) {
            Graph child = add_leaf(parent, p);
            const Vertex added = parent.order();
            const std::string mine = rooted_tree_code(child, added);
            bool canonical = true;
            for (Vertex l = 0; l < child.order() && canonical; ++l)
                if (l != added && child.degree(l) == 1 && rooted_tree_code(child, l) < mine)
                    canonical = false;
            if (canonical)
                visit(child);
        }
    });
}

std::vector<Graph> all_trees(int n)
{
    std::vector<Graph> out;
    for_each_tree(n, [&](const Graph& t) { out.push_back(t); });
    return out;
}

Graph random_tree(int n, Rng& rng)
{
    if (n < 1)
        throw InputError("random_tree requires n >= 1");
    if (n <= 2)
        return path_graph(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (int& x : prufer)
        x = pick(rng);

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : prufer)
        ++degree[static_cast<std::size_t>(x)];
    std::vector<Edge> e;
    for (int x : prufer) {
        Vertex leaf = 0;
        while (degree[static_cast<std::size_t>(leaf)] != 1)
            ++leaf;
        e.emplace_back(leaf, x);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
    }
    Vertex a = -1, b = -1;
    for (Vertex v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            (a < 0 ? a : b) = v;
    e.emplace_back(a, b);
    return Graph::from_edge_list(n, e);
}

Graph random_connected_graph(int n, double edge_probability, Rng& rng)
{
    if (n < 1)
        throw InputError("random_connected_graph requires n >= 1");
    if (n > 1 && edge_probability <= 0.0)
        throw InputError("random_connected_graph needs a positive edge probability");
    std::bernoulli_distribution coin(edge_probability);
    for (;;) {
        std::vector<Edge> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, e);
        if (is_connected(g))
            return g;
    }
}

}  // namespace rainbowdom
