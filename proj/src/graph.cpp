#include "rainbowdom/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace rainbowdom {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw InputError("negative vertex count");

    Graph g;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    std::size_t total = 0;
    for (auto& row : g.adj_) {
        std::sort(row.begin(), row.end());
        auto last = std::unique(row.begin(), row.end());
        if (last != row.end())
            g.had_duplicates_ = true;
        row.erase(last, row.end());
        total += row.size();
    }
    g.edge_count_ = total / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

BitAdjacency::BitAdjacency(const Graph& g) : n(g.order())
{
    if (n > kMaxBitsetOrder)
        throw CapExceeded("graph of order " + std::to_string(n) + " exceeds the bitset cap of " +
                          std::to_string(kMaxBitsetOrder));
    all = n == 64 ? ~Bits{0} : (bit(n) - 1);
    open.assign(static_cast<std::size_t>(n), 0);
    closed.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v))
            open[static_cast<std::size_t>(v)] |= bit(u);
        closed[static_cast<std::size_t>(v)] = open[static_cast<std::size_t>(v)] | bit(v);
    }
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InputError(what);
}

}  // namespace

Graph complete_graph(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph star_graph(int leaves)
{
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, e);
}

Graph spider_graph(const SpiderShape& shape)
{
    require(shape.x >= 0 && shape.y >= 0, "spider legs must be non-negative");
    require(shape.x + shape.y >= 2, "spider needs x + y >= 2");
    std::vector<Edge> e;
    for (int i = 0; i < shape.x; ++i) {
        e.emplace_back(0, 2 * i + 1);
        e.emplace_back(2 * i + 1, 2 * i + 2);
    }
    for (int j = 0; j < shape.y; ++j)
        e.emplace_back(0, 2 * shape.x + 1 + j);
    return Graph::from_edge_list(shape.order(), e);
}

Graph double_star_graph(int r, int s)
{
    require(s >= 1 && r >= s, "double star needs r >= s >= 1");
    std::vector<Edge> e{{0, 1}};
    for (int i = 0; i < r; ++i)
        e.emplace_back(0, 2 + i);
    for (int j = 0; j < s; ++j)
        e.emplace_back(1, 2 + r + j);
    return Graph::from_edge_list(r + s + 2, e);
}

Graph l_k_graph(int k)
{
    require(k >= 1, "L_k needs k >= 1");
    std::vector<Edge> e;
    for (int c = 0; c < k; ++c) {
        for (int i = 0; i < 3; ++i)
            e.emplace_back(4 * c + i, 4 * c + i + 1);
        if (c + 1 < k)
            e.emplace_back(l_k_center(c), l_k_center(c + 1));
    }
    return Graph::from_edge_list(4 * k, e);
}

Graph corona(const Graph& h)
{
    require(!h.empty(), "corona of an empty graph");
    const int n = h.order();
    auto e = h.edges();
    for (Vertex v = 0; v < n; ++v)
        e.emplace_back(v, n + v);
    return Graph::from_edge_list(2 * n, e);
}

Graph cartesian_product(const Graph& g, const Graph& h, int max_order)
{
    require(!g.empty() && !h.empty(), "Cartesian product of an empty graph");
    const long long order = static_cast<long long>(g.order()) * h.order();
    if (order > max_order)
        throw CapExceeded("product order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));

    const int nh = h.order();
    auto id = [nh](Vertex a, Vertex b) { return a * nh + b; };
    std::vector<Edge> e;
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [b1, b2] : h.edges())
            e.emplace_back(id(a, b1), id(a, b2));
    for (auto [a1, a2] : g.edges())
        for (Vertex b = 0; b < nh; ++b)
            e.emplace_back(id(a1, b), id(a2, b));
    return Graph::from_edge_list(static_cast<int>(order), e);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        auto& slot = index.at(static_cast<std::size_t>(keep[i]));
        if (slot != -1)
            throw InputError("duplicate vertex in induced subgraph selection");
        slot = static_cast<int>(i);
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : g.neighbors(keep[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                e.emplace_back(static_cast<int>(i), j);
        }
    return Graph::from_edge_list(static_cast<int>(keep.size()), e);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> q;
    dist.at(static_cast<std::size_t>(source)) = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

namespace {

int count_components(const Graph& g)
{
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    int components = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        ++components;
        for (Vertex v = 0; auto d : bfs_distances(g, s)) {
            if (d >= 0)
                seen[static_cast<std::size_t>(v)] = 1;
            ++v;
        }
    }
    return components;
}

}  // namespace

bool is_connected(const Graph& g)
{
    return g.order() > 0 && count_components(g) == 1;
}

bool is_tree(const Graph& g)
{
    return is_connected(g) && g.edge_count() + 1 == static_cast<std::size_t>(g.order());
}

StructuralProfile structural_profile(const Graph& g)
{
    StructuralProfile p;
    const int n = g.order();
    p.component_count = count_components(g);
    p.is_tree = p.component_count == 1 && g.edge_count() + 1 == static_cast<std::size_t>(n);

    std::vector<char> penultimate(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        p.max_degree = std::max(p.max_degree, g.degree(v));
        if (g.degree(v) == 1) {
            ++p.leaf_count;
            penultimate[static_cast<std::size_t>(g.neighbors(v)[0])] = 1;
        }
    }
    p.penultimate_count = static_cast<int>(std::count(penultimate.begin(), penultimate.end(), 1));

    if (p.component_count == 1) {
        int diam = 0;
        for (Vertex s = 0; s < n; ++s)
            for (int d : bfs_distances(g, s))
                diam = std::max(diam, d);
        p.diameter = diam;
    }
    return p;
}

std::optional<SpiderShape> classify_spider(const Graph& g)
{
    if (g.order() < 3 || !is_tree(g))
        return std::nullopt;
    for (Vertex c = 0; c < g.order(); ++c) {
        SpiderShape shape{0, 0, c};
        bool ok = true;
        for (Vertex w : g.neighbors(c)) {
            if (g.degree(w) == 1) {
                ++shape.y;
            } else if (g.degree(w) == 2) {
                auto nb = g.neighbors(w);
                Vertex other = nb[0] == c ? nb[1] : nb[0];
                if (g.degree(other) != 1) {
                    ok = false;
                    break;
                }
                ++shape.x;
            } else {
                ok = false;
                break;
            }
        }
        if (ok && shape.x + shape.y >= 2)
            return shape;
    }
    return std::nullopt;
}

Graph read_edge_list(std::istream& in)
{
    long long n = 0, m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw InputError("edge list: expected header \"n m\"");
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge list: endpoint out of range on edge " + std::to_string(i));
        e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), e);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

Graph parse_graph6(std::string_view text)
{
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw InputError("graph6: empty string");
    for (char ch : text)
        if (ch < 63 || ch > 126)
            throw InputError("graph6: byte outside 63..126");
    if (text[0] == 126)
        throw InputError("graph6: only orders up to 62 are supported");

    const int n = text[0] - 63;
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (pairs + 5) / 6;
    if (text.size() != 1 + bytes)
        throw InputError("graph6: expected " + std::to_string(1 + bytes) + " bytes for n=" + std::to_string(n) +
                         ", got " + std::to_string(text.size()));

    std::vector<Edge> e;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                e.emplace_back(i, j);
        }
    // Padding bits in the final byte must be zero.
    for (; k < bytes * 6; ++k)
        if (((text[1 + k / 6] - 63) >> (5 - k % 6)) & 1)
            throw InputError("graph6: nonzero padding bits");
    return Graph::from_edge_list(n, e);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > 62)
        throw CapExceeded("graph6 writer supports orders up to 62");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, used = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

}  // namespace rainbowdom
