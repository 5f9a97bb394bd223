#include "rainbowdom/extremal.hpp"

#include <algorithm>
#include <functional>

namespace rainbowdom {

std::string_view to_string(CertificateIssue issue)
{
    switch (issue) {
    case CertificateIssue::none: return "none";
    case CertificateIssue::malformed: return "malformed";
    case CertificateIssue::not_a_partition: return "not_a_partition";
    case CertificateIssue::part_not_induced_p4: return "part_not_induced_p4";
    case CertificateIssue::center_not_interior: return "center_not_interior";
    case CertificateIssue::non_center_crossing: return "non_center_crossing";
    case CertificateIssue::centers_disconnected: return "centers_disconnected";
    }
    return "unknown";
}

namespace {

CertificateCheck fail(CertificateIssue issue) { return {false, issue}; }

/// Degree of v inside the 4-set `part`.
int degree_within(const Graph& g, Vertex v, const std::array<Vertex, 4>& part)
{
    int d = 0;
    for (Vertex w : part)
        if (w != v && g.adjacent(v, w))
            ++d;
    return d;
}

bool induces_p4(const Graph& g, const std::array<Vertex, 4>& part)
{
    int edges = 0, ends = 0;
    for (Vertex v : part) {
        int d = degree_within(g, v, part);
        if (d == 0 || d > 2)
            return false;
        edges += d;
        ends += d == 1;
    }
    // Three edges, two ends and no isolated vertex: a path on four vertices.
    return edges == 6 && ends == 2;
}

}  // namespace

CertificateCheck verify_certificate(const Graph& g, const P4Certificate& c)
{
    const int n = g.order();
    if (c.parts.size() != c.centers.size())
        return fail(CertificateIssue::malformed);

    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < c.parts.size(); ++i)
        for (Vertex v : c.parts[i]) {
            if (v < 0 || v >= n)
                return fail(CertificateIssue::malformed);
            if (owner[static_cast<std::size_t>(v)] != -1)
                return fail(CertificateIssue::not_a_partition);
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end())
        return fail(CertificateIssue::not_a_partition);

    std::vector<char> center(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (!induces_p4(g, c.parts[i]))
            return fail(CertificateIssue::part_not_induced_p4);
        const Vertex z = c.centers[i];
        if (z < 0 || z >= n || owner[static_cast<std::size_t>(z)] != static_cast<int>(i))
            return fail(CertificateIssue::malformed);
        if (degree_within(g, z, c.parts[i]) != 2)
            return fail(CertificateIssue::center_not_interior);
        center[static_cast<std::size_t>(z)] = 1;
    }

    for (auto [u, v] : g.edges())
        if (owner[static_cast<std::size_t>(u)] != owner[static_cast<std::size_t>(v)] &&
            !(center[static_cast<std::size_t>(u)] && center[static_cast<std::size_t>(v)]))
            return fail(CertificateIssue::non_center_crossing);

    if (!c.centers.empty()) {
        const Graph hub = induced_subgraph(g, c.centers);
        if (!is_connected(hub))
            return fail(CertificateIssue::centers_disconnected);
    }
    return {true, CertificateIssue::none};
}

namespace {

class PartitionSearch {
public:
    explicit PartitionSearch(const Graph& g) : g_(g), owner_(static_cast<std::size_t>(g.order()), -1) {}

    std::optional<P4Certificate> run()
    {
        if (g_.order() == 0 || g_.order() % 4 != 0)
            return std::nullopt;
        if (search(g_.order()))
            return cert_;
        return std::nullopt;
    }

private:
    bool free(Vertex v) const { return owner_[static_cast<std::size_t>(v)] == -1; }

    int free_degree(Vertex v) const
    {
        int d = 0;
        for (Vertex w : g_.neighbors(v))
            d += free(w);
        return d;
    }

    /// Non-center members may have no neighbors outside their part.
    bool admissible(const std::array<Vertex, 4>& part, Vertex center) const
    {
        for (Vertex x : part)
            if (x != center && degree_within(g_, x, part) != g_.degree(x))
                return false;
        for (Vertex w : g_.neighbors(center)) {
            if (std::find(part.begin(), part.end(), w) != part.end())
                continue;
            // An assigned neighbor outside the part must itself be a center.
            if (!free(w) && std::find(cert_.centers.begin(), cert_.centers.end(), w) == cert_.centers.end())
                return false;
        }
        return true;
    }

    /// Induced P4s on free vertices that contain v, each listed once in path order.
    std::vector<std::array<Vertex, 4>> paths_through(Vertex v) const
    {
        std::vector<std::array<Vertex, 4>> out;
        auto consider = [&](std::array<Vertex, 4> p) {
            if (induces_p4(g_, p))
                out.push_back(p);
        };
        for (Vertex b : g_.neighbors(v)) {
            if (!free(b))
                continue;
            for (Vertex c : g_.neighbors(b)) {
                if (c == v || !free(c))
                    continue;
                // v at an end: v b c d.
                for (Vertex d : g_.neighbors(c))
                    if (d != v && d != b && free(d))
                        consider({v, b, c, d});
            }
        }
        // v second: a v c d with a and c distinct neighbors of v.
        for (Vertex a : g_.neighbors(v)) {
            if (!free(a))
                continue;
            for (Vertex c : g_.neighbors(v)) {
                if (c == a || !free(c))
                    continue;
                for (Vertex d : g_.neighbors(c))
                    if (d != v && d != a && free(d))
                        consider({a, v, c, d});
            }
        }
        return out;
    }

    bool search(int remaining)
    {
        if (remaining == 0)
            return verify_certificate(g_, cert_).ok;

        // Most constrained free vertex, lowest index on ties.
        Vertex pick = -1;
        int best = g_.order() + 1;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (free(v)) {
                int d = free_degree(v);
                if (d < best) {
                    best = d;
                    pick = v;
                }
            }

        const int id = static_cast<int>(cert_.parts.size());
        for (const auto& part : paths_through(pick))
            for (Vertex center : {part[1], part[2]}) {
                if (!admissible(part, center))
                    continue;
                for (Vertex x : part)
                    owner_[static_cast<std::size_t>(x)] = id;
                cert_.parts.push_back(part);
                cert_.centers.push_back(center);
                if (search(remaining - 4))
                    return true;
                cert_.parts.pop_back();
                cert_.centers.pop_back();
                for (Vertex x : part)
                    owner_[static_cast<std::size_t>(x)] = -1;
            }
        return false;
    }

    const Graph& g_;
    std::vector<int> owner_;
    P4Certificate cert_;
};

}  // namespace

std::optional<P4Certificate> find_p4_certificate(const Graph& g)
{
    return PartitionSearch(g).run();
}

std::optional<P4Certificate> recognize_extremal_tree(const Graph& tree)
{
    if (!is_tree(tree))
        throw InputError("recognize_extremal_tree requires a tree");
    if (tree.order() < 3)
        throw InputError("recognize_extremal_tree requires n >= 3");
    return find_p4_certificate(tree);
}

bool isomorphic_small(const Graph& a, const Graph& b)
{
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count())
        return false;
    if (n > 10)
        throw CapExceeded("isomorphic_small handles at most 10 vertices");

    auto degrees = [](const Graph& g) {
        std::vector<int> d;
        for (Vertex v = 0; v < g.order(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b))
        return false;

    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(Vertex)> extend = [&](Vertex v) {
        if (v == n)
            return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || a.degree(v) != b.degree(w))
                continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                ok = a.adjacent(u, v) == b.adjacent(map[static_cast<std::size_t>(u)], w);
            if (!ok)
                continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend(v + 1))
                return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return extend(0);
}

ExtremalVerdict recognize_extremal_graph(const Graph& g)
{
    if (!is_connected(g))
        throw InputError("recognize_extremal_graph requires a connected graph");
    if (g.order() < 3)
        throw InputError("recognize_extremal_graph requires n >= 3");

    ExtremalVerdict verdict;
    if (g.order() % 4 != 0)
        return verdict;
    if (g.order() == 8 && isomorphic_small(g, corona(cycle_graph(4)))) {
        verdict.extremal = true;
        verdict.is_corona_c4 = true;
        return verdict;
    }
    verdict.certificate = find_p4_certificate(g);
    verdict.extremal = verdict.certificate.has_value();
    return verdict;
}

}  // namespace rainbowdom
