#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rainbowdom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Row type of the bitset adjacency view; one bit per vertex.
using Bits = std::uint64_t;

/// Largest order the bitset view (and therefore every exact solver) accepts.
inline constexpr int kMaxBitsetOrder = 64;

/// Default cap on the order of a Cartesian product.
inline constexpr int kDefaultProductCap = 64;

/// Malformed input: bad vertex ids, unparseable text, wrong graph class.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A size limit (bitset width, product cap, solver cap) was exceeded.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a normalized graph. Self-loops and out-of-range endpoints throw
    /// InputError; duplicate edges are collapsed and flagged.
    static Graph from_edge_list(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adj_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// True when from_edge_list saw the same edge more than once.
    bool had_duplicate_edges() const noexcept { return had_duplicates_; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
    bool had_duplicates_ = false;
};

/// Word-per-vertex adjacency rows for graphs with at most kMaxBitsetOrder vertices.
struct BitAdjacency {
    int n = 0;
    Bits all = 0;
    std::vector<Bits> open;    // N(v)
    std::vector<Bits> closed;  // N[v]

    explicit BitAdjacency(const Graph& g);
};

inline Bits bit(Vertex v) { return Bits{1} << v; }

// Named families. Canonical labelings:
//   path/cycle: index order; star: center 0.
//   spider: center 0, leg i is (2i+1, 2i+2), direct leaves follow.
//   double star: centers 0 and 1, leaves of 0 then leaves of 1.
//   L_k: copy i occupies 4i..4i+3 in path order; its center is 4i+2.
//   corona: leaf of v is n+v.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

struct SpiderShape {
    int x = 0;  // legs of length two
    int y = 0;  // legs of length one
    Vertex center = 0;

    int order() const noexcept { return 2 * x + y + 1; }
    friend bool operator==(const SpiderShape&, const SpiderShape&) = default;
};

Graph spider_graph(const SpiderShape& shape);
Graph double_star_graph(int r, int s);
Graph l_k_graph(int k);

/// Designated center of copy i in l_k_graph.
inline Vertex l_k_center(int copy) { return 4 * copy + 2; }

Graph corona(const Graph& h);

/// Vertex (g, h) maps to g * |V(H)| + h.
Graph cartesian_product(const Graph& g, const Graph& h, int max_order = kDefaultProductCap);

/// Subgraph induced by `keep` (in that order); vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

struct StructuralProfile {
    std::optional<int> diameter;  // empty when disconnected or empty
    int leaf_count = 0;
    int penultimate_count = 0;
    int max_degree = 0;
    bool is_tree = false;
    int component_count = 0;
};

StructuralProfile structural_profile(const Graph& g);

/// Hop distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Spider decomposition with the smallest admissible center, if any.
std::optional<SpiderShape> classify_spider(const Graph& g);

// Text formats.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace rainbowdom
