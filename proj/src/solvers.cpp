#include "rainbowdom/solvers.hpp"

#include "rainbowdom/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>

namespace rainbowdom {

BudgetExhausted::BudgetExhausted(std::uint64_t nodes)
    : std::runtime_error("node budget exhausted after " + std::to_string(nodes) + " nodes"), nodes_(nodes)
{
}

std::string_view to_string(SolveMethod m)
{
    switch (m) {
    case SolveMethod::brute: return "brute";
    case SolveMethod::branch_bound: return "branch_bound";
    case SolveMethod::tree_dp: return "tree_dp";
    case SolveMethod::via_product: return "via_product";
    }
    return "unknown";
}

namespace {

int popcount(Bits b) { return std::popcount(b); }

/// Position of each vertex in the order (descending degree, then index).
std::vector<int> static_rank(const Graph& g)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return rank;
}

/// Smallest m such that the m largest coverages reach `demand`, or nullopt.
std::optional<int> cover_bound(std::vector<int>& cov, int demand)
{
    if (demand <= 0)
        return 0;
    std::sort(cov.begin(), cov.end(), std::greater<>());
    int m = 0;
    for (int c : cov) {
        if (c <= 0)
            break;
        demand -= c;
        ++m;
        if (demand <= 0)
            return m;
    }
    return std::nullopt;
}

Bits greedy_dominating_set(const BitAdjacency& adj)
{
    Bits chosen = 0, dominated = 0;
    while (dominated != adj.all) {
        Vertex best = -1;
        int best_cov = -1;
        for (Vertex u = 0; u < adj.n; ++u) {
            int c = popcount(adj.closed[static_cast<std::size_t>(u)] & ~dominated);
            if (c > best_cov) {
                best_cov = c;
                best = u;
            }
        }
        chosen |= bit(best);
        dominated |= adj.closed[static_cast<std::size_t>(best)];
    }
    return chosen;
}

VertexSet to_vertex_set(int n, Bits b)
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if (b & bit(v))
            s.insert(v);
    return s;
}

class NodeCounter {
public:
    explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
    void tick()
    {
        if (++nodes_ > budget_)
            throw BudgetExhausted(nodes_);
    }
    std::uint64_t count() const { return nodes_; }

private:
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------- domination

class DominationSearch {
public:
    DominationSearch(const Graph& g, const BitAdjacency& adj, const SolverOptions& opts)
        : adj_(adj), rank_(static_rank(g)), counter_(opts.node_budget)
    {
        best_set_ = greedy_dominating_set(adj_);
        best_ = popcount(best_set_);
    }

    void run() { search(0, 0, 0, 0); }

    int best() const { return best_; }
    Bits best_set() const { return best_set_; }
    std::uint64_t nodes() const { return counter_.count(); }

private:
    void search(Bits chosen, Bits dominated, Bits forbidden, int count)
    {
        counter_.tick();
        const Bits undominated = adj_.all & ~dominated;
        if (undominated == 0) {
            if (count < best_) {
                best_ = count;
                best_set_ = chosen;
            }
            return;
        }
        if (count + 1 >= best_)
            return;

        const Bits candidates = adj_.all & ~forbidden & ~chosen;
        std::vector<int> cov;
        cov.reserve(static_cast<std::size_t>(adj_.n));
        for (Bits c = candidates; c; c &= c - 1)
            cov.push_back(popcount(closed(std::countr_zero(c)) & undominated));
        auto lb = cover_bound(cov, popcount(undominated));
        if (!lb || count + *lb >= best_)
            return;

        Vertex pick = -1;
        int pick_options = std::numeric_limits<int>::max();
        for (Bits u = undominated; u; u &= u - 1) {
            Vertex v = std::countr_zero(u);
            int options = popcount(closed(v) & candidates);
            if (options < pick_options || (options == pick_options && rank_[static_cast<std::size_t>(v)] <
                                                                          rank_[static_cast<std::size_t>(pick)])) {
                pick = v;
                pick_options = options;
            }
        }
        if (pick_options == 0)
            return;

        std::vector<std::pair<int, Vertex>> branches;
        for (Bits c = closed(pick) & candidates; c; c &= c - 1) {
            Vertex u = std::countr_zero(c);
            branches.emplace_back(popcount(closed(u) & undominated), u);
        }
        std::sort(branches.begin(), branches.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first > b.first;
            return rank_[static_cast<std::size_t>(a.second)] < rank_[static_cast<std::size_t>(b.second)];
        });
        for (auto [gain, u] : branches) {
            search(chosen | bit(u), dominated | closed(u), forbidden, count + 1);
            forbidden |= bit(u);
        }
    }

    Bits closed(Vertex v) const { return adj_.closed[static_cast<std::size_t>(v)]; }

    const BitAdjacency& adj_;
    std::vector<int> rank_;
    NodeCounter counter_;
    int best_ = 0;
    Bits best_set_ = 0;
};

// ------------------------------------------------------------ k-rainbow

struct RainbowState {
    std::array<Bits, kMaxSolverColors> color{};   // vertices holding color i
    std::array<Bits, kMaxSolverColors> seen{};    // vertices with a neighbor holding color i
    std::array<Bits, kMaxSolverColors> forbid{};  // vertices that may not receive color i
    int weight = 0;
};

class RainbowSearch {
public:
    RainbowSearch(const Graph& g, const BitAdjacency& adj, int k, const SolverOptions& opts)
        : adj_(adj), k_(k), rank_(static_rank(g)), counter_(opts.node_budget)
    {
    }

    void seed(const RainbowAssignment& f)
    {
        const int w = weight(f);
        if (best_ && w >= best_weight_)
            return;
        best_weight_ = w;
        best_ = f;
    }

    void run() { search(RainbowState{}); }

    int best_weight() const { return best_weight_; }
    const RainbowAssignment& best() const { return *best_; }
    std::uint64_t nodes() const { return counter_.count(); }

private:
    struct Option {
        int gain;
        Vertex v;
        int color;
    };

    Bits open(Vertex v) const { return adj_.open[static_cast<std::size_t>(v)]; }

    void search(const RainbowState& s)
    {
        counter_.tick();
        Bits nonempty = 0;
        for (int i = 0; i < k_; ++i)
            nonempty |= s.color[static_cast<std::size_t>(i)];

        std::array<Bits, kMaxSolverColors> need{};
        int demand = 0;
        for (int i = 0; i < k_; ++i) {
            need[static_cast<std::size_t>(i)] = adj_.all & ~nonempty & ~s.seen[static_cast<std::size_t>(i)];
            demand += popcount(need[static_cast<std::size_t>(i)]);
        }
        if (demand == 0) {
            if (s.weight < best_weight_)
                record(s);
            return;
        }
        if (s.weight + 1 >= best_weight_)
            return;

        auto gain = [&](Vertex u, int j) {
            int g = popcount(open(u) & need[static_cast<std::size_t>(j)]);
            if (!(nonempty & bit(u)))
                for (int i = 0; i < k_; ++i)
                    g += static_cast<int>((need[static_cast<std::size_t>(i)] >> u) & 1);
            return g;
        };

        std::array<Bits, kMaxSolverColors> avail{};
        std::vector<int> cov;
        cov.reserve(static_cast<std::size_t>(adj_.n * k_));
        for (int j = 0; j < k_; ++j) {
            avail[static_cast<std::size_t>(j)] =
                adj_.all & ~s.color[static_cast<std::size_t>(j)] & ~s.forbid[static_cast<std::size_t>(j)];
            for (Bits a = avail[static_cast<std::size_t>(j)]; a; a &= a - 1)
                cov.push_back(gain(std::countr_zero(a), j));
        }
        auto lb = cover_bound(cov, demand);
        if (!lb || s.weight + *lb >= best_weight_)
            return;

        // Requirement with the fewest ways to satisfy it.
        Vertex pick = -1;
        int pick_color = 0, pick_options = std::numeric_limits<int>::max();
        for (int i = 0; i < k_; ++i)
            for (Bits b = need[static_cast<std::size_t>(i)]; b; b &= b - 1) {
                Vertex v = std::countr_zero(b);
                int options = popcount(open(v) & avail[static_cast<std::size_t>(i)]);
                for (int j = 0; j < k_; ++j)
                    options += static_cast<int>((avail[static_cast<std::size_t>(j)] >> v) & 1);
                if (options < pick_options || (options == pick_options && rank_[static_cast<std::size_t>(v)] <
                                                                              rank_[static_cast<std::size_t>(pick)])) {
                    pick = v;
                    pick_color = i;
                    pick_options = options;
                }
            }
        if (pick_options == 0)
            return;

        std::vector<Option> options;
        for (int j = 0; j < k_; ++j)
            if (avail[static_cast<std::size_t>(j)] & bit(pick))
                options.push_back({gain(pick, j), pick, j});
        for (Bits b = open(pick) & avail[static_cast<std::size_t>(pick_color)]; b; b &= b - 1) {
            Vertex u = std::countr_zero(b);
            options.push_back({gain(u, pick_color), u, pick_color});
        }
        std::stable_sort(options.begin(), options.end(), [&](const Option& a, const Option& b) {
            if (a.gain != b.gain)
                return a.gain > b.gain;
            if (a.v != b.v)
                return rank_[static_cast<std::size_t>(a.v)] < rank_[static_cast<std::size_t>(b.v)];
            return a.color < b.color;
        });

        RainbowState next = s;
        for (const Option& o : options) {
            RainbowState child = next;
            child.color[static_cast<std::size_t>(o.color)] |= bit(o.v);
            child.seen[static_cast<std::size_t>(o.color)] |= open(o.v);
            child.weight += 1;
            search(child);
            next.forbid[static_cast<std::size_t>(o.color)] |= bit(o.v);
        }
    }

    void record(const RainbowState& s)
    {
        RainbowAssignment f{k_, std::vector<ColorSet>(static_cast<std::size_t>(adj_.n))};
        for (int i = 0; i < k_; ++i)
            for (Bits b = s.color[static_cast<std::size_t>(i)]; b; b &= b - 1)
                f.colors[static_cast<std::size_t>(std::countr_zero(b))].insert(i + 1);
        best_weight_ = s.weight;
        best_ = std::move(f);
    }

    const BitAdjacency& adj_;
    int k_;
    std::vector<int> rank_;
    NodeCounter counter_;
    int best_weight_ = std::numeric_limits<int>::max();
    std::optional<RainbowAssignment> best_;
};

// ---------------------------------------------------------------- Roman

class RomanSearch {
public:
    RomanSearch(const Graph& g, const BitAdjacency& adj, const SolverOptions& opts)
        : adj_(adj), rank_(static_rank(g)), counter_(opts.node_budget)
    {
        // Incumbent: the cheaper of all-ones and 2 on a greedy dominating set.
        const Bits dom = greedy_dominating_set(adj_);
        if (2 * popcount(dom) < adj_.n) {
            best_two_ = dom;
            best_one_ = 0;
        } else {
            best_two_ = 0;
            best_one_ = adj_.all;
        }
        best_ = 2 * popcount(best_two_) + popcount(best_one_);
    }

    void run() { search(0, 0, 0, 0); }

    int best() const { return best_; }
    std::uint64_t nodes() const { return counter_.count(); }

    RomanAssignment witness() const
    {
        RomanAssignment f{std::vector<int>(static_cast<std::size_t>(adj_.n), 0)};
        for (Vertex v = 0; v < adj_.n; ++v)
            f.values[static_cast<std::size_t>(v)] = (best_two_ & bit(v)) ? 2 : (best_one_ & bit(v)) ? 1 : 0;
        return f;
    }

private:
    Bits closed(Vertex v) const { return adj_.closed[static_cast<std::size_t>(v)]; }

    void search(Bits two, Bits covered, Bits one, Bits forbid_two)
    {
        counter_.tick();
        const int cost = 2 * popcount(two) + popcount(one);
        const Bits open_demand = adj_.all & ~covered & ~one;
        if (open_demand == 0) {
            if (cost < best_) {
                best_ = cost;
                best_two_ = two;
                best_one_ = one;
            }
            return;
        }
        if (cost + 1 >= best_)
            return;

        const Bits avail = adj_.all & ~two & ~forbid_two;
        std::vector<int> cov;
        for (Bits a = avail; a; a &= a - 1) {
            int c = popcount(closed(std::countr_zero(a)) & open_demand);
            if (c > 0)
                cov.push_back(c);
        }
        std::sort(cov.begin(), cov.end(), std::greater<>());
        const int demand = popcount(open_demand);
        int lb = demand, covered_so_far = 0;
        for (std::size_t m = 0; m < cov.size(); ++m) {
            covered_so_far += cov[m];
            lb = std::min(lb, 2 * static_cast<int>(m + 1) + std::max(0, demand - covered_so_far));
        }
        if (cost + lb >= best_)
            return;

        Vertex pick = -1;
        int pick_options = std::numeric_limits<int>::max();
        for (Bits b = open_demand; b; b &= b - 1) {
            Vertex v = std::countr_zero(b);
            int options = popcount(closed(v) & avail);
            if (options < pick_options || (options == pick_options && rank_[static_cast<std::size_t>(v)] <
                                                                          rank_[static_cast<std::size_t>(pick)])) {
                pick = v;
                pick_options = options;
            }
        }

        // Each branch is (gain, vertex); vertex -1 stands for "pick gets 1".
        std::vector<std::pair<int, Vertex>> branches;
        for (Bits b = closed(pick) & avail; b; b &= b - 1) {
            Vertex u = std::countr_zero(b);
            branches.emplace_back(popcount(closed(u) & open_demand), u);
        }
        std::sort(branches.begin(), branches.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first > b.first;
            return rank_[static_cast<std::size_t>(a.second)] < rank_[static_cast<std::size_t>(b.second)];
        });
        // A 2 that covers fewer than two open vertices is no better than a 1.
        auto split = std::find_if(branches.begin(), branches.end(), [](const auto& br) { return br.first < 2; });
        branches.insert(split, {1, -1});

        for (auto [gain, u] : branches) {
            if (u < 0) {
                search(two, covered, one | bit(pick), forbid_two);
            } else {
                search(two | bit(u), covered | closed(u), one, forbid_two);
                forbid_two |= bit(u);
            }
        }
    }

    const BitAdjacency& adj_;
    std::vector<int> rank_;
    NodeCounter counter_;
    int best_ = 0;
    Bits best_two_ = 0, best_one_ = 0;
};

// ------------------------------------------------------------- tree DP

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// State index: color * 4 + still-required-from-parent.
constexpr int state(int color, int required) { return color * 4 + required; }

struct TreeTables {
    std::vector<std::array<int, 16>> cost;
    // For the empty-color case: per child, for each union mask after that
    // child, the (previous mask, child color) that achieved it.
    std::vector<std::vector<std::array<std::pair<int, int>, 4>>> back;
    std::vector<std::vector<Vertex>> children;
};

}  // namespace

SolveResult domination_number(const Graph& g, const SolverOptions& opts)
{
    if (g.empty())
        return {0, VertexSet(0), SolveMethod::branch_bound, 0};
    const BitAdjacency adj(g);
    DominationSearch search(g, adj, opts);
    search.run();
    return {search.best(), to_vertex_set(g.order(), search.best_set()), SolveMethod::branch_bound, search.nodes()};
}

SolveResult rainbow_domination_number(const Graph& g, int k, const SolverOptions& opts)
{
    if (k < 1 || k > kMaxSolverColors)
        throw InputError("rainbow solver supports 1 <= k <= 3");
    if (g.empty())
        return {0, RainbowAssignment{k, {}}, SolveMethod::branch_bound, 0};
    const BitAdjacency adj(g);
    RainbowSearch search(g, adj, k, opts);

    // Every vertex colored {1} is always valid.
    search.seed(RainbowAssignment{k, std::vector<ColorSet>(static_cast<std::size_t>(g.order()), ColorSet{1})});
    {
        RainbowAssignment f{k, std::vector<ColorSet>(static_cast<std::size_t>(g.order()))};
        for (Bits d = greedy_dominating_set(adj); d; d &= d - 1)
            f.colors[static_cast<std::size_t>(std::countr_zero(d))] = ColorSet::full(k);
        search.seed(f);
    }
    if (k == 2 && is_connected(g)) {
        search.seed(diametral_rdf(g).assignment);
        if (g.order() >= 3 && is_tree(g))
            search.seed(tree_rdf_three_quarters(g).assignment);
    }

    search.run();
    return {search.best_weight(), search.best(), SolveMethod::branch_bound, search.nodes()};
}

SolveResult roman_domination_number(const Graph& g, const SolverOptions& opts)
{
    if (g.empty())
        return {0, RomanAssignment{}, SolveMethod::branch_bound, 0};
    const BitAdjacency adj(g);
    RomanSearch search(g, adj, opts);
    search.run();
    return {search.best(), search.witness(), SolveMethod::branch_bound, search.nodes()};
}

SolveResult tree_rainbow2(const Graph& tree)
{
    if (!is_tree(tree))
        throw InputError("tree_rainbow2 requires a tree");
    const int n = tree.order();

    // Root at 0; BFS order gives parents before children.
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    TreeTables t;
    t.children.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        for (Vertex w : tree.neighbors(v))
            if (w != parent[static_cast<std::size_t>(v)]) {
                parent[static_cast<std::size_t>(w)] = v;
                t.children[static_cast<std::size_t>(v)].push_back(w);
                order.push_back(w);
            }
    }

    t.cost.assign(static_cast<std::size_t>(n), {});
    t.back.resize(static_cast<std::size_t>(n));

    // Cheapest child state compatible with the parent holding `parent_color`.
    auto best_child = [&](Vertex c, int parent_color) {
        int best = kInf;
        for (int s = 0; s < 16; ++s) {
            int required = s & 3;
            if ((required & ~parent_color) == 0)
                best = std::min(best, t.cost[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]);
        }
        return best;
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        auto& cost = t.cost[static_cast<std::size_t>(v)];
        cost.fill(kInf);
        const auto& kids = t.children[static_cast<std::size_t>(v)];

        for (int color = 1; color < 4; ++color) {
            int total = std::popcount(static_cast<unsigned>(color));
            for (Vertex c : kids)
                total += best_child(c, color);
            cost[static_cast<std::size_t>(state(color, 0))] = std::min(total, kInf);
        }

        // Empty color: knapsack over the union of children's colors. Children
        // left empty must be fully satisfied already (required set empty).
        std::array<int, 4> g{0, kInf, kInf, kInf};
        auto& back = t.back[static_cast<std::size_t>(v)];
        back.assign(kids.size(), {});
        for (std::size_t i = 0; i < kids.size(); ++i) {
            std::array<int, 4> next{kInf, kInf, kInf, kInf};
            const auto& cc = t.cost[static_cast<std::size_t>(kids[i])];
            for (int mask = 0; mask < 4; ++mask) {
                if (g[static_cast<std::size_t>(mask)] >= kInf)
                    continue;
                for (int ccol = 0; ccol < 4; ++ccol) {
                    int c = cc[static_cast<std::size_t>(state(ccol, 0))];
                    if (c >= kInf)
                        continue;
                    int to = mask | ccol;
                    int val = g[static_cast<std::size_t>(mask)] + c;
                    if (val < next[static_cast<std::size_t>(to)]) {
                        next[static_cast<std::size_t>(to)] = val;
                        back[i][static_cast<std::size_t>(to)] = {mask, ccol};
                    }
                }
            }
            g = next;
        }
        for (int mask = 0; mask < 4; ++mask)
            cost[static_cast<std::size_t>(state(0, 3 & ~mask))] = g[static_cast<std::size_t>(mask)];
    }

    // Root must not require anything from above.
    int root_state = -1, value = kInf;
    for (int color = 0; color < 4; ++color) {
        int c = t.cost[0][static_cast<std::size_t>(state(color, 0))];
        if (c < value) {
            value = c;
            root_state = state(color, 0);
        }
    }

    RainbowAssignment f{2, std::vector<ColorSet>(static_cast<std::size_t>(n))};
    std::vector<int> chosen(static_cast<std::size_t>(n), -1);
    chosen[0] = root_state;
    for (Vertex v : order) {
        const int s = chosen[static_cast<std::size_t>(v)];
        const int color = s / 4;
        f.colors[static_cast<std::size_t>(v)] = ColorSet::from_mask(static_cast<std::uint8_t>(color));
        const auto& kids = t.children[static_cast<std::size_t>(v)];
        if (color != 0) {
            for (Vertex c : kids) {
                const auto& cc = t.cost[static_cast<std::size_t>(c)];
                int best = kInf, arg = -1;
                for (int cs = 0; cs < 16; ++cs)
                    if (((cs & 3) & ~color) == 0 && cc[static_cast<std::size_t>(cs)] < best) {
                        best = cc[static_cast<std::size_t>(cs)];
                        arg = cs;
                    }
                chosen[static_cast<std::size_t>(c)] = arg;
            }
        } else {
            int mask = 3 & ~(s & 3);
            const auto& back = t.back[static_cast<std::size_t>(v)];
            for (std::size_t i = kids.size(); i-- > 0;) {
                auto [prev, ccol] = back[i][static_cast<std::size_t>(mask)];
                chosen[static_cast<std::size_t>(kids[i])] = state(ccol, 0);
                mask = prev;
            }
        }
    }
    return {value, std::move(f), SolveMethod::tree_dp, static_cast<std::uint64_t>(n)};
}

SolveResult rainbow2_via_product(const Graph& g, const SolverOptions& opts)
{
    const Graph product = cartesian_product(g, complete_graph(2), kMaxBitsetOrder);
    SolveResult dom = domination_number(product, opts);
    RainbowAssignment f{2, std::vector<ColorSet>(static_cast<std::size_t>(g.order()))};
    for (Vertex x : std::get<VertexSet>(dom.witness).elements())
        f.colors[static_cast<std::size_t>(x / 2)].insert(x % 2 + 1);
    return {dom.value, std::move(f), SolveMethod::via_product, dom.nodes_explored};
}

SolveResult rainbow2_auto(const Graph& g, const SolverOptions& opts)
{
    if (is_tree(g))
        return tree_rainbow2(g);
    return rainbow_domination_number(g, 2, opts);
}

}  // namespace rainbowdom
