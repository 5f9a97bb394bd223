#include "rainbowdom/labelings.hpp"

#include <algorithm>
#include <string>

namespace rainbowdom {

VertexSet::VertexSet(int n, std::initializer_list<Vertex> vs) : VertexSet(n)
{
    for (Vertex v : vs)
        insert(v);
}

int VertexSet::size() const
{
    return static_cast<int>(std::count(member_.begin(), member_.end(), 1));
}

std::vector<Vertex> VertexSet::elements() const
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < member_.size(); ++v)
        if (member_[v])
            out.push_back(static_cast<Vertex>(v));
    return out;
}

namespace {

void check_length(const Graph& g, std::size_t len, const char* what)
{
    if (len != static_cast<std::size_t>(g.order()))
        throw InputError(std::string(what) + " has length " + std::to_string(len) + " but the graph has " +
                         std::to_string(g.order()) + " vertices");
}

}  // namespace

bool is_valid_krdf(const Graph& g, const RainbowAssignment& f)
{
    check_length(g, f.colors.size(), "rainbow assignment");
    if (f.k < 1 || f.k > kMaxColors)
        throw InputError("rainbow assignment needs 1 <= k <= 8");
    const ColorSet all = ColorSet::full(f.k);
    for (Vertex v = 0; v < g.order(); ++v) {
        const ColorSet c = f.colors[static_cast<std::size_t>(v)];
        if (c.max_color() > f.k)
            return false;
        if (!c.empty())
            continue;
        ColorSet seen;
        for (Vertex u : g.neighbors(v))
            seen = seen | f.colors[static_cast<std::size_t>(u)];
        if ((seen.mask() & all.mask()) != all.mask())
            return false;
    }
    return true;
}

bool is_dominating(const Graph& g, const VertexSet& s)
{
    check_length(g, static_cast<std::size_t>(s.universe()), "vertex set");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v))
            continue;
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return s.contains(u); }))
            return false;
    }
    return true;
}

bool is_valid_roman(const Graph& g, const RomanAssignment& f)
{
    check_length(g, f.values.size(), "Roman assignment");
    for (int x : f.values)
        if (x < 0 || x > 2)
            throw InputError("Roman values must lie in {0,1,2}");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f.values[static_cast<std::size_t>(v)] != 0)
            continue;
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return f.values[static_cast<std::size_t>(u)] == 2; }))
            return false;
    }
    return true;
}

int weight(const RainbowAssignment& f)
{
    int w = 0;
    for (ColorSet c : f.colors)
        w += c.size();
    return w;
}

int weight(const RomanAssignment& f)
{
    int w = 0;
    for (int x : f.values)
        w += x;
    return w;
}

RainbowPartition induced_partition(const RainbowAssignment& f)
{
    if (f.k != 2)
        throw InputError("induced partition is defined for k = 2");
    const int n = f.order();
    RainbowPartition p{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (Vertex v = 0; v < n; ++v) {
        switch (f.colors[static_cast<std::size_t>(v)].mask()) {
        case 0: p.none.insert(v); break;
        case 1: p.only_first.insert(v); break;
        case 2: p.only_second.insert(v); break;
        case 3: p.both.insert(v); break;
        default: throw InputError("color outside {1,2} in a 2-rainbow assignment");
        }
    }
    return p;
}

RainbowAssignment roman_to_rainbow(const RomanAssignment& g)
{
    RainbowAssignment f{2, {}};
    f.colors.reserve(g.values.size());
    for (int x : g.values)
        f.colors.push_back(x == 0 ? ColorSet{} : x == 1 ? ColorSet{1} : ColorSet{1, 2});
    return f;
}

RainbowAssignment dominating_set_to_rainbow(const VertexSet& s)
{
    RainbowAssignment f{2, std::vector<ColorSet>(static_cast<std::size_t>(s.universe()))};
    for (Vertex v : s.elements())
        f.colors[static_cast<std::size_t>(v)] = ColorSet{1, 2};
    return f;
}

}  // namespace rainbowdom
