#pragma once

#include "rainbowdom/graph.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rainbowdom {

inline constexpr int kMaxColors = 8;

/// Subset of {1..k}; color c is stored in bit c-1.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr ColorSet(std::initializer_list<int> colors)
    {
        for (int c : colors)
            insert(c);
    }
    static constexpr ColorSet from_mask(std::uint8_t mask)
    {
        ColorSet s;
        s.mask_ = mask;
        return s;
    }
    static constexpr ColorSet full(int k) { return from_mask(static_cast<std::uint8_t>((1u << k) - 1u)); }

    constexpr void insert(int color) { mask_ = static_cast<std::uint8_t>(mask_ | (1u << (color - 1))); }
    constexpr bool contains(int color) const { return (mask_ >> (color - 1)) & 1u; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::uint8_t mask() const { return mask_; }

    /// Largest color present, 0 for the empty set.
    constexpr int max_color() const { return 8 - std::countl_zero(mask_); }

    friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return from_mask(static_cast<std::uint8_t>(a.mask_ | b.mask_)); }
    friend constexpr bool operator==(ColorSet, ColorSet) = default;

private:
    std::uint8_t mask_ = 0;
};

struct RainbowAssignment {
    int k = 2;
    std::vector<ColorSet> colors;

    int order() const { return static_cast<int>(colors.size()); }
};

struct RomanAssignment {
    std::vector<int> values;
};

/// Subset of the vertices of a graph of order n.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : member_(static_cast<std::size_t>(n), 0) {}
    VertexSet(int n, std::initializer_list<Vertex> vs);

    int universe() const { return static_cast<int>(member_.size()); }
    bool contains(Vertex v) const { return member_.at(static_cast<std::size_t>(v)) != 0; }
    void insert(Vertex v) { member_.at(static_cast<std::size_t>(v)) = 1; }
    int size() const;
    std::vector<Vertex> elements() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<char> member_;
};

bool is_valid_krdf(const Graph& g, const RainbowAssignment& f);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_valid_roman(const Graph& g, const RomanAssignment& f);

int weight(const RainbowAssignment& f);
int weight(const RomanAssignment& f);

/// (V_0, V_1^1, V_1^2, V_2) for a 2-rainbow assignment.
struct RainbowPartition {
    VertexSet none, only_first, only_second, both;
};

RainbowPartition induced_partition(const RainbowAssignment& f);

/// 0 -> {}, 1 -> {1}, 2 -> {1,2}.
RainbowAssignment roman_to_rainbow(const RomanAssignment& g);

/// {1,2} on S, {} elsewhere.
RainbowAssignment dominating_set_to_rainbow(const VertexSet& s);

}  // namespace rainbowdom
