#pragma once

// Exhaustive reference values. Deliberately naive: plain neighbor lists and
// full enumeration, sharing nothing with the library's search code.

#include "rainbowdom/graph.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using rainbowdom::Graph;
using Mask = std::uint32_t;

inline std::vector<Mask> open_masks(const Graph& g)
{
    if (g.order() > 20)
        throw std::length_error("oracle: graph too large");
    std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            out[static_cast<std::size_t>(v)] |= Mask{1} << u;
    return out;
}

inline int gamma(const Graph& g)
{
    const int n = g.order();
    const auto nb = open_masks(g);
    int best = n;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (std::popcount(s) >= best)
            continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            ok = ((s >> v) & 1u) || (nb[static_cast<std::size_t>(v)] & s);
        if (ok)
            best = std::popcount(s);
    }
    return best;
}

// a = vertices holding color 1, b = vertices holding color 2
inline int gamma_r2(const Graph& g)
{
    const int n = g.order();
    if (n > 13)
        throw std::length_error("oracle: gamma_r2 limited to 13 vertices");
    const auto nb = open_masks(g);
    const Mask full = (Mask{1} << n) - 1;
    int best = 2 * n;
    for (Mask a = 0; a <= full; ++a) {
        const int wa = std::popcount(a);
        if (wa >= best)
            continue;
        for (Mask b = 0; b <= full; ++b) {
            const int w = wa + std::popcount(b);
            if (w >= best)
                continue;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (((a | b) >> v) & 1u)
                    continue;
                const Mask nv = nb[static_cast<std::size_t>(v)];
                ok = (nv & a) && (nv & b);
            }
            if (ok)
                best = w;
        }
    }
    return best;
}

inline int gamma_rk(const Graph& g, int k)
{
    const int n = g.order();
    const int sets = 1 << k;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    int best = k * n;
    for (;;) {
        int w = 0;
        for (int c : f)
            w += std::popcount(static_cast<unsigned>(c));
        if (w < best) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (f[static_cast<std::size_t>(v)])
                    continue;
                int seen = 0;
                for (int u : g.neighbors(v))
                    seen |= f[static_cast<std::size_t>(u)];
                ok = seen == sets - 1;
            }
            if (ok)
                best = w;
        }
        int i = 0;
        while (i < n && ++f[static_cast<std::size_t>(i)] == sets)
            f[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return best;
    }
}

inline int gamma_roman(const Graph& g)
{
    const int n = g.order();
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    int best = 2 * n;
    for (;;) {
        int w = 0;
        for (int x : f)
            w += x;
        if (w < best) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (f[static_cast<std::size_t>(v)])
                    continue;
                ok = false;
                for (int u : g.neighbors(v))
                    ok = ok || f[static_cast<std::size_t>(u)] == 2;
            }
            if (ok)
                best = w;
        }
        int i = 0;
        while (i < n && ++f[static_cast<std::size_t>(i)] == 3)
            f[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return best;
    }
}

}  // namespace oracle
