#pragma once

#include "rainbowdom/graph.hpp"
#include "rainbowdom/rational.hpp"
#include "rainbowdom/solvers.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rainbowdom {

/// The exact solvers a report uses. Replaceable so tests can inject faults.
struct SolverSet {
    std::function<SolveResult(const Graph&, const SolverOptions&)> gamma = domination_number;
    std::function<SolveResult(const Graph&, const SolverOptions&)> gamma_r2 = rainbow2_auto;
    std::function<SolveResult(const Graph&, const SolverOptions&)> gamma_roman = roman_domination_number;
};

/// One inequality lhs <= rhs. Unknown when an input value was not computed.
struct BoundEntry {
    std::string name;
    std::optional<std::int64_t> lhs;
    std::optional<Rational> rhs;

    bool known() const { return lhs && rhs; }
    bool holds() const { return known() && Rational(*lhs) <= *rhs; }
    bool tight() const { return known() && Rational(*lhs) == *rhs; }
};

struct ExactValues {
    std::optional<int> gamma, gamma_r2, gamma_roman;
};

struct BoundReport {
    int order = 0;
    ExactValues values;
    std::vector<BoundEntry> entries;

    const BoundEntry* find(std::string_view name) const;
    /// True when some computed entry fails.
    bool any_violation() const;
};

/// gamma(T) + ceil((leaves - penultimates) / max degree) for a tree with n >= 3.
int tree_lower_bound(const Graph& tree, const SolverOptions& opts = {});

/// Every known inequality that applies to the connected graph g.
BoundReport bound_report(const Graph& g, const SolverOptions& opts = {}, const SolverSet& solvers = {});

struct ProductReport {
    std::optional<int> gamma_g, gamma_h, gamma_product, gamma_r2_product, gamma_roman_product;
    std::optional<bool> rainbow_vizing;  // gamma_r2(G x H) >= gamma(G) gamma(H), open problem
    std::optional<bool> roman_vizing;    // gamma_R(G x H) >= gamma(G) gamma(H)
    std::optional<bool> clark_suen;      // 2 gamma(G x H) >= gamma(G) gamma(H)

    bool complete() const { return rainbow_vizing && roman_vizing && clark_suen; }
    /// A proven theorem failed: a solver bug.
    bool theorem_violated() const { return (roman_vizing && !*roman_vizing) || (clark_suen && !*clark_suen); }
};

/// Exact product values and the three Vizing-type verdicts. Values whose
/// solve runs out of budget stay empty.
ProductReport product_check(const Graph& g, const Graph& h, const SolverOptions& opts = {},
                            const SolverSet& solvers = {}, int max_product_order = 25);

}  // namespace rainbowdom
