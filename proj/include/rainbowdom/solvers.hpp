#pragma once

#include "rainbowdom/graph.hpp"
#include "rainbowdom/labelings.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <variant>

namespace rainbowdom {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Largest k accepted by rainbow_domination_number.
inline constexpr int kMaxSolverColors = 3;

struct SolverOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
};

/// The search visited more nodes than allowed; the optimum is unknown.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(std::uint64_t nodes);
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

enum class SolveMethod { brute, branch_bound, tree_dp, via_product };

std::string_view to_string(SolveMethod m);

using Witness = std::variant<VertexSet, RainbowAssignment, RomanAssignment>;

struct SolveResult {
    int value = 0;
    Witness witness;
    SolveMethod method = SolveMethod::branch_bound;
    std::uint64_t nodes_explored = 0;
};

/// Exact domination number. Branches on the undominated vertex with the
/// fewest remaining dominators; greedy incumbent, coverage lower bound.
SolveResult domination_number(const Graph& g, const SolverOptions& opts = {});

/// Exact k-rainbow domination number for k in 1..3. Branches on an
/// unsatisfied (vertex, color) requirement; for k = 2 the incumbent is seeded
/// with the best available construction.
SolveResult rainbow_domination_number(const Graph& g, int k, const SolverOptions& opts = {});

/// Exact Roman domination number.
SolveResult roman_domination_number(const Graph& g, const SolverOptions& opts = {});

/// Exact 2-rainbow domination number of a tree in linear time.
SolveResult tree_rainbow2(const Graph& tree);

/// gamma(G x K2), returned as a 2-rainbow witness of G.
SolveResult rainbow2_via_product(const Graph& g, const SolverOptions& opts = {});

/// Tree DP for trees, branch-and-bound otherwise.
SolveResult rainbow2_auto(const Graph& g, const SolverOptions& opts = {});

}  // namespace rainbowdom
