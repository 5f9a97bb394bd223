#pragma once

#include "rainbowdom/graph.hpp"
#include "rainbowdom/labelings.hpp"
#include "rainbowdom/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbowdom {

/// A construction produced an invalid assignment or broke its bound.
class ConstructionFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Provenance {
    spider_case_A,   // x >= 3 or y >= 2
    spider_case_B,   // x = 2, y <= 1
    spider_p4,
    tree_case1,      // penultimate vertex of degree > 2
    tree_case2,      // penultimate and its parent both of degree 2
    tree_case31,     // whole tree is a spider centred at the parent
    tree_case32,     // split off a spider
    tree_base,       // diameter <= 3
    diametral,
    path_pattern,
};

std::string_view to_string(Provenance p);

struct ConstructedRdf {
    RainbowAssignment assignment;
    Rational claimed_bound;
    std::string bound_expression;
    Provenance provenance = Provenance::tree_base;
};

/// Spider of order >= 3: weight 2 + x, 3 + y, or 3 (P4). Bound 3n/4.
ConstructedRdf spider_rdf(const Graph& spider);

/// Inductive construction on a tree with n >= 3. Bound 3n/4.
ConstructedRdf tree_rdf_three_quarters(const Graph& tree);

/// Path pattern on a diametral path, {1} elsewhere. Bound n - floor((diam-1)/2).
ConstructedRdf diametral_rdf(const Graph& g);

/// Weight floor(n/2) + 1 on P_n in index order.
ConstructedRdf path_rdf(int n);

}  // namespace rainbowdom
