#pragma once

#include "rainbowdom/bounds.hpp"
#include "rainbowdom/graph.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace rainbowdom::cli {

enum ExitCode : int {
    success = 0,
    theorem_violated = 1,
    usage_error = 2,
    budget_exhausted = 3,
};

/// Graph from a command-line spec: path:n, cycle:n, star:t, complete:n,
/// spider:x,y, ds:r,s, l_k:k, corona:<spec>, product:<spec>x<spec>,
/// file:<edge list path>, g6:<graph6>.
Graph parse_graph_arg(std::string_view text);

/// Entry point behind the executable; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const SolverSet& solvers = {});

}  // namespace rainbowdom::cli
