#pragma once

#include "rainbowdom/graph.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace rainbowdom {

/// AHU code of the tree rooted at `root`; equal codes mean isomorphic rooted trees.
std::string rooted_tree_code(const Graph& tree, Vertex root);

/// Rooting-independent code: equal codes iff the trees are isomorphic.
std::string free_tree_code(const Graph& tree);

/// Every non-isomorphic free tree of order n, each exactly once, by canonical
/// augmentation: a child is kept only when its added leaf lies in the orbit
/// of its canonical leaf, and parents are extended once per vertex orbit.
std::vector<Graph> all_trees(int n);

/// Calls `visit` for each tree of order n, in the same order as all_trees.
void for_each_tree(int n, const std::function<void(const Graph&)>& visit);

using Rng = std::mt19937_64;

/// Uniform labeled tree via a random Prufer sequence.
Graph random_tree(int n, Rng& rng);

/// G(n, p) resampled until connected.
Graph random_connected_graph(int n, double edge_probability, Rng& rng);

}  // namespace rainbowdom
