#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "proxygames/rational.hpp"

namespace proxygames::graph {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Strongly connected components (Tarjan), each sorted ascending, listed in
/// order of their smallest vertex.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Adjacency& graph);

/// SCCs with no edge leaving them: the closed classes of the condensation.
std::vector<std::vector<std::size_t>> closed_components(const Adjacency& graph);

struct WeightedArc {
  std::size_t to;
  Rational weight;
};
using WeightedAdjacency = std::vector<std::vector<WeightedArc>>;

/// Exact shortest distances from a set of sources; nullopt when unreachable.
/// Weights must be nonnegative.
std::vector<std::optional<Rational>> shortest_distances(const WeightedAdjacency& graph,
                                                        const std::vector<std::size_t>& sources);

/// Dense arc weights between k nodes; nullopt marks a missing arc.
using ArcMatrix = std::vector<std::vector<std::optional<Rational>>>;

/// Minimum total weight of a spanning in-tree rooted at `root`: every other
/// node has exactly one outgoing arc and all paths lead to the root.
/// Chu-Liu/Edmonds on the reversed arcs. nullopt when no such tree exists.
std::optional<Rational> min_in_arborescence(const ArcMatrix& arcs, std::size_t root);

}  // namespace proxygames::graph
