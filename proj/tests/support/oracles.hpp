#pragma once

// Reference implementations that share no code path with the library
// beyond the Graph container itself.

#include <cstdint>
#include <vector>

#include "privzone/graph.hpp"

namespace privzone::testing {

using DistanceMatrix = std::vector<std::vector<std::uint32_t>>;

/// All-pairs hop distances by Floyd-Warshall.
DistanceMatrix floyd_warshall(const Graph& g);

/// Betweenness by listing every shortest path of every ordered pair.
std::vector<double> naive_betweenness(const Graph& g);

/// Nodes v admitting some radius h' in [0, ecc(v)] with
/// broadcast(v, h') == broadcast(s, h), computed from the distance matrix.
NodeSet candidates_by_enumeration(const Graph& g, NodeId s, std::uint32_t h);

/// Minimum of 1/|N| + gamma * |edges touching N| over N containing s, by
/// recursive inclusion/exclusion of each node.
double asymmetric_optimum_by_recursion(const Graph& g, NodeId s, double gamma);

}  // namespace privzone::testing
