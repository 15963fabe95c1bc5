#pragma once

#include <vector>

#include "privzone/graph.hpp"

namespace privzone {

/**
 * Path-count betweenness.
 *
 * For node v the value is
 *
 *   sum over ordered pairs (s, t), s != t, s != v, t != v, of the number of
 *   shortest s-t paths with v in their interior
 *   ---------------------------------------------------------------------
 *   sum over the same pairs of the number of shortest s-t paths
 *
 * Paths are counted with multiplicity. The numerator is accumulated per
 * source over the shortest-path DAG (Brandes-style), so the cost is
 * O(|V| |E|). Nodes whose denominator is zero (graphs with < 3 nodes) get 0.
 *
 * Results do not depend on the number of worker threads. Throws
 * DisconnectedGraphError on disconnected input.
 */
std::vector<double> betweenness(const Graph& g);

/// Smallest node id attaining the maximum / minimum value.
NodeId argmax_node(const std::vector<double>& values);
NodeId argmin_node(const std::vector<double>& values);

}  // namespace privzone
