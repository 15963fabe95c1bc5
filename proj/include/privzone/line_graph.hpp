#pragma once

#include <vector>

#include "privzone/graph.hpp"

namespace privzone {

/// Line graph together with the original edge behind each of its nodes.
struct LineGraph {
  Graph graph;
  std::vector<Edge> source_edge;  // source_edge[k] = edge of the input behind node k
};

/// One node per edge of `g` (in g.edges() order); two nodes are adjacent iff
/// their edges share an endpoint. Throws GraphError when `g` has no edges.
LineGraph line_graph(const Graph& g);

}  // namespace privzone
