#pragma once

#include <cstdint>
#include <vector>

#include "privzone/graph.hpp"

namespace privzone {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Random geometric graph restricted to its largest connected component.
struct GeoGraph {
  Graph graph;
  std::vector<Point> positions;     // indexed by (relabeled) node id
  std::vector<NodeId> original_id;  // index of each kept point in the sample
  std::size_t discarded = 0;        // points outside the largest component
};

/**
 * Samples n points uniformly on [0,1]^2 and joins every pair at Euclidean
 * distance <= radius. When the result is disconnected only the largest
 * component is kept (ties go to the component holding the lowest sample
 * index); kept nodes are relabeled 0.. in sample order.
 *
 * Deterministic for a fixed seed. Requires n >= 2 and 0 < radius <= sqrt(2);
 * throws GraphError when the largest component has fewer than 2 nodes.
 */
GeoGraph generate_rgg(std::size_t n, double radius, std::uint64_t seed);

}  // namespace privzone
