#include "privzone/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "privzone/error.hpp"

namespace privzone {

GeoGraph generate_rgg(std::size_t n, double radius, std::uint64_t seed) {
  if (n < 2) throw InputError("random geometric graph needs at least 2 nodes");
  if (!(radius > 0.0) || radius > std::numbers::sqrt2) {
    throw InputError("connection radius must lie in (0, sqrt(2)], got " + std::to_string(radius));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> points(n);
  for (auto& p : points) {
    p.x = unit(rng);
    p.y = unit(rng);
  }

  // Bucket points into square cells of side >= radius so only the 3x3
  // neighborhood of a cell needs to be scanned. More cells than about one
  // per point buys nothing.
  const auto per_axis = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t cells = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::min(1.0 / radius, 1e6)), 1, per_axis);
  auto cell_of = [&](double c) {
    return std::min(cells - 1, static_cast<std::size_t>(c * static_cast<double>(cells)));
  };
  std::vector<std::vector<NodeId>> grid(cells * cells);
  for (NodeId i = 0; i < n; ++i) grid[cell_of(points[i].y) * cells + cell_of(points[i].x)].push_back(i);

  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    const std::size_t cx = cell_of(points[i].x);
    const std::size_t cy = cell_of(points[i].y);
    for (std::size_t gy = cy == 0 ? 0 : cy - 1; gy <= std::min(cells - 1, cy + 1); ++gy) {
      for (std::size_t gx = cx == 0 ? 0 : cx - 1; gx <= std::min(cells - 1, cx + 1); ++gx) {
        for (NodeId j : grid[gy * cells + gx]) {
          if (j <= i) continue;
          const double dx = points[i].x - points[j].x;
          const double dy = points[i].y - points[j].y;
          if (dx * dx + dy * dy <= r2) edges.push_back({i, j});
        }
      }
    }
  }
  const Graph full(n, edges);

  // Label components, pick the largest.
  std::vector<std::uint32_t> component(n, kUnreachable);
  std::vector<std::size_t> sizes;
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (component[s] != kUnreachable) continue;
    const auto id = static_cast<std::uint32_t>(sizes.size());
    queue.assign(1, s);
    component[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : full.neighbors(queue[head])) {
        if (component[w] == kUnreachable) {
          component[w] = id;
          queue.push_back(w);
        }
      }
    }
    sizes.push_back(queue.size());
  }
  const auto largest =
      static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  if (sizes[largest] < 2) {
    throw GraphError("largest component of the random geometric graph has fewer than 2 nodes");
  }

  GeoGraph out;
  std::vector<NodeId> relabel(n, kUnreachable);
  for (NodeId i = 0; i < n; ++i) {
    if (component[i] != largest) continue;
    relabel[i] = static_cast<NodeId>(out.original_id.size());
    out.original_id.push_back(i);
    out.positions.push_back(points[i]);
  }
  out.discarded = n - out.original_id.size();

  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : full.edges()) {
    if (relabel[e.u] != kUnreachable) kept.push_back({relabel[e.u], relabel[e.v]});
  }
  out.graph = Graph(out.original_id.size(), kept);
  return out;
}

}  // namespace privzone
