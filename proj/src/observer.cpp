#include "privzone/observer.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "privzone/error.hpp"

namespace privzone {

WalkTrace simulate_walk(const Graph& g, NodeId s, std::uint32_t h, std::size_t steps,
                        std::uint64_t seed) {
  g.require_node(s);
  g.require_connected();
  if (steps == 0) throw InputError("walk needs at least one step");

  const auto dist = bfs_distances(g, s);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> start(0, static_cast<NodeId>(g.node_count() - 1));

  WalkTrace trace;
  trace.steps.reserve(steps);
  std::vector<char> seen(g.node_count(), 0);
  std::size_t unseen = g.node_count();

  NodeId at = start(rng);
  for (std::size_t t = 0; t < steps; ++t) {
    if (t > 0) {
      const auto nb = g.neighbors(at);
      if (!nb.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
        at = nb[pick(rng)];
      }
    }
    trace.steps.push_back({t, at, dist[at] > h});
    if (!seen[at]) {
      seen[at] = 1;
      if (--unseen == 0) trace.cover_time = t;
    }
  }
  return trace;
}

NodeSet observed_broadcast_set(const WalkTrace& trace) {
  NodeSet out;
  for (const WalkStep& step : trace.steps) {
    if (step.broadcast) out.push_back(step.node);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Posterior posterior_bruteforce(const Graph& g, const NodeSet& observed,
                               const std::optional<DensityMap>& density) {
  g.require_connected();
  const std::size_t n = g.node_count();
  if (density && density->size() != n) {
    throw InputError("density map covers " + std::to_string(density->size()) +
                     " nodes but the graph has " + std::to_string(n));
  }
  std::vector<char> in_observed(n, 0);
  for (NodeId v : observed) {
    g.require_node(v);
    in_observed[v] = 1;
  }

  std::vector<double> weight(n, 0.0);
  bool any_explains = false;
  std::vector<std::uint32_t> dist;
  std::vector<NodeId> queue;
  for (NodeId v = 0; v < n; ++v) {
    bfs_distances(g, v, dist, queue);
    const std::uint32_t ecc = *std::max_element(dist.begin(), dist.end());
    bool explains = false;
    for (std::uint32_t radius = 0; radius <= ecc && !explains; ++radius) {
      bool same = true;
      for (NodeId u = 0; u < n && same; ++u) {
        same = (dist[u] > radius) == static_cast<bool>(in_observed[u]);
      }
      explains = same;
    }
    if (explains) {
      any_explains = true;
      weight[v] = density ? (*density)[v] : 1.0;
    }
  }

  double total = 0.0;
  for (double w : weight) total += w;
  if (!any_explains) {
    throw InfeasibleError("no node's hop-radius policy produces the observed broadcast set");
  }
  if (total == 0.0) throw InputError("explaining nodes carry zero total density");
  Posterior out;
  out.mass.resize(n);
  for (NodeId v = 0; v < n; ++v) out.mass[v] = weight[v] / total;
  return out;
}

NodeSet support(const Posterior& posterior) {
  NodeSet out;
  for (NodeId v = 0; v < posterior.mass.size(); ++v) {
    if (posterior.mass[v] > 0.0) out.push_back(v);
  }
  return out;
}

}  // namespace privzone
