#include "privzone/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "privzone/error.hpp"
#include "privzone/parallel.hpp"

namespace privzone {

DensityMap::DensityMap(std::vector<double> rho) : rho_(std::move(rho)) {
  bool any_positive = false;
  for (std::size_t v = 0; v < rho_.size(); ++v) {
    if (!std::isfinite(rho_[v]) || rho_[v] < 0.0) {
      throw InputError("density of node " + std::to_string(v) + " must be finite and nonnegative");
    }
    any_positive = any_positive || rho_[v] > 0.0;
  }
  if (!any_positive) throw InputError("density map has no strictly positive entry");
}

namespace {

// Distances from s, with the graph and node validated.
std::vector<std::uint32_t> distances_from(const Graph& g, NodeId s) {
  g.require_node(s);
  g.require_connected();
  return bfs_distances(g, s);
}

NodeSet within(const std::vector<std::uint32_t>& dist, std::uint32_t h) {
  NodeSet out;
  for (NodeId v = 0; v < dist.size(); ++v) {
    if (dist[v] <= h) out.push_back(v);
  }
  return out;
}

NodeSet beyond(const std::vector<std::uint32_t>& dist, std::uint32_t h) {
  NodeSet out;
  for (NodeId v = 0; v < dist.size(); ++v) {
    if (dist[v] > h) out.push_back(v);
  }
  return out;
}

NodeSet boundary_of(const Graph& g, const std::vector<std::uint32_t>& dist, std::uint32_t h) {
  NodeSet out;
  for (NodeId v = 0; v < dist.size(); ++v) {
    if (dist[v] <= h) continue;
    const auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](NodeId w) { return dist[w] <= h; })) {
      out.push_back(v);
    }
  }
  return out;
}

EdgeSet excluded_of(const Graph& g, const std::vector<std::uint32_t>& dist, std::uint32_t h) {
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (dist[e.u] <= h || dist[e.v] <= h) out.push_back(e);
  }
  return out;
}

NodeSet candidates_of(const Graph& g, const NodeSet& suppressed, const NodeSet& boundary) {
  const std::size_t n = g.node_count();
  if (suppressed.size() == n) {
    NodeSet all(n);
    for (NodeId v = 0; v < n; ++v) all[v] = v;
    return all;
  }

  const std::uint32_t induced = induced_diameter(g, suppressed);
  std::vector<char> qualifies(suppressed.size(), 0);
  parallel_for(suppressed.size(), [&](std::size_t k) {
    const auto dist = bfs_distances(g, suppressed[k]);

    // Layers 0..d-1 cover the suppressed set exactly only for
    // d - 1 = the farthest suppressed node, and only if no broadcast node
    // is as close.
    std::uint32_t reach = 0;
    for (NodeId u : suppressed) reach = std::max(reach, dist[u]);
    const std::uint32_t layer = reach + 1;
    if (layer > induced + 1) return;

    std::size_t inside = 0;
    std::size_t on_layer = 0;
    for (std::uint32_t d : dist) {
      inside += d <= reach;
      on_layer += d == layer;
    }
    if (inside != suppressed.size() || on_layer != boundary.size()) return;
    for (NodeId b : boundary) {
      if (dist[b] != layer) return;
    }
    qualifies[k] = 1;
  });

  NodeSet out;
  for (std::size_t k = 0; k < suppressed.size(); ++k) {
    if (qualifies[k]) out.push_back(suppressed[k]);
  }
  return out;
}

}  // namespace

NodeSet suppressed_set(const Graph& g, NodeId s, std::uint32_t h) {
  return within(distances_from(g, s), h);
}

NodeSet broadcast_set(const Graph& g, NodeId s, std::uint32_t h) {
  return beyond(distances_from(g, s), h);
}

NodeSet boundary_set(const Graph& g, NodeId s, std::uint32_t h) {
  return boundary_of(g, distances_from(g, s), h);
}

EdgeSet excluded_edges(const Graph& g, NodeId s, std::uint32_t h) {
  return excluded_of(g, distances_from(g, s), h);
}

NodeSet candidate_set(const Graph& g, NodeId s, std::uint32_t h) {
  const auto dist = distances_from(g, s);
  return candidates_of(g, within(dist, h), boundary_of(g, dist, h));
}

double privacy_uniform(std::span<const NodeId> candidates) {
  if (candidates.empty()) {
    throw std::logic_error("empty candidate set: the private node is always a candidate");
  }
  return 1.0 / static_cast<double>(candidates.size());
}

double privacy_density(std::span<const NodeId> candidates, NodeId s, const DensityMap& density) {
  if (std::find(candidates.begin(), candidates.end(), s) == candidates.end()) {
    throw InputError("private node " + std::to_string(s) + " is not among the candidates");
  }
  for (NodeId v : candidates) {
    if (v >= density.size()) {
      throw InputError("density map has no entry for node " + std::to_string(v));
    }
  }
  const double own = density[s];
  if (own == 0.0) {
    for (NodeId v : candidates) {
      if (density[v] > 0.0) return 0.0;
    }
    throw InputError("candidates carry zero total density; posterior undefined");
  }
  // Normalizing by rho(s) makes a constant density reproduce 1/|candidates|
  // bit for bit.
  double relative = 0.0;
  for (NodeId v : candidates) relative += density[v] / own;
  return 1.0 / relative;
}

double asymmetric_privacy(const AsymmetricPolicy& policy) {
  if (!std::binary_search(policy.suppressed.begin(), policy.suppressed.end(),
                          policy.private_node)) {
    throw InputError("asymmetric policy must suppress its private node");
  }
  return 1.0 / static_cast<double>(policy.suppressed.size());
}

PolicyAnalysis analyze(const Graph& g, NodeId s, std::uint32_t h,
                       const std::optional<DensityMap>& density) {
  const auto dist = distances_from(g, s);
  if (density && density->size() != g.node_count()) {
    throw InputError("density map covers " + std::to_string(density->size()) +
                     " nodes but the graph has " + std::to_string(g.node_count()));
  }

  PolicyAnalysis out;
  out.private_node = s;
  out.radius = h;
  out.suppressed = within(dist, h);
  out.broadcast = beyond(dist, h);
  out.boundary = boundary_of(g, dist, h);
  out.candidates = candidates_of(g, out.suppressed, out.boundary);
  out.excluded_edges = excluded_of(g, dist, h);
  out.cost = out.excluded_edges.size();
  out.density_prior = density.has_value();
  out.privacy = density ? privacy_density(out.candidates, s, *density)
                        : privacy_uniform(out.candidates);
  return out;
}

}  // namespace privzone
