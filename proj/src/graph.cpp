#include "privzone/graph.hpp"

#include <algorithm>
#include <string>

#include "privzone/error.hpp"

namespace privzone {

Graph::Graph(std::size_t node_count, std::span<const Edge> edges) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) {
      throw InputError("self-loop at node " + std::to_string(e.u));
    }
    if (e.u >= node_count || e.v >= node_count) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} references a node outside 0.." + std::to_string(node_count) + ")");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(node_count + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    max_degree_ = std::max(max_degree_, offsets_[v + 1]);
    offsets_[v + 1] += offsets_[v];
  }
  targets_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in this order leaves every
  // neighbor list sorted as well.
  for (const Edge& e : edges_) targets_[cursor[e.u]++] = e.v;
  for (const Edge& e : edges_) targets_[cursor[e.v]++] = e.u;
  for (std::size_t v = 0; v < node_count; ++v) {
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }

  if (node_count > 0) {
    const auto dist = bfs_distances(*this, 0);
    auto it = std::find(dist.begin(), dist.end(), kUnreachable);
    if (it != dist.end()) first_unreachable_ = static_cast<NodeId>(it - dist.begin());
  }
}

bool Graph::has_edge(NodeId a, NodeId b) const noexcept {
  if (!contains(a) || !contains(b)) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

void Graph::require_connected() const {
  if (node_count() == 0) throw GraphError("graph has no nodes");
  if (first_unreachable_) {
    throw DisconnectedGraphError(*first_unreachable_,
                                 "graph is disconnected: node " +
                                     std::to_string(*first_unreachable_) +
                                     " is unreachable from node 0");
  }
}

void Graph::require_node(NodeId v) const {
  if (!contains(v)) {
    throw InputError("node " + std::to_string(v) + " is not in the graph (" +
                     std::to_string(node_count()) + " nodes)");
  }
}

Graph build_graph(std::span<const std::pair<NodeId, NodeId>> edge_list) {
  if (edge_list.empty()) throw InputError("edge list is empty");
  NodeId max_id = 0;
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a == b) throw InputError("self-loop at node " + std::to_string(a));
    max_id = std::max({max_id, a, b});
    edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  return Graph(static_cast<std::size_t>(max_id) + 1, edges);
}

const NodeSet& DistanceLayers::at(std::size_t d) const {
  static const NodeSet empty;
  return d < layers.size() ? layers[d] : empty;
}

void bfs_distances(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
                   std::vector<NodeId>& queue) {
  dist.assign(g.node_count(), kUnreachable);
  queue.clear();
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    const std::uint32_t next = dist[v] + 1;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  std::vector<std::uint32_t> dist;
  std::vector<NodeId> queue;
  bfs_distances(g, source, dist, queue);
  return dist;
}

DistanceLayers bfs_layers(const Graph& g, NodeId source) {
  g.require_node(source);
  g.require_connected();
  const auto dist = bfs_distances(g, source);
  DistanceLayers out;
  out.source = source;
  out.eccentricity = *std::max_element(dist.begin(), dist.end());
  out.layers.resize(out.eccentricity + 1);
  for (NodeId v = 0; v < dist.size(); ++v) out.layers[dist[v]].push_back(v);
  return out;
}

std::uint32_t eccentricity(const Graph& g, NodeId source) {
  g.require_node(source);
  g.require_connected();
  const auto dist = bfs_distances(g, source);
  return *std::max_element(dist.begin(), dist.end());
}

std::uint32_t diameter(const Graph& g) {
  g.require_connected();
  std::uint32_t best = 0;
  std::vector<std::uint32_t> dist;
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    bfs_distances(g, s, dist, queue);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::uint32_t induced_diameter(const Graph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw InputError("induced_diameter of an empty node set");
  std::vector<char> member(g.node_count(), 0);
  NodeSet members;
  for (NodeId v : nodes) {
    g.require_node(v);
    if (!member[v]) members.push_back(v);
    member[v] = 1;
  }

  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(members.size());
  std::uint32_t best = 0;
  for (NodeId s : members) {
    for (NodeId v : members) dist[v] = kUnreachable;
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = queue[head];
      for (NodeId w : g.neighbors(v)) {
        if (member[w] && dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    if (queue.size() != members.size()) {
      auto missing = std::find_if(members.begin(), members.end(),
                                  [&](NodeId v) { return dist[v] == kUnreachable; });
      throw GraphError("induced subgraph is disconnected: node " + std::to_string(*missing) +
                       " unreachable from node " + std::to_string(s));
    }
    best = std::max(best, dist[queue.back()]);
  }
  return best;
}

}  // namespace privzone
