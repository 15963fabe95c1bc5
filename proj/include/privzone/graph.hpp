#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace privzone {

using NodeId = std::uint32_t;

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Undirected edge stored with `u < v`.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge-set keyed by the canonical (u < v) form.
using EdgeSet = std::vector<Edge>;

/**
 * Immutable simple undirected graph with nodes 0..node_count()-1.
 *
 * Adjacency is kept in compressed sparse row form; every neighbor list is
 * sorted. Connectivity is determined once at construction so analyses can
 * reject disconnected inputs without repeating the search.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from canonical edges. Duplicates are collapsed;
  /// self-loops and ids >= node_count throw InputError.
  Graph(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Edges sorted lexicographically by (u, v).
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(NodeId a, NodeId b) const noexcept;
  bool contains(NodeId v) const noexcept { return v < node_count(); }

  bool connected() const noexcept { return !first_unreachable_.has_value(); }

  /// Throws DisconnectedGraphError naming a node unreachable from node 0.
  void require_connected() const;

  /// Throws InputError when `v` is not a node of this graph.
  void require_node(NodeId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count() == b.node_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  EdgeSet edges_;
  std::size_t max_degree_ = 0;
  std::optional<NodeId> first_unreachable_;
};

/// Builds a graph from raw (possibly unordered, duplicated) pairs.
/// node_count is max id + 1. Rejects empty input and self-loops.
Graph build_graph(std::span<const std::pair<NodeId, NodeId>> edge_list);

/// Nodes grouped by hop distance from `source`.
struct DistanceLayers {
  NodeId source = 0;
  std::vector<NodeSet> layers;  // layers[d] = nodes at distance d
  std::uint32_t eccentricity = 0;

  /// Layer at distance d, or an empty set beyond the eccentricity.
  const NodeSet& at(std::size_t d) const;
};

/// Hop distances from `source`; kUnreachable for nodes in other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

/// Same as bfs_distances, reusing caller-provided buffers.
void bfs_distances(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
                   std::vector<NodeId>& queue);

DistanceLayers bfs_layers(const Graph& g, NodeId source);

std::uint32_t eccentricity(const Graph& g, NodeId source);

std::uint32_t diameter(const Graph& g);

/// Diameter of the subgraph induced by `nodes`, with distances measured
/// inside that subgraph. Throws GraphError if the induced subgraph is
/// disconnected, InputError if `nodes` is empty.
std::uint32_t induced_diameter(const Graph& g, std::span<const NodeId> nodes);

}  // namespace privzone
