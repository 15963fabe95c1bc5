#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "privzone/graph.hpp"

namespace privzone {

/// Per-node population density used as the observer's prior.
class DensityMap {
 public:
  /// Throws InputError on negative or non-finite entries, or when no entry
  /// is strictly positive.
  explicit DensityMap(std::vector<double> rho);

  double operator[](NodeId v) const { return rho_[v]; }
  std::size_t size() const noexcept { return rho_.size(); }
  std::span<const double> values() const noexcept { return rho_; }

 private:
  std::vector<double> rho_;
};

/// Every set induced by a hop-radius suppression policy around a private
/// node, together with the resulting privacy infringement and cost.
struct PolicyAnalysis {
  NodeId private_node = 0;
  std::uint32_t radius = 0;
  NodeSet suppressed;   // within `radius` hops of the private node
  NodeSet broadcast;    // everything else
  NodeSet boundary;     // broadcast nodes adjacent to the suppressed set
  NodeSet candidates;   // nodes the observer cannot rule out
  EdgeSet excluded_edges;
  double privacy = 1.0;  // observer posterior on the private node
  std::size_t cost = 0;  // |excluded_edges|
  bool density_prior = false;
};

/// Policy with an arbitrary suppressed node set containing the private node.
struct AsymmetricPolicy {
  NodeSet suppressed;
  NodeId private_node = 0;
};

/// Nodes at hop distance <= h from s.
NodeSet suppressed_set(const Graph& g, NodeId s, std::uint32_t h);

/// Nodes at hop distance >= h + 1 from s.
NodeSet broadcast_set(const Graph& g, NodeId s, std::uint32_t h);

/// Broadcast nodes with a neighbor in the suppressed set (the distance-(h+1)
/// layer around s).
NodeSet boundary_set(const Graph& g, NodeId s, std::uint32_t h);

/// Edges with at least one endpoint within h hops of s.
EdgeSet excluded_edges(const Graph& g, NodeId s, std::uint32_t h);

/**
 * Nodes v of the suppressed set for which some layer index d in
 * [1, l + 1] (l = diameter of the subgraph induced by the suppressed set)
 * satisfies both
 *
 *   - the full-graph distance-d layer around v equals the boundary, and
 *   - the layers 0..d-1 around v together equal the suppressed set.
 *
 * These are exactly the nodes whose own hop-radius policy would produce the
 * same broadcast set. When the broadcast set is empty every node qualifies.
 */
NodeSet candidate_set(const Graph& g, NodeId s, std::uint32_t h);

/// 1 / |candidates|. Throws std::logic_error on an empty set.
double privacy_uniform(std::span<const NodeId> candidates);

/// rho(s) / sum of rho over the candidates. Throws InputError when s is not
/// a candidate or the candidates carry zero total density.
double privacy_density(std::span<const NodeId> candidates, NodeId s, const DensityMap& density);

/// 1 / |suppressed|. Throws InputError when the private node is not
/// suppressed.
double asymmetric_privacy(const AsymmetricPolicy& policy);

/// Full evaluation of the hop-radius policy (s, h). Privacy uses the
/// density prior when one is supplied, the uniform prior otherwise.
PolicyAnalysis analyze(const Graph& g, NodeId s, std::uint32_t h,
                       const std::optional<DensityMap>& density = std::nullopt);

}  // namespace privzone
