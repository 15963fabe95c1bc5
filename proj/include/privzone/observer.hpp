#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "privzone/graph.hpp"
#include "privzone/policy.hpp"

namespace privzone {

struct WalkStep {
  std::size_t t = 0;
  NodeId node = 0;
  bool broadcast = false;
};

struct WalkTrace {
  std::vector<WalkStep> steps;
  /// First time index at which every node had been visited, if ever.
  std::optional<std::size_t> cover_time;
};

struct Posterior {
  std::vector<double> mass;  // indexed by node id, sums to 1
};

/**
 * Simple random walk of `steps` positions (t = 0..steps-1) from a uniformly
 * chosen start node, moving to a uniform neighbor each step. A position is
 * broadcast iff the node lies outside the h-hop ball around s.
 * Deterministic for a fixed seed.
 */
WalkTrace simulate_walk(const Graph& g, NodeId s, std::uint32_t h, std::size_t steps,
                        std::uint64_t seed);

/// Nodes of all broadcast positions in the trace.
NodeSet observed_broadcast_set(const WalkTrace& trace);

/**
 * Observer posterior over the private node given a converged broadcast set,
 * enumerated from first principles: node v receives weight rho(v) (1 without
 * a density) when some radius h' in [0, ecc(v)] makes v's own hop-radius
 * policy broadcast exactly `observed`, and weight 0 otherwise.
 *
 * Throws InfeasibleError when no node can explain `observed`.
 */
Posterior posterior_bruteforce(const Graph& g, const NodeSet& observed,
                               const std::optional<DensityMap>& density = std::nullopt);

/// Nodes with nonzero posterior mass.
NodeSet support(const Posterior& posterior);

}  // namespace privzone
