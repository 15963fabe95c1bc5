#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "privzone/graph.hpp"
#include "privzone/policy.hpp"

namespace privzone {

struct SweepRow {
  std::uint32_t h = 0;
  std::size_t suppressed_count = 0;
  std::size_t candidate_count = 0;
  double privacy = 1.0;
  std::size_t cost = 0;
};

struct Solution {
  std::uint32_t h_star = 0;
  double privacy = 1.0;
  std::size_t cost = 0;
  std::optional<double> objective;  // trade-off problem only
  std::optional<bool> feasible;     // constrained problem only
};

struct AsymmetricSolution {
  NodeSet suppressed;
  double objective = 0.0;
};

/// Largest graph accepted by solve_asymmetric_exhaustive.
inline constexpr std::size_t kAsymmetricNodeCap = 20;

/// One row per radius h = 0..diameter(g), each from analyze().
std::vector<SweepRow> sweep(const Graph& g, NodeId s,
                            const std::optional<DensityMap>& density = std::nullopt);

/// argmin over the rows of privacy + gamma * cost, smallest h on ties.
Solution solve_tradeoff(std::span<const SweepRow> rows, double gamma);

/// Smallest h with privacy <= xi. Cost is nondecreasing in h, so this is
/// the cheapest feasible radius. Without a feasible row the never-broadcast
/// policy (last row) is returned with feasible = false.
Solution solve_constrained(std::span<const SweepRow> rows, double xi);

/// Minimizes privacy + gamma * cost over h in [0, diameter]. gamma > 0.
Solution solve_problem1(const Graph& g, NodeId s, double gamma,
                        const std::optional<DensityMap>& density = std::nullopt);

/// Minimizes cost subject to privacy <= xi over h in [0, diameter].
/// xi in [0, 1].
Solution solve_problem2(const Graph& g, NodeId s, double xi,
                        const std::optional<DensityMap>& density = std::nullopt);

/**
 * Exact minimizer of 1/|N| + gamma * |edges touching N| over every node set
 * N containing s. Ties go to the smaller set, then the lexicographically
 * smaller sorted node list. The search is exponential; graphs above
 * kAsymmetricNodeCap nodes are rejected with InputError.
 */
AsymmetricSolution solve_asymmetric_exhaustive(const Graph& g, NodeId s, double gamma);

}  // namespace privzone
