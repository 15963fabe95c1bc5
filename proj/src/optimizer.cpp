#include "privzone/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "privzone/error.hpp"
#include "privzone/parallel.hpp"

namespace privzone {

std::vector<SweepRow> sweep(const Graph& g, NodeId s, const std::optional<DensityMap>& density) {
  g.require_node(s);
  const std::uint32_t d = diameter(g);
  std::vector<SweepRow> rows(d + 1);
  parallel_for(rows.size(), [&](std::size_t h) {
    const auto a = analyze(g, s, static_cast<std::uint32_t>(h), density);
    rows[h] = {static_cast<std::uint32_t>(h), a.suppressed.size(), a.candidates.size(), a.privacy,
               a.cost};
  });
  return rows;
}

Solution solve_tradeoff(std::span<const SweepRow> rows, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InputError("gamma must be a positive finite number");
  }
  if (rows.empty()) throw InputError("empty sweep");
  const SweepRow* best = nullptr;
  double best_value = 0.0;
  for (const SweepRow& row : rows) {
    const double value = row.privacy + gamma * static_cast<double>(row.cost);
    if (!best || value < best_value) {
      best = &row;
      best_value = value;
    }
  }
  return {best->h, best->privacy, best->cost, best_value, std::nullopt};
}

Solution solve_constrained(std::span<const SweepRow> rows, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw InputError("xi must lie in [0, 1]");
  if (rows.empty()) throw InputError("empty sweep");
  for (const SweepRow& row : rows) {
    if (row.privacy <= xi) return {row.h, row.privacy, row.cost, std::nullopt, true};
  }
  const SweepRow& last = rows.back();
  return {last.h, last.privacy, last.cost, std::nullopt, false};
}

Solution solve_problem1(const Graph& g, NodeId s, double gamma,
                        const std::optional<DensityMap>& density) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InputError("gamma must be a positive finite number");
  }
  return solve_tradeoff(sweep(g, s, density), gamma);
}

Solution solve_problem2(const Graph& g, NodeId s, double xi,
                        const std::optional<DensityMap>& density) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw InputError("xi must lie in [0, 1]");
  return solve_constrained(sweep(g, s, density), xi);
}

AsymmetricSolution solve_asymmetric_exhaustive(const Graph& g, NodeId s, double gamma) {
  const std::size_t n = g.node_count();
  if (n > kAsymmetricNodeCap) {
    throw InputError("exhaustive asymmetric search is capped at " +
                     std::to_string(kAsymmetricNodeCap) + " nodes (graph has " +
                     std::to_string(n) + "); use the hop-radius optimizer instead");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InputError("gamma must be a positive finite number");
  }
  g.require_node(s);

  std::vector<std::uint32_t> edge_masks;
  edge_masks.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edge_masks.push_back((1u << e.u) | (1u << e.v));

  // Enumerate subsets of the other nodes and splice s back in.
  const std::uint32_t own = 1u << s;
  const std::uint32_t low = own - 1;
  const std::uint32_t others = static_cast<std::uint32_t>(n - 1);

  // Lexicographic order on sorted node lists: the first differing element is
  // the lowest bit of the symmetric difference.
  auto lex_less = [](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  };

  std::uint32_t best_mask = 0;
  double best_value = 0.0;
  bool have = false;
  for (std::uint32_t sub = 0; sub < (1u << others); ++sub) {
    const std::uint32_t mask = (sub & low) | own | ((sub & ~low) << 1);
    std::size_t cost = 0;
    for (std::uint32_t em : edge_masks) cost += (em & mask) != 0;
    const double value = 1.0 / std::popcount(mask) + gamma * static_cast<double>(cost);
    bool better = !have || value < best_value;
    if (have && value == best_value) {
      const int size = std::popcount(mask);
      const int best_size = std::popcount(best_mask);
      better = size < best_size || (size == best_size && lex_less(mask, best_mask));
    }
    if (better) {
      best_mask = mask;
      best_value = value;
      have = true;
    }
  }

  AsymmetricSolution out;
  out.objective = best_value;
  for (NodeId v = 0; v < n; ++v) {
    if (best_mask & (1u << v)) out.suppressed.push_back(v);
  }
  return out;
}

}  // namespace privzone
