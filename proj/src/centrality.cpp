#include "privzone/centrality.hpp"

#include <algorithm>

#include "privzone/error.hpp"
#include "privzone/parallel.hpp"

namespace privzone {
namespace {

struct SourceScratch {
  std::vector<std::uint32_t> dist;
  std::vector<NodeId> order;
  std::vector<double> sigma;
  std::vector<double> downstream;
};

// Adds the contribution of paths starting at `s` to `numerator` and returns
// the number of shortest paths from s to every other node.
double accumulate_source(const Graph& g, NodeId s, SourceScratch& scratch,
                         std::vector<double>& numerator) {
  const std::size_t n = g.node_count();
  auto& dist = scratch.dist;
  auto& order = scratch.order;
  auto& sigma = scratch.sigma;
  auto& downstream = scratch.downstream;
  dist.assign(n, kUnreachable);
  sigma.assign(n, 0.0);
  downstream.assign(n, 0.0);
  order.clear();

  dist[s] = 0;
  sigma[s] = 1.0;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
      if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
    }
  }

  // downstream[v] = number of shortest paths from v to nodes t != v that
  // extend a shortest s-v path, i.e. sum_t sigma_vt over the DAG below v.
  for (std::size_t k = order.size(); k-- > 0;) {
    const NodeId v = order[k];
    double below = 0.0;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == dist[v] + 1) below += 1.0 + downstream[w];
    }
    downstream[v] = below;
  }

  double total = 0.0;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const NodeId v = order[k];
    numerator[v] += sigma[v] * downstream[v];
    total += sigma[v];
  }
  return total;
}

}  // namespace

std::vector<double> betweenness(const Graph& g) {
  g.require_connected();
  const std::size_t n = g.node_count();

  // Fixed blocking keeps the floating-point summation order independent of
  // the worker count.
  const std::size_t blocks = std::min<std::size_t>(n, 256);
  std::vector<std::vector<double>> partial(blocks);
  std::vector<std::vector<double>> paths_from(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t lo = b * n / blocks;
    const std::size_t hi = (b + 1) * n / blocks;
    SourceScratch scratch;
    partial[b].assign(n, 0.0);
    paths_from[b].reserve(hi - lo);
    for (std::size_t s = lo; s < hi; ++s) {
      paths_from[b].push_back(accumulate_source(g, static_cast<NodeId>(s), scratch, partial[b]));
    }
  });

  std::vector<double> numerator(n, 0.0);
  std::vector<double> paths(n, 0.0);
  double total = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * n / blocks;
    for (std::size_t v = 0; v < n; ++v) numerator[v] += partial[b][v];
    for (std::size_t k = 0; k < paths_from[b].size(); ++k) {
      paths[lo + k] = paths_from[b][k];
      total += paths_from[b][k];
    }
  }

  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    // sigma is symmetric, so pairs with v as an endpoint account for
    // 2 * paths[v] of the total.
    const double denominator = total - 2.0 * paths[v];
    out[v] = denominator > 0.0 ? numerator[v] / denominator : 0.0;
  }
  return out;
}

NodeId argmax_node(const std::vector<double>& values) {
  if (values.empty()) throw InputError("argmax of an empty vector");
  return static_cast<NodeId>(std::max_element(values.begin(), values.end()) - values.begin());
}

NodeId argmin_node(const std::vector<double>& values) {
  if (values.empty()) throw InputError("argmin of an empty vector");
  return static_cast<NodeId>(std::min_element(values.begin(), values.end()) - values.begin());
}

}  // namespace privzone
