#include "privzone/line_graph.hpp"

#include "privzone/error.hpp"

namespace privzone {

LineGraph line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw GraphError("line graph of a graph without edges");

  LineGraph out;
  out.source_edge.assign(g.edges().begin(), g.edges().end());

  // Edges incident to each node, by line-graph id.
  std::vector<std::vector<NodeId>> incident(g.node_count());
  for (NodeId k = 0; k < out.source_edge.size(); ++k) {
    incident[out.source_edge[k].u].push_back(k);
    incident[out.source_edge[k].v].push_back(k);
  }

  std::vector<Edge> edges;
  for (const auto& around : incident) {
    for (std::size_t a = 0; a < around.size(); ++a) {
      for (std::size_t b = a + 1; b < around.size(); ++b) edges.push_back({around[a], around[b]});
    }
  }
  out.graph = Graph(out.source_edge.size(), edges);
  return out;
}

}  // namespace privzone
