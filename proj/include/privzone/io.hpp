#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "privzone/geometric.hpp"
#include "privzone/graph.hpp"
#include "privzone/line_graph.hpp"
#include "privzone/observer.hpp"
#include "privzone/optimizer.hpp"
#include "privzone/policy.hpp"

namespace privzone {

/// Decimal rendering with 12 significant digits, as used in every CSV.
std::string format_decimal(double value);

// Edge lists: one `i j` pair per line, `#` starts a comment line.
std::vector<std::pair<NodeId, NodeId>> parse_edge_list(std::istream& in,
                                                       const std::string& source_name);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Positions: `node_id x y` per line.
void write_positions(std::ostream& out, std::span<const Point> positions);
std::vector<Point> read_positions(const std::filesystem::path& path);

/**
 * Density file: `node_id rho` per line, `#` comments, and an optional
 * `default rho` line supplying the value for nodes not listed. Without a
 * default every node in 0..node_count-1 must be listed.
 */
DensityMap parse_density(std::istream& in, std::size_t node_count, const std::string& source_name);
DensityMap read_density(const std::filesystem::path& path, std::size_t node_count);

nlohmann::json to_json(const PolicyAnalysis& analysis);
nlohmann::json to_json(const Solution& solution);
nlohmann::json to_json(const AsymmetricSolution& solution);

/// Mean of several sweeps at a common radius.
struct MeanSweepRow {
  std::uint32_t h = 0;
  double suppressed = 0.0;
  double candidates = 0.0;
  double privacy = 0.0;
  double cost = 0.0;
};

inline constexpr const char* kSweepCsvHeader = "h,suppressed,candidates,privacy,cost";

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_sweep_csv(std::ostream& out, std::span<const MeanSweepRow> rows);
void write_trace_csv(std::ostream& out, const WalkTrace& trace);
void write_posterior_csv(std::ostream& out, const Posterior& posterior);
void write_betweenness_csv(std::ostream& out, std::span<const double> values);

/// `line_node_id i j` per line.
void write_line_graph_mapping(std::ostream& out, const LineGraph& lg);

}  // namespace privzone
