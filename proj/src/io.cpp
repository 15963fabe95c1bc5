#include "privzone/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "privzone/error.hpp"

namespace privzone {
namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

[[noreturn]] void parse_failure(const std::string& source, std::size_t line_no,
                                const std::string& what) {
  throw InputError(source + ":" + std::to_string(line_no) + ": " + what);
}

// Splits on whitespace; empty result for blank and comment lines.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream words(line);
  for (std::string w; words >> w;) out.push_back(w);
  if (!out.empty() && out.front().front() == '#') out.clear();
  return out;
}

template <typename T>
std::optional<T> parse_number(const std::string& token) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

// from_chars for double is available in libstdc++ 11 and later.
std::optional<double> parse_real(const std::string& token) { return parse_number<double>(token); }

}  // namespace

std::string format_decimal(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::vector<std::pair<NodeId, NodeId>> parse_edge_list(std::istream& in,
                                                       const std::string& source_name) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) parse_failure(source_name, line_no, "expected two node ids");
    const auto a = parse_number<NodeId>(tok[0]);
    const auto b = parse_number<NodeId>(tok[1]);
    if (!a || !b) parse_failure(source_name, line_no, "node ids must be nonnegative integers");
    if (*a == *b) parse_failure(source_name, line_no, "self-loop at node " + tok[0]);
    edges.emplace_back(*a, *b);
  }
  if (edges.empty()) throw InputError(source_name + ": edge list is empty");
  return edges;
}

Graph read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  const auto edges = parse_edge_list(in, path.string());
  return build_graph(edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_positions(std::ostream& out, std::span<const Point> positions) {
  char buf[96];
  for (std::size_t v = 0; v < positions.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", v, positions[v].x, positions[v].y);
    out << buf;
  }
}

std::vector<Point> read_positions(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<std::optional<Point>> slots;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != 3) parse_failure(path.string(), line_no, "expected `node_id x y`");
    const auto id = parse_number<NodeId>(tok[0]);
    const auto x = parse_real(tok[1]);
    const auto y = parse_real(tok[2]);
    if (!id || !x || !y) parse_failure(path.string(), line_no, "malformed position");
    if (slots.size() <= *id) slots.resize(*id + 1);
    slots[*id] = Point{*x, *y};
  }
  std::vector<Point> out;
  out.reserve(slots.size());
  for (std::size_t v = 0; v < slots.size(); ++v) {
    if (!slots[v]) throw InputError(path.string() + ": no position for node " + std::to_string(v));
    out.push_back(*slots[v]);
  }
  return out;
}

DensityMap parse_density(std::istream& in, std::size_t node_count, const std::string& source_name) {
  std::vector<std::optional<double>> rho(node_count);
  std::optional<double> fallback;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) parse_failure(source_name, line_no, "expected `node_id rho`");
    const auto value = parse_real(tok[1]);
    if (!value) parse_failure(source_name, line_no, "malformed density '" + tok[1] + "'");
    if (tok[0] == "default") {
      fallback = *value;
      continue;
    }
    const auto id = parse_number<NodeId>(tok[0]);
    if (!id) parse_failure(source_name, line_no, "malformed node id '" + tok[0] + "'");
    if (*id >= node_count) {
      parse_failure(source_name, line_no, "node " + tok[0] + " is not in the graph");
    }
    rho[*id] = *value;
  }
  std::vector<double> values(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    if (rho[v]) {
      values[v] = *rho[v];
    } else if (fallback) {
      values[v] = *fallback;
    } else {
      throw InputError(source_name + ": no density for node " + std::to_string(v) +
                       " and no `default` declared");
    }
  }
  return DensityMap(std::move(values));
}

DensityMap read_density(const std::filesystem::path& path, std::size_t node_count) {
  auto in = open_input(path);
  return parse_density(in, node_count, path.string());
}

nlohmann::json to_json(const PolicyAnalysis& a) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : a.excluded_edges) edges.push_back({e.u, e.v});
  return {
      {"private_node", a.private_node},
      {"radius", a.radius},
      {"suppressed", a.suppressed},
      {"broadcast", a.broadcast},
      {"boundary", a.boundary},
      {"candidates", a.candidates},
      {"excluded_edges", edges},
      {"privacy", a.privacy},
      {"cost", a.cost},
      {"prior", a.density_prior ? "density" : "uniform"},
  };
}

nlohmann::json to_json(const Solution& s) {
  nlohmann::json out = {{"h_star", s.h_star}, {"privacy", s.privacy}, {"cost", s.cost}};
  if (s.objective) out["objective"] = *s.objective;
  if (s.feasible) out["feasible"] = *s.feasible;
  return out;
}

nlohmann::json to_json(const AsymmetricSolution& s) {
  return {{"suppressed", s.suppressed}, {"objective", s.objective}};
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.h << ',' << r.suppressed_count << ',' << r.candidate_count << ','
        << format_decimal(r.privacy) << ',' << r.cost << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const MeanSweepRow> rows) {
  out << kSweepCsvHeader << '\n';
  for (const MeanSweepRow& r : rows) {
    out << r.h << ',' << format_decimal(r.suppressed) << ',' << format_decimal(r.candidates) << ','
        << format_decimal(r.privacy) << ',' << format_decimal(r.cost) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const WalkTrace& trace) {
  out << "t,node,broadcast\n";
  for (const WalkStep& s : trace.steps) {
    out << s.t << ',' << s.node << ',' << (s.broadcast ? 1 : 0) << '\n';
  }
}

void write_posterior_csv(std::ostream& out, const Posterior& posterior) {
  out << "node,mass\n";
  for (std::size_t v = 0; v < posterior.mass.size(); ++v) {
    out << v << ',' << format_decimal(posterior.mass[v]) << '\n';
  }
}

void write_betweenness_csv(std::ostream& out, std::span<const double> values) {
  out << "node,betweenness\n";
  for (std::size_t v = 0; v < values.size(); ++v) {
    out << v << ',' << format_decimal(values[v]) << '\n';
  }
}

void write_line_graph_mapping(std::ostream& out, const LineGraph& lg) {
  for (std::size_t k = 0; k < lg.source_edge.size(); ++k) {
    out << k << ' ' << lg.source_edge[k].u << ' ' << lg.source_edge[k].v << '\n';
  }
}

}  // namespace privzone
