#include "privzone/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "privzone/centrality.hpp"
#include "privzone/error.hpp"
#include "privzone/geometric.hpp"
#include "privzone/parallel.hpp"

namespace privzone {

std::string Target::label() const {
  switch (kind) {
    case Kind::kMaxBetweenness:
      return "maxbc";
    case Kind::kMinBetweenness:
      return "minbc";
    case Kind::kNode:
      break;
  }
  return "node" + std::to_string(node);
}

Target Target::parse(const std::string& text) {
  if (text == "max") return {Kind::kMaxBetweenness, 0};
  if (text == "min") return {Kind::kMinBetweenness, 0};
  NodeId id = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("target must be `max`, `min` or a node id, got '" + text + "'");
  }
  return {Kind::kNode, id};
}

void ExperimentConfig::validate() const {
  if (n < 2) throw InputError("experiment needs n >= 2");
  if (!(radius > 0.0)) throw InputError("experiment needs a positive radius");
  if (seeds.empty()) throw InputError("experiment needs at least one seed");
  if (targets.empty()) throw InputError("experiment needs at least one target");
}

std::vector<MeanSweepRow> average_sweeps(const std::vector<SeedRun>& runs) {
  if (runs.empty()) return {};
  std::size_t common = runs.front().rows.size();
  for (const SeedRun& r : runs) common = std::min(common, r.rows.size());

  const double count = static_cast<double>(runs.size());
  std::vector<MeanSweepRow> mean(common);
  for (std::size_t h = 0; h < common; ++h) {
    MeanSweepRow& m = mean[h];
    m.h = static_cast<std::uint32_t>(h);
    for (const SeedRun& r : runs) {
      m.suppressed += static_cast<double>(r.rows[h].suppressed_count);
      m.candidates += static_cast<double>(r.rows[h].candidate_count);
      m.privacy += r.rows[h].privacy;
      m.cost += static_cast<double>(r.rows[h].cost);
    }
    m.suppressed /= count;
    m.candidates /= count;
    m.privacy /= count;
    m.cost /= count;
  }
  return mean;
}

std::vector<TargetRuns> run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t seeds = config.seeds.size();
  const std::size_t targets = config.targets.size();

  // runs[seed][target]
  std::vector<std::vector<SeedRun>> runs(seeds, std::vector<SeedRun>(targets));
  parallel_for(seeds, [&](std::size_t i) {
    const std::uint64_t seed = config.seeds[i];
    const GeoGraph geo = generate_rgg(config.n, config.radius, seed);
    const Graph& g = geo.graph;
    std::optional<DensityMap> density;
    if (config.density_path) density = read_density(*config.density_path, g.node_count());
    const auto central = betweenness(g);

    for (std::size_t t = 0; t < targets; ++t) {
      const Target& target = config.targets[t];
      SeedRun& run = runs[i][t];
      run.seed = seed;
      run.node_count = g.node_count();
      run.discarded = geo.discarded;
      switch (target.kind) {
        case Target::Kind::kMaxBetweenness:
          run.node = argmax_node(central);
          break;
        case Target::Kind::kMinBetweenness:
          run.node = argmin_node(central);
          break;
        case Target::Kind::kNode:
          if (!g.contains(target.node)) {
            throw InputError("target node " + std::to_string(target.node) +
                             " is outside the largest component for seed " + std::to_string(seed));
          }
          run.node = target.node;
          break;
      }
      run.betweenness = central[run.node];
      run.rows = sweep(g, run.node, density);
    }
  });

  std::vector<TargetRuns> out(targets);
  for (std::size_t t = 0; t < targets; ++t) {
    out[t].target = config.targets[t];
    for (std::size_t i = 0; i < seeds; ++i) out[t].runs.push_back(std::move(runs[i][t]));
    out[t].mean = average_sweeps(out[t].runs);
  }
  return out;
}

void write_experiment(const std::filesystem::path& dir, const std::vector<TargetRuns>& results) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create '" + dir.string() + "': " + ec.message());

  auto open = [](const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    return out;
  };
  for (const TargetRuns& tr : results) {
    const std::string label = tr.target.label();
    for (const SeedRun& run : tr.runs) {
      auto out = open(dir / ("sweep_" + label + "_seed" + std::to_string(run.seed) + ".csv"));
      write_sweep_csv(out, run.rows);
    }
    auto out = open(dir / ("sweep_" + label + "_mean.csv"));
    write_sweep_csv(out, tr.mean);
  }
}

}  // namespace privzone
