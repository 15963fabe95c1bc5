#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "privzone/io.hpp"
#include "privzone/optimizer.hpp"

namespace privzone {

/// Which node of each generated graph plays the private node.
struct Target {
  enum class Kind { kMaxBetweenness, kMinBetweenness, kNode };
  Kind kind = Kind::kMaxBetweenness;
  NodeId node = 0;  // kNode only

  /// Short label used in output file names: maxbc, minbc, node<k>.
  std::string label() const;

  /// Parses "max", "min" or a node id.
  static Target parse(const std::string& text);
};

struct ExperimentConfig {
  std::size_t n = 1000;
  double radius = 0.1;
  std::vector<std::uint64_t> seeds;
  std::vector<Target> targets;
  std::optional<std::filesystem::path> density_path;

  /// Throws InputError when n < 2, radius <= 0, or no seed/target is given.
  void validate() const;
};

struct SeedRun {
  std::uint64_t seed = 0;
  std::size_t node_count = 0;  // after keeping the largest component
  std::size_t discarded = 0;
  NodeId node = 0;
  double betweenness = 0.0;
  std::vector<SweepRow> rows;
};

struct TargetRuns {
  Target target;
  std::vector<SeedRun> runs;      // in config seed order
  std::vector<MeanSweepRow> mean;  // truncated at the shortest sweep
};

/// Generates one graph per seed, locates every target and sweeps it.
std::vector<TargetRuns> run_experiment(const ExperimentConfig& config);

/// Column-wise mean over the runs, for h up to the shortest sweep.
std::vector<MeanSweepRow> average_sweeps(const std::vector<SeedRun>& runs);

/// Writes sweep_<label>_seed<seed>.csv and sweep_<label>_mean.csv under dir.
void write_experiment(const std::filesystem::path& dir, const std::vector<TargetRuns>& results);

}  // namespace privzone
