#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "privzone/centrality.hpp"
#include "privzone/error.hpp"
#include "privzone/experiment.hpp"
#include "privzone/geometric.hpp"
#include "privzone/io.hpp"
#include "privzone/line_graph.hpp"
#include "privzone/observer.hpp"
#include "privzone/optimizer.hpp"
#include "privzone/parallel.hpp"
#include "privzone/policy.hpp"

namespace privzone::cli {
namespace {

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  write(file);
  if (!file) throw InputError("failed writing '" + path + "'");
}

std::optional<DensityMap> load_density(const std::string& path, const Graph& g) {
  if (path.empty()) return std::nullopt;
  return read_density(path, g.node_count());
}

struct GraphArgs {
  std::string graph;
  NodeId source = 0;
  std::string density;
};

void add_graph_args(CLI::App* cmd, GraphArgs& args, bool with_source = true) {
  cmd->add_option("-g,--graph", args.graph, "Edge-list file")->required();
  if (with_source) cmd->add_option("-s,--source", args.source, "Private node id")->required();
}

void add_density_arg(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("-d,--density", args.density,
                  "Density file (`node_id rho` lines, optional `default rho`)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hop-radius location-privacy analysis for transportation graphs"};
  app.require_subcommand(1);
  app.footer(std::string("Worker thread count is set by the ") + kThreadsEnvVar +
             " environment variable.");

  // analyze
  GraphArgs analyze_args;
  std::uint32_t analyze_hops = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate one hop-radius policy (JSON)");
  add_graph_args(analyze_cmd, analyze_args);
  analyze_cmd->add_option("-H,--hops", analyze_hops, "Suppression radius in hops")->required();
  add_density_arg(analyze_cmd, analyze_args);

  // sweep
  GraphArgs sweep_args;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Privacy and cost for every radius (CSV)");
  add_graph_args(sweep_cmd, sweep_args);
  add_density_arg(sweep_cmd, sweep_args);
  sweep_cmd->add_option("-o,--out", sweep_out, "Output CSV (default: stdout)");

  // optimize
  GraphArgs opt_args;
  std::optional<int> opt_problem;
  std::optional<double> opt_gamma;
  std::optional<double> opt_xi;
  bool opt_asymmetric = false;
  bool opt_strict = false;
  auto* opt_cmd = app.add_subcommand("optimize", "Choose the optimal radius (JSON)");
  add_graph_args(opt_cmd, opt_args);
  add_density_arg(opt_cmd, opt_args);
  opt_cmd->add_option("-p,--problem", opt_problem, "1: privacy + gamma*cost, 2: min cost s.t. privacy <= xi")
      ->check(CLI::IsMember({1, 2}));
  auto* gamma_opt = opt_cmd->add_option("--gamma", opt_gamma, "Trade-off weight (problem 1)");
  auto* xi_opt = opt_cmd->add_option("--xi", opt_xi, "Privacy ceiling in [0,1] (problem 2)");
  gamma_opt->excludes(xi_opt);
  opt_cmd->add_flag("--asymmetric", opt_asymmetric,
                    "Exhaustive search over arbitrary suppressed sets (problem 1, <= 20 nodes)");
  opt_cmd->add_flag("--strict", opt_strict, "Exit with code 4 when problem 2 is infeasible");

  // gen-rgg
  std::size_t rgg_n = 1000;
  double rgg_radius = 0.1;
  std::uint64_t rgg_seed = 1;
  std::string rgg_edges;
  std::string rgg_positions;
  auto* rgg_cmd = app.add_subcommand("gen-rgg", "Random geometric graph on the unit square");
  rgg_cmd->add_option("-n,--nodes", rgg_n, "Number of sampled points")->capture_default_str();
  rgg_cmd->add_option("-r,--radius", rgg_radius, "Connection radius")->capture_default_str();
  rgg_cmd->add_option("--seed", rgg_seed, "PRNG seed")->capture_default_str();
  rgg_cmd->add_option("-e,--edges", rgg_edges, "Edge-list output (default: stdout)");
  rgg_cmd->add_option("--positions", rgg_positions, "Positions output (`node_id x y`)");

  // betweenness
  GraphArgs bc_args;
  std::string bc_out;
  auto* bc_cmd = app.add_subcommand("betweenness", "Path-count betweenness per node (CSV)");
  add_graph_args(bc_cmd, bc_args, false);
  bc_cmd->add_option("-o,--out", bc_out, "Output CSV (default: stdout)");

  // line-graph
  GraphArgs lg_args;
  std::string lg_edges;
  std::string lg_mapping;
  auto* lg_cmd = app.add_subcommand("line-graph", "Line graph edge list and node-to-edge mapping");
  add_graph_args(lg_cmd, lg_args, false);
  lg_cmd->add_option("-e,--edges", lg_edges, "Line-graph edge list (default: stdout)");
  lg_cmd->add_option("-m,--mapping", lg_mapping, "Mapping output (`line_node_id i j`)");

  // simulate
  GraphArgs sim_args;
  std::uint32_t sim_hops = 0;
  std::size_t sim_steps = 100000;
  std::uint64_t sim_seed = 1;
  std::string sim_trace;
  std::string sim_posterior;
  auto* sim_cmd = app.add_subcommand("simulate", "Random walk with suppression and observer inference");
  add_graph_args(sim_cmd, sim_args);
  add_density_arg(sim_cmd, sim_args);
  sim_cmd->add_option("-H,--hops", sim_hops, "Suppression radius in hops")->required();
  sim_cmd->add_option("--steps", sim_steps, "Walk length")->capture_default_str();
  sim_cmd->add_option("--seed", sim_seed, "PRNG seed")->capture_default_str();
  sim_cmd->add_option("--trace", sim_trace, "Trace CSV output (`t,node,broadcast`)");
  sim_cmd->add_option("--posterior", sim_posterior, "Posterior CSV output (`node,mass`)");

  // experiment
  ExperimentConfig exp;
  std::vector<std::string> exp_targets;
  std::string exp_density;
  std::string exp_dir;
  auto* exp_cmd = app.add_subcommand("experiment", "Sweeps on random geometric graphs over many seeds");
  exp_cmd->add_option("-n,--nodes", exp.n, "Points per graph")->capture_default_str();
  exp_cmd->add_option("-r,--radius", exp.radius, "Connection radius")->capture_default_str();
  exp_cmd->add_option("--seeds", exp.seeds, "Seeds (default 1..10)")->delimiter(',');
  exp_cmd->add_option("-t,--target", exp_targets, "max, min or a node id (default: max,min)")
      ->delimiter(',');
  exp_cmd->add_option("-d,--density", exp_density, "Density file applied to every graph");
  exp_cmd->add_option("-o,--out-dir", exp_dir, "Directory for the CSV files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) {
      const Graph g = read_edge_list(analyze_args.graph);
      const auto density = load_density(analyze_args.density, g);
      out << to_json(analyze(g, analyze_args.source, analyze_hops, density)).dump(2) << '\n';
    } else if (*sweep_cmd) {
      const Graph g = read_edge_list(sweep_args.graph);
      const auto density = load_density(sweep_args.density, g);
      const auto rows = sweep(g, sweep_args.source, density);
      emit(sweep_out, out, [&](std::ostream& o) { write_sweep_csv(o, rows); });
    } else if (*opt_cmd) {
      if (opt_gamma.has_value() == opt_xi.has_value()) {
        throw InputError("optimize needs exactly one of --gamma (problem 1) or --xi (problem 2)");
      }
      const int problem = opt_gamma ? 1 : 2;
      if (opt_problem && *opt_problem != problem) {
        throw InputError("--problem " + std::to_string(*opt_problem) + " does not match " +
                         (opt_gamma ? "--gamma" : "--xi"));
      }
      if (opt_asymmetric && problem != 1) throw InputError("--asymmetric requires --gamma");
      const Graph g = read_edge_list(opt_args.graph);
      const auto density = load_density(opt_args.density, g);
      if (opt_asymmetric) {
        if (density) throw InputError("--asymmetric does not take a density prior");
        out << to_json(solve_asymmetric_exhaustive(g, opt_args.source, *opt_gamma)).dump(2) << '\n';
        return kOk;
      }
      const Solution sol = problem == 1 ? solve_problem1(g, opt_args.source, *opt_gamma, density)
                                        : solve_problem2(g, opt_args.source, *opt_xi, density);
      out << to_json(sol).dump(2) << '\n';
      if (opt_strict && sol.feasible == false) {
        err << "no radius meets privacy <= " << *opt_xi << "\n";
        return kInfeasible;
      }
    } else if (*rgg_cmd) {
      const GeoGraph geo = generate_rgg(rgg_n, rgg_radius, rgg_seed);
      emit(rgg_edges, out, [&](std::ostream& o) { write_edge_list(o, geo.graph); });
      if (!rgg_positions.empty()) {
        emit(rgg_positions, out, [&](std::ostream& o) { write_positions(o, geo.positions); });
      }
      err << "nodes " << geo.graph.node_count() << ", edges " << geo.graph.edge_count()
          << ", discarded " << geo.discarded << "\n";
    } else if (*bc_cmd) {
      const Graph g = read_edge_list(bc_args.graph);
      const auto values = betweenness(g);
      emit(bc_out, out, [&](std::ostream& o) { write_betweenness_csv(o, values); });
    } else if (*lg_cmd) {
      const Graph g = read_edge_list(lg_args.graph);
      const LineGraph lg = line_graph(g);
      emit(lg_edges, out, [&](std::ostream& o) { write_edge_list(o, lg.graph); });
      if (!lg_mapping.empty()) {
        emit(lg_mapping, out, [&](std::ostream& o) { write_line_graph_mapping(o, lg); });
      }
    } else if (*sim_cmd) {
      const Graph g = read_edge_list(sim_args.graph);
      const auto density = load_density(sim_args.density, g);
      const WalkTrace trace = simulate_walk(g, sim_args.source, sim_hops, sim_steps, sim_seed);
      const NodeSet observed = observed_broadcast_set(trace);
      const PolicyAnalysis truth = analyze(g, sim_args.source, sim_hops, density);
      const bool converged = observed == truth.broadcast;

      nlohmann::json summary = {
          {"steps", trace.steps.size()},
          {"cover_time", trace.cover_time ? nlohmann::json(*trace.cover_time) : nlohmann::json()},
          {"observed_broadcast", observed},
          {"converged", converged},
          {"predicted_privacy", truth.privacy},
      };
      // Posteriors are only defined for converged broadcast sets.
      if (converged) {
        const Posterior post = posterior_bruteforce(g, observed, density);
        summary["posterior_at_source"] = post.mass[sim_args.source];
        summary["posterior_support"] = support(post);
        if (!sim_posterior.empty()) {
          emit(sim_posterior, out, [&](std::ostream& o) { write_posterior_csv(o, post); });
        }
      } else {
        summary["posterior_at_source"] = nullptr;
      }
      if (!sim_trace.empty()) {
        emit(sim_trace, out, [&](std::ostream& o) { write_trace_csv(o, trace); });
      }
      out << summary.dump(2) << '\n';
    } else if (*exp_cmd) {
      if (exp.seeds.empty()) {
        for (std::uint64_t s = 1; s <= 10; ++s) exp.seeds.push_back(s);
      }
      if (exp_targets.empty()) exp_targets = {"max", "min"};
      for (const auto& t : exp_targets) exp.targets.push_back(Target::parse(t));
      if (!exp_density.empty()) exp.density_path = exp_density;
      const auto results = run_experiment(exp);
      write_experiment(exp_dir, results);

      nlohmann::json summary = nlohmann::json::array();
      for (const auto& tr : results) {
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& r : tr.runs) {
          runs.push_back({{"seed", r.seed},
                          {"node", r.node},
                          {"betweenness", r.betweenness},
                          {"nodes", r.node_count},
                          {"discarded", r.discarded},
                          {"diameter", r.rows.size() - 1}});
        }
        summary.push_back({{"target", tr.target.label()}, {"runs", runs},
                           {"mean_rows", tr.mean.size()}});
      }
      out << summary.dump(2) << '\n';
    }
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kGraphError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace privzone::cli
