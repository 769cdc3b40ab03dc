// rsajam: simulate generalized RSA on Erdos-Renyi graphs, solve the fluid
// limits, and compare the two.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsajam/errors.hpp"
#include "rsajam/fluid.hpp"
#include "rsajam/graph.hpp"
#include "rsajam/io.hpp"
#include "rsajam/models.hpp"
#include "rsajam/montecarlo.hpp"
#include "rsajam/processes.hpp"
#include "rsajam/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitBracket = 4;
constexpr int kExitValidation = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_c_values(double c, const std::string& c_range) {
  if (c_range.empty()) return {c};
  double lo = 0, hi = 0, step = 0;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(c_range);
  if (!(in >> lo >> sep1 >> hi >> sep2 >> step) || sep1 != ':' || sep2 != ':' ||
      step <= 0 || hi < lo) {
    throw UsageError("--c-range must be lo:hi:step with step > 0 and hi >= lo");
  }
  std::vector<double> values;
  for (double x = lo; x <= hi + 1e-12; x += step) values.push_back(x);
  return values;
}

struct OutputFile {
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

std::unique_ptr<OutputFile> open_output(const std::string& path) {
  auto out = std::make_unique<OutputFile>();
  if (path != "-") {
    out->file.open(path);
    if (!out->file) throw std::ios_base::failure("cannot open output file: " + path);
  }
  return out;
}

using rsajam::ModelKind;
using rsajam::ModelSpec;

int cmd_simulate(ModelKind kind, int K, double c, const std::string& c_range,
                 std::int64_t n, int reps, std::uint64_t seed, int grid,
                 const std::string& out_path, const std::string& format,
                 const std::string& mode, const std::string& labels_out,
                 const std::string& dump_graph) {
  const auto c_values = parse_c_values(c, c_range);
  auto out = open_output(out_path);

  std::vector<rsajam::EnsembleResult> results;
  for (double cv : c_values) {
    const ModelSpec spec{kind, K, cv, n};
    spec.validate();
    if (mode == "counts") {
      results.push_back(rsajam::run_ensemble(spec, reps, seed, grid));
    } else {
      // Oracle modes: explicit graphs, one per replication.
      std::vector<rsajam::Trajectory> trajs;
      for (int r = 0; r < reps; ++r) {
        const auto graph = rsajam::sample_er_graph(n, cv, seed, static_cast<std::uint32_t>(r));
        const auto order = rsajam::sample_permutation(n, seed, static_cast<std::uint32_t>(r));
        auto res = mode == "direct"
                       ? rsajam::run_direct(graph, order, spec, grid)
                       : rsajam::run_explore_coupled(graph, order, spec, grid);
        if (r == 0 && !labels_out.empty()) {
          auto lout = open_output(labels_out);
          rsajam::write_labels(lout->stream(), spec, res.labels);
        }
        if (r == 0 && !dump_graph.empty()) {
          auto gout = open_output(dump_graph);
          rsajam::write_edge_list(graph, gout->stream());
        }
        trajs.push_back(std::move(res.trajectory));
      }
      // Aggregate into the shared schema.
      rsajam::EnsembleResult ens;
      ens.spec = spec;
      ens.reps = reps;
      ens.grid = trajs.front().grid;
      const std::size_t M = ens.grid.size();
      const std::size_t KK = static_cast<std::size_t>(K);
      ens.mean_alpha.assign(M, std::vector<double>(KK, 0.0));
      ens.stderr_alpha.assign(M, std::vector<double>(KK, 0.0));
      for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t k = 0; k < KK; ++k) {
          double mean = 0.0;
          for (const auto& t : trajs) mean += t.alpha[j][k];
          mean /= reps;
          double var = 0.0;
          if (reps > 1) {
            for (const auto& t : trajs) {
              var += (t.alpha[j][k] - mean) * (t.alpha[j][k] - mean);
            }
            var /= reps - 1;
          }
          ens.mean_alpha[j][k] = mean;
          ens.stderr_alpha[j][k] = std::sqrt(var / reps);
        }
      }
      results.push_back(std::move(ens));
    }
  }

  if (format == "csv") {
    bool header = true;
    for (const auto& ens : results) {
      rsajam::write_simulate_csv(out->stream(), ens, header);
      header = false;
    }
  } else {
    std::vector<rsajam::PlotSeries> series(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
      series[static_cast<std::size_t>(k)].name =
          "class " + std::to_string(results.front().spec.class_label(k));
    }
    if (results.size() == 1) {
      const auto& ens = results.front();
      for (std::size_t j = 0; j < ens.grid.size(); ++j) {
        for (int k = 0; k < K; ++k) {
          series[static_cast<std::size_t>(k)].points.emplace_back(
              ens.grid[j], ens.mean_alpha[j][static_cast<std::size_t>(k)]);
        }
      }
      rsajam::write_svg_plot(out->stream(), "t", "alpha", series);
    } else {
      for (const auto& ens : results) {
        for (int k = 0; k < K; ++k) {
          series[static_cast<std::size_t>(k)].points.emplace_back(
              ens.spec.c, ens.mean_alpha.back()[static_cast<std::size_t>(k)]);
        }
      }
      rsajam::write_svg_plot(out->stream(), "c", "alpha(1)", series);
    }
  }
  if (!out->stream()) throw std::ios_base::failure("write failed");
  return kExitOk;
}

int cmd_fluid(ModelKind kind, int K, double c, const std::string& c_range,
              double step, int grid, const std::string& out_path,
              const std::string& format) {
  const auto c_values = parse_c_values(c, c_range);
  auto out = open_output(out_path);
  std::vector<rsajam::FluidSolution> sols;
  for (double cv : c_values) sols.push_back(rsajam::integrate(kind, K, cv, step, grid));

  if (format == "csv") {
    bool header = true;
    for (const auto& sol : sols) {
      rsajam::write_fluid_csv(out->stream(), sol, header);
      header = false;
    }
  } else {
    const int label_base = kind == ModelKind::Threshold ? 0 : 1;
    std::vector<rsajam::PlotSeries> series(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
      series[static_cast<std::size_t>(k)].name =
          "class " + std::to_string(label_base + k);
    }
    if (sols.size() == 1) {
      const auto& sol = sols.front();
      for (std::size_t j = 0; j < sol.grid.size(); ++j) {
        for (int k = 0; k < K; ++k) {
          series[static_cast<std::size_t>(k)].points.emplace_back(
              sol.grid[j], sol.alpha[j][static_cast<std::size_t>(k)]);
        }
      }
      rsajam::write_svg_plot(out->stream(), "t", "alpha", series);
    } else {
      for (const auto& sol : sols) {
        for (int k = 0; k < K; ++k) {
          series[static_cast<std::size_t>(k)].points.emplace_back(
              sol.c, sol.alpha.back()[static_cast<std::size_t>(k)]);
        }
      }
      rsajam::write_svg_plot(out->stream(), "c", "alpha(1)", series);
    }
  }
  if (!out->stream()) throw std::ios_base::failure("write failed");
  return kExitOk;
}

int cmd_compare(ModelKind kind, int K, double c, std::int64_t n, int reps,
                std::uint64_t seed, int grid, double step, double tol) {
  const ModelSpec spec{kind, K, c, n};
  spec.validate();
  const auto ens = rsajam::run_ensemble(spec, reps, seed, grid);
  const auto fl = rsajam::integrate(kind, K, c, step, grid);
  const double dev = rsajam::deviation_from_fluid(ens, fl);
  std::cout << "sup-norm deviation: " << rsajam::format_number(dev) << '\n';
  return dev <= tol ? kExitOk : kExitTolerance;
}

int cmd_crossing(int K, const std::string& classes, const std::string& bracket,
                 double tol, double step) {
  int k_low = 0, k_high = 0;
  char sep = 0;
  {
    std::istringstream in(classes);
    if (!(in >> k_low >> sep >> k_high) || sep != ',') {
      throw UsageError("--classes must be two heights like 1,2");
    }
  }
  double c_lo = 0, c_hi = 0;
  {
    std::istringstream in(bracket);
    if (!(in >> c_lo >> sep >> c_hi) || sep != ':') {
      throw UsageError("--bracket must be lo:hi");
    }
  }
  const double c_star = rsajam::tetris_crossing(K, k_low, k_high, c_lo, c_hi, tol, step);
  std::printf("c* = %.4f\n", c_star);
  return kExitOk;
}

int cmd_validate(int trials, std::uint64_t seed, std::int64_t max_n, double max_c,
                 int max_K, bool corrupt, int enum_total) {
  bool all_ok = true;
  std::printf("%-12s %8s %10s  %s\n", "check", "trials", "failures", "result");
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
    rsajam::CouplingSweepConfig config;
    config.trials = trials;
    config.base_seed = seed;
    config.max_n = max_n;
    config.max_c = max_c;
    config.max_K = max_K;
    config.corrupt_edge_keys = corrupt;
    const auto report = rsajam::coupling_sweep(kind, config);
    const bool ok = report.failures == 0;
    all_ok = all_ok && ok;
    std::printf("%-12s %8d %10d  %s", rsajam::to_string(kind).c_str(),
                report.trials, report.failures, ok ? "PASS" : "FAIL");
    if (!ok) {
      std::printf(" (first mismatch: trial %d, vertex %lld)",
                  report.first_bad_trial,
                  static_cast<long long>(report.first_bad_vertex + 1));
    }
    std::printf("\n");
  }
  const auto enumeration =
      rsajam::cond_moment_enumeration_check(enum_total, 3, {0.1, 0.5, 0.9});
  const bool enum_ok =
      enumeration.max_mean_error <= 1e-10 && enumeration.inequality_violations == 0;
  all_ok = all_ok && enum_ok;
  std::printf("%-12s %8ld %10ld  %s (max error %.3g)\n", "enumeration",
              enumeration.cases_checked, enumeration.inequality_violations,
              enum_ok ? "PASS" : "FAIL", enumeration.max_mean_error);
  return all_ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized random sequential adsorption on Erdos-Renyi graphs"};
  app.require_subcommand(1);

  std::string model = "threshold";
  int K = 1;
  double c = 1.0;
  std::string c_range;
  std::int64_t n = 100000;
  int reps = 1;
  std::uint64_t seed = 0;
  int grid = 101;
  double step = rsajam::kDefaultFluidStep;
  std::string out_path = "-";
  std::string format = "csv";
  std::string svg_path;
  double tol = 0.01;

  auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--model", model, "threshold | tetris | sfap")
        ->check(CLI::IsMember({"threshold", "tetris", "sfap"}));
    cmd->add_option("--K", K, "parameter K");
    cmd->add_option("--c", c, "mean degree");
    cmd->add_option("--c-range", c_range, "sweep lo:hi:step");
  };
  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", out_path, "output path, - for stdout");
    cmd->add_option("--format", format, "csv | svg")
        ->check(CLI::IsMember({"csv", "svg"}));
    cmd->add_option("--svg", svg_path, "shorthand: write SVG to this path");
  };

  auto* sim = app.add_subcommand("simulate", "run simulation ensembles");
  std::string mode = "counts";
  std::string labels_out, dump_graph;
  add_model_flags(sim);
  sim->add_option("--n", n, "graph size");
  sim->add_option("--reps", reps, "replications")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "base seed");
  sim->add_option("--grid", grid, "time grid points");
  sim->add_option("--mode", mode, "counts | direct | coupled")
      ->check(CLI::IsMember({"counts", "direct", "coupled"}));
  sim->add_option("--labels-out", labels_out, "per-vertex label dump (oracle modes)");
  sim->add_option("--dump-graph", dump_graph, "edge-list dump (oracle modes)");
  add_output_flags(sim);

  auto* fl = app.add_subcommand("fluid", "integrate the fluid limit");
  add_model_flags(fl);
  fl->add_option("--step", step, "integrator step");
  fl->add_option("--grid", grid, "time grid points");
  add_output_flags(fl);

  auto* cmp = app.add_subcommand("compare", "simulation vs fluid sup-norm deviation");
  add_model_flags(cmp);
  cmp->add_option("--n", n, "graph size");
  cmp->add_option("--reps", reps, "replications")->check(CLI::PositiveNumber);
  cmp->add_option("--seed", seed, "base seed");
  cmp->add_option("--grid", grid, "time grid points");
  cmp->add_option("--step", step, "integrator step");
  cmp->add_option("--tol", tol, "failure threshold on the deviation");

  auto* cross = app.add_subcommand("crossing", "locate a Tetris density crossing");
  int cross_K = 2;
  std::string classes = "1,2";
  std::string bracket = "1:10";
  double cross_tol = 1e-4;
  double cross_step = 1e-4;
  cross->add_option("--K", cross_K, "parameter K");
  cross->add_option("--classes", classes, "height pair, e.g. 1,2");
  cross->add_option("--bracket", bracket, "c bracket lo:hi");
  cross->add_option("--tol", cross_tol, "bisection width");
  cross->add_option("--step", cross_step, "integrator step per evaluation");

  auto* val = app.add_subcommand("validate", "coupling and conditional-moment oracles");
  int trials = 1000;
  std::int64_t max_n = 200;
  double max_c = 8.0;
  int max_K = 4;
  bool corrupt = false;
  int enum_total = 10;
  val->add_option("--trials", trials, "coupling trials per model");
  val->add_option("--seed", seed, "base seed");
  val->add_option("--max-n", max_n, "largest graph size");
  val->add_option("--max-c", max_c, "largest mean degree");
  val->add_option("--max-K", max_K, "largest K");
  val->add_flag("--corrupt-edge-keys", corrupt, "fault-injection negative control");
  val->add_option("--enum-total", enum_total, "enumeration size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!svg_path.empty()) {
      format = "svg";
      out_path = svg_path;
    }
    if (sim->parsed() || fl->parsed() || cmp->parsed()) {
      if (K < 1) throw UsageError("K must be >= 1");
      if (n < 1) throw UsageError("n must be >= 1");
      if (!(step > 0.0 && step <= rsajam::kMaxFluidStep)) {
        throw UsageError("step must lie in (0, 0.01]");
      }
      if (grid < 2) throw UsageError("grid must be >= 2");
    }
    const ModelKind kind = rsajam::model_kind_from_string(model);
    if (sim->parsed()) {
      return cmd_simulate(kind, K, c, c_range, n, reps, seed, grid, out_path,
                          format, mode, labels_out, dump_graph);
    }
    if (fl->parsed()) {
      return cmd_fluid(kind, K, c, c_range, step, grid, out_path, format);
    }
    if (cmp->parsed()) {
      return cmd_compare(kind, K, c, n, reps, seed, grid, step, tol);
    }
    if (cross->parsed()) {
      return cmd_crossing(cross_K, classes, bracket, cross_tol, cross_step);
    }
    if (val->parsed()) {
      if (trials < 1) throw UsageError("trials must be >= 1");
      return cmd_validate(trials, seed, max_n, max_c, max_K, corrupt, enum_total);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const rsajam::bracket_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBracket;
  } catch (const rsajam::coupling_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
