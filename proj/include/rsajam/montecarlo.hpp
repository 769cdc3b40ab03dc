#pragma once

#include <cstdint>
#include <vector>

#include "rsajam/fluid.hpp"
#include "rsajam/models.hpp"

namespace rsajam {

struct EnsembleResult {
  ModelSpec spec;
  int reps = 0;
  std::vector<double> grid;
  std::vector<std::vector<double>> mean_alpha;    // grid x K
  std::vector<std::vector<double>> stderr_alpha;  // grid x K
  double mean_total_active = 0.0;
  double stderr_total_active = 0.0;
};

// Runs `reps` independent counts-chain simulations (replication indices
// 0..reps-1) and aggregates. Deterministic in (spec, reps, base_seed) and
// independent of the parallel schedule; replication r may run on any
// thread but always lands in slot r. Thread count is capped by the
// RSAJAM_THREADS environment variable.
EnsembleResult run_ensemble(const ModelSpec& spec, int reps,
                            std::uint64_t base_seed, int grid_points = 101);

// Sup-norm distance between the ensemble mean and the fluid trajectory
// over the shared grid and classes.
double deviation_from_fluid(const EnsembleResult& ens, const FluidSolution& fl);

}  // namespace rsajam
