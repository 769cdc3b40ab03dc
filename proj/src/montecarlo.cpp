#include "rsajam/montecarlo.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "rsajam/processes.hpp"

namespace rsajam {

namespace {

int thread_budget(int reps) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("RSAJAM_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(hw < static_cast<unsigned>(reps) ? hw : static_cast<unsigned>(reps));
}

}  // namespace

EnsembleResult run_ensemble(const ModelSpec& spec, int reps,
                            std::uint64_t base_seed, int grid_points) {
  spec.validate();
  if (reps < 1) throw std::invalid_argument("run_ensemble: reps must be >= 1");

  std::vector<Trajectory> trajectories(static_cast<std::size_t>(reps));
  std::vector<double> totals(static_cast<std::size_t>(reps));
  const int workers = thread_budget(reps);
  auto work = [&](int first, int stride) {
    for (int r = first; r < reps; r += stride) {
      trajectories[static_cast<std::size_t>(r)] = run_explore_counts(
          spec, base_seed, static_cast<std::uint32_t>(r), grid_points);
      totals[static_cast<std::size_t>(r)] =
          jamming_summary(trajectories[static_cast<std::size_t>(r)]).total_active;
    }
  };
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& th : pool) th.join();
  }

  EnsembleResult ens;
  ens.spec = spec;
  ens.reps = reps;
  ens.grid = trajectories.front().grid;
  const std::size_t M = ens.grid.size();
  const std::size_t K = static_cast<std::size_t>(spec.tracked_classes());
  ens.mean_alpha.assign(M, std::vector<double>(K, 0.0));
  ens.stderr_alpha.assign(M, std::vector<double>(K, 0.0));
  const double nr = static_cast<double>(reps);
  for (std::size_t j = 0; j < M; ++j) {
    for (std::size_t k = 0; k < K; ++k) {
      double mean = 0.0;
      for (int r = 0; r < reps; ++r) {
        mean += trajectories[static_cast<std::size_t>(r)].alpha[j][k];
      }
      mean /= nr;
      double var = 0.0;
      if (reps > 1) {
        for (int r = 0; r < reps; ++r) {
          const double d = trajectories[static_cast<std::size_t>(r)].alpha[j][k] - mean;
          var += d * d;
        }
        var /= nr - 1.0;
      }
      ens.mean_alpha[j][k] = mean;
      ens.stderr_alpha[j][k] = std::sqrt(var / nr);
    }
  }
  double mean_total = 0.0;
  for (double t : totals) mean_total += t;
  mean_total /= nr;
  double var_total = 0.0;
  if (reps > 1) {
    for (double t : totals) var_total += (t - mean_total) * (t - mean_total);
    var_total /= nr - 1.0;
  }
  ens.mean_total_active = mean_total;
  ens.stderr_total_active = std::sqrt(var_total / nr);
  return ens;
}

double deviation_from_fluid(const EnsembleResult& ens, const FluidSolution& fl) {
  if (ens.spec.kind != fl.kind || ens.spec.K != fl.K || ens.spec.c != fl.c) {
    throw std::invalid_argument("deviation_from_fluid: spec mismatch");
  }
  if (ens.grid.size() != fl.grid.size()) {
    throw std::invalid_argument("deviation_from_fluid: grid mismatch");
  }
  double sup = 0.0;
  for (std::size_t j = 0; j < ens.grid.size(); ++j) {
    if (ens.grid[j] != fl.grid[j]) {
      throw std::invalid_argument("deviation_from_fluid: grid mismatch");
    }
    for (std::size_t k = 0; k < ens.mean_alpha[j].size(); ++k) {
      const double d = std::fabs(ens.mean_alpha[j][k] - fl.alpha[j][k]);
      if (d > sup) sup = d;
    }
  }
  return sup;
}

}  // namespace rsajam
