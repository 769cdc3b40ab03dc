#pragma once

#include <cstdint>
#include <vector>

#include "rsajam/models.hpp"

namespace rsajam {

// Coupled-vs-direct equality sweep over random (n, c, K) specs.
struct CouplingSweepReport {
  ModelKind kind = ModelKind::Threshold;
  int trials = 0;
  int failures = 0;
  int first_bad_trial = -1;
  std::int64_t first_bad_vertex = -1;
};

struct CouplingSweepConfig {
  int trials = 1000;
  std::uint64_t base_seed = 0;
  std::int64_t max_n = 200;
  double max_c = 8.0;
  int max_K = 4;
  bool corrupt_edge_keys = false;  // negative control
};

CouplingSweepReport coupling_sweep(ModelKind kind,
                                   const CouplingSweepConfig& config);

// Exhaustive enumeration check of the conditional binomial mean and the
// second-moment bound, over every size vector with at most `max_parts`
// parts summing to at most `max_total`, each p, and every feasible R.
struct CondMomentReport {
  long cases_checked = 0;
  double max_mean_error = 0.0;
  long inequality_violations = 0;
};

CondMomentReport cond_moment_enumeration_check(int max_total, int max_parts,
                                      const std::vector<double>& ps);

}  // namespace rsajam
