#pragma once

#include <cstdint>
#include <vector>

#include "rsajam/graph.hpp"
#include "rsajam/models.hpp"

namespace rsajam {

// Direct process on an explicit graph: the oracle the exploration
// algorithms are checked against.
ProcessResult run_direct(const GraphInstance& graph,
                         const std::vector<std::int32_t>& order,
                         const ModelSpec& spec, int grid_points = 101);

// Counts-only fast path: the Markov chain on class counts, edges never
// materialized. Deterministic given (base_seed, replication).
Trajectory run_explore_counts(const ModelSpec& spec, std::uint64_t base_seed,
                              std::uint32_t replication, int grid_points = 101);

struct CoupledOptions {
  // Test hook: perturb the consulted edge keys so the post-hoc adjacency
  // check trips.
  bool corrupt_edge_keys = false;
};

// Exploration algorithm consuming the same per-pair randomness the graph
// was sampled from. Labels equal run_direct's on the same graph and order;
// any disagreement between consulted randomness and the adjacency raises
// coupling_error.
ProcessResult run_explore_coupled(const GraphInstance& graph,
                                  const std::vector<std::int32_t>& order,
                                  const ModelSpec& spec, int grid_points = 101,
                                  const CoupledOptions& options = {});

JammingSummary jamming_summary(const Trajectory& traj);

// Structural checks on oracle outputs (final labels against the explicit
// graph). Each returns true when the invariant holds.
bool check_threshold_maximal(const GraphInstance& graph,
                             const std::vector<int>& labels, int K);
bool check_sfap_assignment(const GraphInstance& graph,
                           const std::vector<int>& labels, int K);
bool check_tetris_replay(const GraphInstance& graph,
                         const std::vector<std::int32_t>& order,
                         const std::vector<int>& labels, int K);

}  // namespace rsajam
