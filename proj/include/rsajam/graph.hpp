#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "rsajam/rng.hpp"

namespace rsajam {

struct SeedInfo {
  std::uint64_t base_seed = 0;
  std::uint32_t replication = 0;
};

// A sampled G(n, p) instance with p = min(c/n, 1). Immutable once built;
// adjacency lists are sorted, symmetric and loop-free. `exhaustive` records
// whether every pair was tested against its own edge key (required for
// coupled runs).
struct GraphInstance {
  std::int64_t n = 0;
  double c = 0.0;
  SeedInfo seed;
  bool exhaustive = true;
  std::vector<std::vector<std::int32_t>> adjacency;

  double edge_prob() const {
    const double p = c / static_cast<double>(n);
    return p > 1.0 ? 1.0 : p;
  }

  bool has_edge(std::int32_t i, std::int32_t j) const;
  std::int64_t edge_count() const;
};

inline constexpr std::int64_t kDefaultExhaustiveCap = 10000;

GraphInstance sample_er_graph(std::int64_t n, double c, std::uint64_t base_seed,
                              std::uint32_t replication,
                              std::int64_t exhaustive_cap = kDefaultExhaustiveCap);

// Uniform permutation of {0, ..., n-1} via Fisher-Yates on the Permutation
// stream.
std::vector<std::int32_t> sample_permutation(std::int64_t n,
                                             std::uint64_t base_seed,
                                             std::uint32_t replication);

// Edge-list dump: one "i j" line per edge, 1-based, i < j, sorted.
void write_edge_list(const GraphInstance& graph, std::ostream& out);

}  // namespace rsajam
