#include "rsajam/processes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsajam/binomial.hpp"
#include "rsajam/errors.hpp"

namespace rsajam {

namespace {

constexpr int kUnselected = -2;

// Records scaled class counts at the grid steps floor(n * t_j).
class TrajectoryRecorder {
 public:
  TrajectoryRecorder(const ModelSpec& spec, int grid_points) {
    traj_.spec = spec;
    traj_.grid = make_time_grid(grid_points);
    steps_.reserve(traj_.grid.size());
    for (double t : traj_.grid) {
      steps_.push_back(static_cast<std::int64_t>(
          std::floor(static_cast<double>(spec.n) * t)));
    }
    traj_.alpha.reserve(traj_.grid.size());
  }

  // Call with the tracked class counts after `step` vertices are explored,
  // for step = 0..n in order.
  void record(std::int64_t step, const std::vector<std::int64_t>& tracked) {
    const double n = static_cast<double>(traj_.spec.n);
    while (next_ < steps_.size() && steps_[next_] == step) {
      std::vector<double> row(tracked.size());
      for (std::size_t k = 0; k < tracked.size(); ++k) {
        row[k] = static_cast<double>(tracked[k]) / n;
      }
      traj_.alpha.push_back(std::move(row));
      ++next_;
    }
  }

  Trajectory take() { return std::move(traj_); }

 private:
  Trajectory traj_;
  std::vector<std::int64_t> steps_;
  std::size_t next_ = 0;
};

void check_order(const std::vector<std::int32_t>& order, std::int64_t n) {
  if (static_cast<std::int64_t>(order.size()) != n) {
    throw std::invalid_argument("vertex order length does not match n");
  }
}

void check_graph_spec(const GraphInstance& graph, const ModelSpec& spec) {
  spec.validate();
  if (graph.n != spec.n || graph.c != spec.c) {
    throw std::invalid_argument("graph does not match ModelSpec (n, c)");
  }
}

// Shared state-update logic for one explored vertex, given which previously
// active vertices it connects to. `active_neighbors` lists their indices;
// label array and tracked counts are updated in place.
struct ThresholdState {
  int K;
  std::vector<int>& labels;               // class 0..K-1, kBlockedLabel, kUnselected
  std::vector<std::int64_t>& class_count;  // size K

  void step(std::int32_t v, const std::vector<std::int32_t>& active_neighbors) {
    const int r = static_cast<int>(active_neighbors.size());
    bool ok = r < K;
    if (ok) {
      for (std::int32_t u : active_neighbors) {
        if (labels[static_cast<std::size_t>(u)] == K - 1) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      for (std::int32_t u : active_neighbors) {
        int& cls = labels[static_cast<std::size_t>(u)];
        --class_count[static_cast<std::size_t>(cls)];
        ++cls;
        ++class_count[static_cast<std::size_t>(cls)];
      }
      labels[static_cast<std::size_t>(v)] = r;
      ++class_count[static_cast<std::size_t>(r)];
    } else {
      labels[static_cast<std::size_t>(v)] = kBlockedLabel;
    }
  }
};

}  // namespace

ProcessResult run_direct(const GraphInstance& graph,
                         const std::vector<std::int32_t>& order,
                         const ModelSpec& spec, int grid_points) {
  check_graph_spec(graph, spec);
  check_order(order, graph.n);
  const std::int64_t n = graph.n;
  const int K = spec.K;
  TrajectoryRecorder recorder(spec, grid_points);
  std::vector<int> labels(static_cast<std::size_t>(n), kUnselected);
  std::vector<std::int64_t> tracked(static_cast<std::size_t>(K), 0);
  std::vector<std::int32_t> active_neighbors;

  recorder.record(0, tracked);
  for (std::int64_t t = 0; t < n; ++t) {
    const std::int32_t v = order[static_cast<std::size_t>(t)];
    const auto& nbrs = graph.adjacency[static_cast<std::size_t>(v)];
    switch (spec.kind) {
      case ModelKind::Threshold: {
        active_neighbors.clear();
        for (std::int32_t u : nbrs) {
          if (labels[static_cast<std::size_t>(u)] >= 0) active_neighbors.push_back(u);
        }
        ThresholdState{K, labels, tracked}.step(v, active_neighbors);
        break;
      }
      case ModelKind::Tetris: {
        int m = 0;  // unexplored and frozen neighbors count as height 0
        for (std::int32_t u : nbrs) {
          const int h = labels[static_cast<std::size_t>(u)];
          if (h > m) m = h;
        }
        const int h = m < K ? m + 1 : 0;
        labels[static_cast<std::size_t>(v)] = h;
        if (h >= 1) ++tracked[static_cast<std::size_t>(h - 1)];
        break;
      }
      case ModelKind::Sfap: {
        std::uint64_t used = 0;
        for (std::int32_t u : nbrs) {
          const int f = labels[static_cast<std::size_t>(u)];
          if (f >= 1) used |= std::uint64_t{1} << (f - 1);
        }
        int f = 0;
        for (int k = 1; k <= K; ++k) {
          if (!(used & (std::uint64_t{1} << (k - 1)))) {
            f = k;
            break;
          }
        }
        labels[static_cast<std::size_t>(v)] = f;
        if (f >= 1) ++tracked[static_cast<std::size_t>(f - 1)];
        break;
      }
    }
    recorder.record(t + 1, tracked);
  }
  // Tetris/Sfap store the unselected sentinel nowhere at this point;
  // Threshold labels are class or blocked.
  return ProcessResult{std::move(labels), recorder.take()};
}

Trajectory run_explore_counts(const ModelSpec& spec, std::uint64_t base_seed,
                              std::uint32_t replication, int grid_points) {
  spec.validate();
  const std::int64_t n = spec.n;
  const int K = spec.K;
  const double p = spec.edge_prob();
  TrajectoryRecorder recorder(spec, grid_points);

  if (spec.kind == ModelKind::Threshold) {
    std::vector<std::int64_t> active(static_cast<std::size_t>(K), 0);
    std::vector<std::int64_t> xi(static_cast<std::size_t>(K), 0);
    recorder.record(0, active);
    for (std::int64_t t = 0; t < n; ++t) {
      std::int64_t sum = 0;
      for (int k = 0; k < K; ++k) {
        const double u = uniform01(StreamKey::binomial_draw(
            base_seed, replication, static_cast<std::uint32_t>(t),
            static_cast<std::uint32_t>(k)));
        xi[static_cast<std::size_t>(k)] =
            binomial_inverse(u, active[static_cast<std::size_t>(k)], p);
        sum += xi[static_cast<std::size_t>(k)];
      }
      if (sum <= K - 1 && xi[static_cast<std::size_t>(K - 1)] == 0) {
        for (int k = K - 2; k >= 0; --k) {
          active[static_cast<std::size_t>(k)] -= xi[static_cast<std::size_t>(k)];
          active[static_cast<std::size_t>(k + 1)] += xi[static_cast<std::size_t>(k)];
        }
        ++active[static_cast<std::size_t>(sum)];
      }
      // else: blocked, counts unchanged
      recorder.record(t + 1, active);
    }
    return recorder.take();
  }

  // Tetris / Sfap: classes 0..K with class 0 frozen; tracked = 1..K.
  std::vector<std::int64_t> classes(static_cast<std::size_t>(K + 1), 0);
  std::vector<std::int64_t> xi(static_cast<std::size_t>(K + 1), 0);
  std::vector<std::int64_t> tracked(static_cast<std::size_t>(K), 0);
  auto sync_tracked = [&] {
    for (int k = 1; k <= K; ++k) {
      tracked[static_cast<std::size_t>(k - 1)] = classes[static_cast<std::size_t>(k)];
    }
  };
  recorder.record(0, tracked);
  for (std::int64_t t = 0; t < n; ++t) {
    for (int k = 0; k <= K; ++k) {
      const double u = uniform01(StreamKey::binomial_draw(
          base_seed, replication, static_cast<std::uint32_t>(t),
          static_cast<std::uint32_t>(k)));
      xi[static_cast<std::size_t>(k)] =
          binomial_inverse(u, classes[static_cast<std::size_t>(k)], p);
    }
    if (spec.kind == ModelKind::Tetris) {
      int m = 0;
      for (int k = 1; k <= K; ++k) {
        if (xi[static_cast<std::size_t>(k)] > 0) m = k;
      }
      ++classes[static_cast<std::size_t>(m <= K - 1 ? m + 1 : 0)];
    } else {
      int f = 0;
      for (int k = 1; k <= K; ++k) {
        if (xi[static_cast<std::size_t>(k)] == 0) {
          f = k;
          break;
        }
      }
      ++classes[static_cast<std::size_t>(f)];
    }
    sync_tracked();
    recorder.record(t + 1, tracked);
  }
  return recorder.take();
}

ProcessResult run_explore_coupled(const GraphInstance& graph,
                                  const std::vector<std::int32_t>& order,
                                  const ModelSpec& spec, int grid_points,
                                  const CoupledOptions& options) {
  check_graph_spec(graph, spec);
  check_order(order, graph.n);
  if (!graph.exhaustive) {
    throw std::invalid_argument(
        "run_explore_coupled: graph was not sampled exhaustively, per-pair "
        "edge keys are not meaningful");
  }
  const std::int64_t n = graph.n;
  const int K = spec.K;
  const double p = graph.edge_prob();
  const std::uint64_t seed =
      options.corrupt_edge_keys ? graph.seed.base_seed ^ 1 : graph.seed.base_seed;
  TrajectoryRecorder recorder(spec, grid_points);
  std::vector<int> labels(static_cast<std::size_t>(n), kUnselected);
  std::vector<std::int64_t> tracked(static_cast<std::size_t>(K), 0);
  std::vector<std::int32_t> selected;
  selected.reserve(static_cast<std::size_t>(n));
  std::vector<std::int32_t> active_neighbors;

  auto consult = [&](std::int32_t v, std::int32_t u) {
    const bool edge = bernoulli(
        StreamKey::edge_pair(seed, graph.seed.replication,
                             static_cast<std::uint32_t>(v),
                             static_cast<std::uint32_t>(u)),
        p);
    if (edge != graph.has_edge(v, u)) {
      throw coupling_error(
          "run_explore_coupled: consulted edge randomness disagrees with the "
          "supplied graph at vertex " + std::to_string(v),
          v);
    }
    return edge;
  };

  recorder.record(0, tracked);
  for (std::int64_t t = 0; t < n; ++t) {
    const std::int32_t v = order[static_cast<std::size_t>(t)];
    switch (spec.kind) {
      case ModelKind::Threshold: {
        // Pairs with blocked vertices complete the graph but never touch state.
        active_neighbors.clear();
        for (std::int32_t u : selected) {
          if (consult(v, u) && labels[static_cast<std::size_t>(u)] >= 0) {
            active_neighbors.push_back(u);
          }
        }
        ThresholdState{K, labels, tracked}.step(v, active_neighbors);
        break;
      }
      case ModelKind::Tetris: {
        int m = 0;
        for (std::int32_t u : selected) {
          if (consult(v, u)) {
            const int h = labels[static_cast<std::size_t>(u)];
            if (h > m) m = h;
          }
        }
        const int h = m < K ? m + 1 : 0;
        labels[static_cast<std::size_t>(v)] = h;
        if (h >= 1) ++tracked[static_cast<std::size_t>(h - 1)];
        break;
      }
      case ModelKind::Sfap: {
        std::uint64_t used = 0;
        for (std::int32_t u : selected) {
          if (consult(v, u)) {
            const int f = labels[static_cast<std::size_t>(u)];
            if (f >= 1) used |= std::uint64_t{1} << (f - 1);
          }
        }
        int f = 0;
        for (int k = 1; k <= K; ++k) {
          if (!(used & (std::uint64_t{1} << (k - 1)))) {
            f = k;
            break;
          }
        }
        labels[static_cast<std::size_t>(v)] = f;
        if (f >= 1) ++tracked[static_cast<std::size_t>(f - 1)];
        break;
      }
    }
    selected.push_back(v);
    recorder.record(t + 1, tracked);
  }
  return ProcessResult{std::move(labels), recorder.take()};
}

JammingSummary jamming_summary(const Trajectory& traj) {
  if (traj.grid.empty() || traj.grid.back() != 1.0 ||
      traj.alpha.size() != traj.grid.size()) {
    throw std::logic_error("jamming_summary: trajectory does not reach t = 1");
  }
  JammingSummary summary;
  summary.per_class_final = traj.alpha.back();
  for (double a : summary.per_class_final) summary.total_active += a;
  return summary;
}

bool check_threshold_maximal(const GraphInstance& graph,
                             const std::vector<int>& labels, int K) {
  for (std::int64_t v = 0; v < graph.n; ++v) {
    int active_nbrs = 0;
    bool saturated_nbr = false;
    for (std::int32_t u : graph.adjacency[static_cast<std::size_t>(v)]) {
      const int lu = labels[static_cast<std::size_t>(u)];
      if (lu >= 0) {
        ++active_nbrs;
        if (lu == K - 1) saturated_nbr = true;
      }
    }
    const int lv = labels[static_cast<std::size_t>(v)];
    if (lv >= 0) {
      // Active: class label must equal the active degree, which stays < K.
      if (lv != active_nbrs || active_nbrs >= K) return false;
    } else {
      // Blocked: activating it would violate the K-independence condition.
      if (active_nbrs < K && !saturated_nbr) return false;
    }
  }
  return true;
}

bool check_sfap_assignment(const GraphInstance& graph,
                           const std::vector<int>& labels, int K) {
  for (std::int64_t v = 0; v < graph.n; ++v) {
    const int fv = labels[static_cast<std::size_t>(v)];
    std::uint64_t nbr_freqs = 0;
    for (std::int32_t u : graph.adjacency[static_cast<std::size_t>(v)]) {
      const int fu = labels[static_cast<std::size_t>(u)];
      if (fu >= 1) {
        if (fv >= 1 && fu == fv) return false;  // conflict
        nbr_freqs |= std::uint64_t{1} << (fu - 1);
      }
    }
    if (fv == 0) {
      // Frozen: every frequency must appear among the neighbors.
      const std::uint64_t all = K >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << K) - 1;
      if ((nbr_freqs & all) != all) return false;
    }
  }
  return true;
}

bool check_tetris_replay(const GraphInstance& graph,
                         const std::vector<std::int32_t>& order,
                         const std::vector<int>& labels, int K) {
  std::vector<int> h(static_cast<std::size_t>(graph.n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(graph.n), false);
  for (std::int32_t v : order) {
    int m = 0;
    for (std::int32_t u : graph.adjacency[static_cast<std::size_t>(v)]) {
      if (h[static_cast<std::size_t>(u)] > m) m = h[static_cast<std::size_t>(u)];
    }
    if (m < K) {
      h[static_cast<std::size_t>(v)] = m + 1;
    } else if (m != K) {
      return false;  // a neighbor above K should be impossible
    }
    seen[static_cast<std::size_t>(v)] = true;
    if (h[static_cast<std::size_t>(v)] != labels[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  return true;
}

}  // namespace rsajam
