#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rsajam/errors.hpp"
#include "rsajam/processes.hpp"
#include "rsajam/validation.hpp"

using namespace rsajam;

namespace {

// Hand-built graph for fixed-topology cases.
GraphInstance make_graph(std::int64_t n, double c,
                         const std::vector<std::pair<int, int>>& edges) {
  GraphInstance g;
  g.n = n;
  g.c = c;
  g.adjacency.assign(static_cast<std::size_t>(n), {});
  for (auto [i, j] : edges) {
    g.adjacency[static_cast<std::size_t>(i)].push_back(j);
    g.adjacency[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

}  // namespace

TEST_CASE("empty graph: every vertex lands in the first class") {
  const std::int64_t n = 12;
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
    const ModelSpec spec{kind, 3, 0.0, n};
    const auto graph = sample_er_graph(n, 0.0, 1, 0);
    const auto order = sample_permutation(n, 1, 0);
    const auto res = run_direct(graph, order, spec);
    for (int label : res.labels) {
      CHECK(label == (kind == ModelKind::Threshold ? 0 : 1));
    }
    const auto summary = jamming_summary(res.trajectory);
    CHECK(summary.total_active == 1.0);
  }
}

TEST_CASE("threshold K = 1 on a path explored middle-first") {
  const auto g = make_graph(3, 1.0, {{0, 1}, {1, 2}});
  const ModelSpec spec{ModelKind::Threshold, 1, 1.0, 3};
  const auto res = run_direct(g, {1, 0, 2}, spec);
  CHECK(res.labels == std::vector<int>{kBlockedLabel, 0, kBlockedLabel});
  CHECK(jamming_summary(res.trajectory).total_active ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("sfap K = 2 on a triangle") {
  const auto g = make_graph(3, 2.0, {{0, 1}, {1, 2}, {0, 2}});
  const ModelSpec spec{ModelKind::Sfap, 2, 2.0, 3};
  const auto res = run_direct(g, {0, 1, 2}, spec);
  CHECK(res.labels == std::vector<int>{1, 2, 0});
}

TEST_CASE("tetris heights on a path") {
  // explored 0,1,2 along a path: heights 1, 2, frozen at K = 2, then 3 at K = 3
  const auto g = make_graph(3, 1.0, {{0, 1}, {1, 2}});
  const auto res2 = run_direct(g, {0, 1, 2}, ModelSpec{ModelKind::Tetris, 2, 1.0, 3});
  CHECK(res2.labels == std::vector<int>{1, 2, 0});
  const auto res3 = run_direct(g, {0, 1, 2}, ModelSpec{ModelKind::Tetris, 3, 1.0, 3});
  CHECK(res3.labels == std::vector<int>{1, 2, 3});
}

TEST_CASE("size mismatch between graph and spec is rejected") {
  const auto g = sample_er_graph(5, 1.0, 1, 0);
  const auto order = sample_permutation(5, 1, 0);
  CHECK_THROWS_AS(run_direct(g, order, ModelSpec{ModelKind::Tetris, 2, 1.0, 6}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_direct(g, order, ModelSpec{ModelKind::Tetris, 2, 2.0, 5}),
                  std::invalid_argument);
}

TEST_CASE("counts chain: n = 1 gives a single active vertex") {
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
    const auto traj = run_explore_counts(ModelSpec{kind, 2, 3.0, 1}, 0, 0, 2);
    const auto summary = jamming_summary(traj);
    CHECK(summary.total_active == 1.0);
    CHECK(summary.per_class_final[0] == 1.0);
  }
}

TEST_CASE("counts chain trajectories: conservation and monotonicity") {
  const std::int64_t n = 400;
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
    const ModelSpec spec{kind, 3, 4.0, n};
    // grid with one point per step so every state is visible
    const auto traj = run_explore_counts(spec, 21, 0, static_cast<int>(n) + 1);
    REQUIRE(traj.alpha.size() == static_cast<std::size_t>(n) + 1);
    double prev_total = 0.0;
    std::vector<double> prev(traj.alpha.front());
    for (std::size_t j = 0; j < traj.alpha.size(); ++j) {
      double total = 0.0;
      for (double a : traj.alpha[j]) {
        CHECK(a >= 0.0);
        total += a;
      }
      // classes fill no faster than vertices are explored
      CHECK(total <= traj.grid[j] + 1e-12);
      CHECK(total >= prev_total - 1e-12);  // active fraction never shrinks
      if (kind != ModelKind::Threshold) {
        for (std::size_t k = 0; k < prev.size(); ++k) {
          CHECK(traj.alpha[j][k] >= prev[k] - 1e-12);
        }
      }
      prev_total = total;
      prev = traj.alpha[j];
    }
  }
}

TEST_CASE("counts chain is deterministic in its seeds") {
  const ModelSpec spec{ModelKind::Tetris, 2, 3.0, 500};
  const auto a = run_explore_counts(spec, 9, 4);
  const auto b = run_explore_counts(spec, 9, 4);
  CHECK(a.alpha == b.alpha);
  const auto c = run_explore_counts(spec, 9, 5);
  CHECK(a.alpha != c.alpha);
}

TEST_CASE("threshold K = 1, c = 1 counts chain approaches log 2") {
  const auto traj = run_explore_counts(ModelSpec{ModelKind::Threshold, 1, 1.0, 100000}, 3, 0);
  CHECK(std::fabs(jamming_summary(traj).total_active - std::log(2.0)) < 0.01);
}

TEST_CASE("tetris screening regime: heights invert beyond the crossing") {
  const auto traj = run_explore_counts(ModelSpec{ModelKind::Tetris, 2, 10.0, 100000}, 3, 0);
  const auto summary = jamming_summary(traj);
  CHECK(summary.per_class_final[1] > summary.per_class_final[0]);
}

TEST_CASE("sfap densities decrease with frequency at large n") {
  const auto traj = run_explore_counts(ModelSpec{ModelKind::Sfap, 4, 5.0, 100000}, 3, 0);
  const auto summary = jamming_summary(traj);
  for (int k = 1; k < 4; ++k) {
    CHECK(summary.per_class_final[static_cast<std::size_t>(k)] <=
          summary.per_class_final[static_cast<std::size_t>(k - 1)]);
  }
}

TEST_CASE("jamming_summary rejects incomplete trajectories") {
  Trajectory traj;
  traj.spec = ModelSpec{ModelKind::Tetris, 2, 1.0, 10};
  traj.grid = {0.0, 0.5};
  traj.alpha = {{0.0, 0.0}, {0.3, 0.1}};
  CHECK_THROWS_AS(jamming_summary(traj), std::logic_error);
}

TEST_CASE("coupled run equals the direct process, small sweep") {
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
    CouplingSweepConfig config;
    config.trials = 100;
    config.base_seed = 2024;
    config.max_n = 60;
    const auto report = coupling_sweep(kind, config);
    CHECK(report.failures == 0);
  }
}

TEST_CASE("corrupted edge keys are detected") {
  CouplingSweepConfig config;
  config.trials = 50;
  config.base_seed = 7;
  config.max_n = 60;
  config.corrupt_edge_keys = true;
  const auto report = coupling_sweep(ModelKind::Threshold, config);
  CHECK(report.failures > 0);
  CHECK(report.first_bad_vertex >= 0);
}

TEST_CASE("coupled run refuses mismatched seeds and skip-sampled graphs") {
  auto graph = sample_er_graph(50, 3.0, 5, 0);
  const auto order = sample_permutation(50, 5, 0);
  const ModelSpec spec{ModelKind::Sfap, 2, 3.0, 50};
  graph.seed.base_seed = 6;  // graph no longer matches its claimed keys
  CHECK_THROWS_AS(run_explore_coupled(graph, order, spec), coupling_error);
  auto skip = sample_er_graph(50, 3.0, 5, 0, /*exhaustive_cap=*/10);
  CHECK_THROWS_AS(run_explore_coupled(skip, order, spec), std::invalid_argument);
}

TEST_CASE("counts chain and direct process agree in distribution") {
  const std::int64_t n = 500;
  const int reps = 200;
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
    const ModelSpec spec{kind, 2, 2.0, n};
    double mean_counts = 0.0, m2_counts = 0.0;
    double mean_direct = 0.0, m2_direct = 0.0;
    for (int r = 0; r < reps; ++r) {
      const double x =
          jamming_summary(run_explore_counts(spec, 31, static_cast<std::uint32_t>(r), 2))
              .total_active;
      mean_counts += x;
      m2_counts += x * x;
      const auto graph = sample_er_graph(n, 2.0, 32, static_cast<std::uint32_t>(r));
      const auto order = sample_permutation(n, 32, static_cast<std::uint32_t>(r));
      const double y =
          jamming_summary(run_direct(graph, order, spec, 2).trajectory).total_active;
      mean_direct += y;
      m2_direct += y * y;
    }
    mean_counts /= reps;
    mean_direct /= reps;
    const double var_counts = (m2_counts / reps - mean_counts * mean_counts) * reps / (reps - 1);
    const double var_direct = (m2_direct / reps - mean_direct * mean_direct) * reps / (reps - 1);
    const double pooled_se = std::sqrt(var_counts / reps + var_direct / reps);
    CHECK(std::fabs(mean_counts - mean_direct) < 4 * pooled_se + 1e-9);
  }
}

TEST_CASE("structural checks hold on oracle runs and catch tampering") {
  for (std::uint32_t r = 0; r < 5; ++r) {
    const std::int64_t n = 300;
    const double c = 4.0;
    const int K = 3;
    const auto graph = sample_er_graph(n, c, 100 + r, r);
    const auto order = sample_permutation(n, 100 + r, r);

    auto thr = run_direct(graph, order, ModelSpec{ModelKind::Threshold, K, c, n});
    CHECK(check_threshold_maximal(graph, thr.labels, K));
    auto sf = run_direct(graph, order, ModelSpec{ModelKind::Sfap, K, c, n});
    CHECK(check_sfap_assignment(graph, sf.labels, K));
    auto te = run_direct(graph, order, ModelSpec{ModelKind::Tetris, K, c, n});
    CHECK(check_tetris_replay(graph, order, te.labels, K));

    if (r == 0) {
      // negative controls: flip one label each
      auto bad = thr.labels;
      bad[static_cast<std::size_t>(order[0])] =
          bad[static_cast<std::size_t>(order[0])] == kBlockedLabel ? 0 : kBlockedLabel;
      CHECK_FALSE(check_threshold_maximal(graph, bad, K));
      auto bad_te = te.labels;
      bad_te[static_cast<std::size_t>(order[0])] ^= 1;
      CHECK_FALSE(check_tetris_replay(graph, order, bad_te, K));
    }
  }
}
