// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the binary exits nonzero if any fail.

#include <cmath>
#include <cstdio>
#include <vector>

#include "rsajam/binomial.hpp"
#include "rsajam/fluid.hpp"
#include "rsajam/graph.hpp"
#include "rsajam/montecarlo.hpp"
#include "rsajam/processes.hpp"
#include "rsajam/rng.hpp"
#include "rsajam/validation.hpp"

using namespace rsajam;

namespace {

int failures = 0;

void report(int num, bool ok, const char* what) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", num, what);
  if (!ok) ++failures;
}

std::vector<double> random_alpha(int K, std::uint32_t idx) {
  std::vector<double> a(static_cast<std::size_t>(K));
  double sum = 0.0;
  for (int k = 0; k < K; ++k) {
    a[static_cast<std::size_t>(k)] = uniform01(StreamKey{
        991, idx, StreamPurpose::Permutation, static_cast<std::uint32_t>(k), 7});
    sum += a[static_cast<std::size_t>(k)];
  }
  const double scale =
      uniform01(StreamKey{991, idx, StreamPurpose::Permutation, 999, 7});
  if (sum > 0) {
    for (double& x : a) x *= scale / sum;
  }
  return a;
}

double threshold_drift_sum_identity(const std::vector<double>& a, double c) {
  const int K = static_cast<int>(a.size());
  double upto_km1 = 0.0;
  for (double x : a) upto_km1 += x;
  const double upto_km2 = upto_km1 - a[static_cast<std::size_t>(K - 1)];
  double sum = 0.0, term = 1.0;
  for (int r = 0; r < K; ++r) {
    sum += term;
    term *= c * upto_km2 / static_cast<double>(r + 1);
  }
  return std::exp(-c * upto_km1) * sum;
}

void criterion1() {
  bool ok = true;
  for (double c : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double numeric = jamming_constant(ModelKind::Threshold, 1, c);
    ok = ok && std::fabs(numeric - threshold_k1_jamming(c)) < 1e-6;
  }
  report(1, ok, "K = 1 jamming constant matches log(1+c)/c to 1e-6");
}

void criterion2() {
  bool ok = true;
  for (double c : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    for (int K : {1, 3, 6}) {
      const auto sol = integrate(ModelKind::Sfap, K, c);
      for (std::size_t j = 0; j < sol.grid.size() && ok; ++j) {
        const auto exact = sfap_closed_form(c, K, sol.grid[j]);
        for (int k = 0; k < K; ++k) {
          const std::size_t kk = static_cast<std::size_t>(k);
          if (std::fabs(sol.alpha[j][kk] - exact[kk]) >= 1e-8) ok = false;
        }
      }
    }
  }
  report(2, ok, "integrated frequency densities match the closed form to 1e-8");
}

void criterion3() {
  bool ok = false;
  double c_star = 0.0;
  try {
    c_star = tetris_crossing(2, 1, 2, 1.0, 10.0, 1e-4);
    ok = c_star > 4.45 && c_star < 4.49;
  } catch (...) {
  }
  std::printf("[%s] criterion 3: height-density crossing at c* = %.4f in (4.45, 4.49)\n",
              ok ? "PASS" : "FAIL", c_star);
  if (!ok) ++failures;
}

void criterion4() {
  bool ok = true;
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
    for (int K : {1, 2, 3}) {
      for (double c : {1.0, 5.0}) {
        const auto fl = integrate(kind, K, c, 1e-3);
        const auto ens = run_ensemble(ModelSpec{kind, K, c, 100000}, 10, 11);
        if (deviation_from_fluid(ens, fl) >= 0.01) ok = false;
      }
    }
  }
  report(4, ok, "ensemble means at n = 1e5 track the fluid limit within 0.01");
}

void criterion5() {
  bool ok = true;
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
    CouplingSweepConfig config;
    config.trials = 1000;
    config.base_seed = 31337;
    const auto rep = coupling_sweep(kind, config);
    if (rep.failures != 0) ok = false;
  }
  report(5, ok, "coupled exploration equals the direct process on 3000 random instances");
}

void criterion6() {
  const auto rep = cond_moment_enumeration_check(12, 3, {0.1, 0.5, 0.9});
  const bool ok =
      rep.max_mean_error <= 1e-10 && rep.inequality_violations == 0 && rep.cases_checked > 0;
  report(6, ok, "conditional binomial identities hold over exhaustive enumeration");
}

void criterion7() {
  bool ok = true;
  for (int K = 1; K <= 5 && ok; ++K) {
    const std::vector<double> zero(static_cast<std::size_t>(K), 0.0);
    for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris, ModelKind::Sfap}) {
      const auto d0 = drift(kind, zero, 4.0);
      if (std::fabs(d0[0] - 1.0) > 1e-12) ok = false;
      for (int k = 1; k < K; ++k) {
        if (d0[static_cast<std::size_t>(k)] != 0.0) ok = false;
      }
    }
    for (std::uint32_t i = 0; i < 1000 && ok; ++i) {
      const auto a = random_alpha(K, i + 10000 * static_cast<std::uint32_t>(K));
      const double c = 10.0 * uniform01(StreamKey{
          314, i, StreamPurpose::Permutation, static_cast<std::uint32_t>(K), 8});
      const auto d = drift_threshold(a, c);
      double s = 0.0;
      for (double x : d) s += x;
      if (std::fabs(s - threshold_drift_sum_identity(a, c)) > 1e-12) ok = false;
    }
  }
  report(7, ok, "drift identities: zero-state unit inflow and telescoping sum to 1e-12");
}

void criterion8() {
  bool ok = true;
  for (std::uint32_t r = 0; r < 200 && ok; ++r) {
    const auto u = [&](std::uint32_t slot) {
      return uniform01(StreamKey{777, r, StreamPurpose::Permutation, slot, 9});
    };
    const std::int64_t n = 2 + static_cast<std::int64_t>(u(0) * 499.0);
    const double c = u(1) * 8.0;
    const int K = 1 + static_cast<int>(u(2) * 4.0) % 4;
    const auto graph = sample_er_graph(n, c, 500, r);
    const auto order = sample_permutation(n, 500, r);
    const auto thr = run_direct(graph, order, ModelSpec{ModelKind::Threshold, K, c, n});
    if (!check_threshold_maximal(graph, thr.labels, K)) ok = false;
    const auto sf = run_direct(graph, order, ModelSpec{ModelKind::Sfap, K, c, n});
    if (!check_sfap_assignment(graph, sf.labels, K)) ok = false;
    const auto te = run_direct(graph, order, ModelSpec{ModelKind::Tetris, K, c, n});
    if (!check_tetris_replay(graph, order, te.labels, K)) ok = false;
  }
  report(8, ok, "structural invariants hold on 600 direct runs");
}

void criterion9() {
  bool ok = true;
  for (ModelKind kind : {ModelKind::Threshold, ModelKind::Tetris}) {
    for (double c = 1.0; c <= 10.0 + 1e-9; c += 1.0) {
      double prev = 0.0;
      for (int K = 1; K <= 5; ++K) {
        const double j = jamming_constant(kind, K, c, 1e-3);
        if (j < prev - 1e-9) ok = false;
        prev = j;
      }
    }
  }
  for (double c : {0.5, 2.0, 5.0, 10.0, 20.0}) {
    const auto final_alpha = integrate(ModelKind::Sfap, 5, c, 1e-3, 2).alpha.back();
    for (int k = 1; k < 5; ++k) {
      if (final_alpha[static_cast<std::size_t>(k)] >
          final_alpha[static_cast<std::size_t>(k - 1)] + 1e-9) {
        ok = false;
      }
    }
  }
  report(9, ok, "jamming density grows with K; frequency densities are ordered");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
