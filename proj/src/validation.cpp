#include "rsajam/validation.hpp"

#include <cmath>
#include <stdexcept>

#include "rsajam/binomial.hpp"
#include "rsajam/errors.hpp"
#include "rsajam/graph.hpp"
#include "rsajam/processes.hpp"

namespace rsajam {

namespace {

// Trial parameter draws; index_b = 1 keeps these keys clear of the
// Fisher-Yates positions used inside the trial itself.
double trial_uniform(std::uint64_t seed, int trial, std::uint32_t which) {
  return uniform01(StreamKey{seed, static_cast<std::uint32_t>(trial),
                             StreamPurpose::Permutation, which, 1});
}

}  // namespace

CouplingSweepReport coupling_sweep(ModelKind kind,
                                   const CouplingSweepConfig& config) {
  if (config.trials < 1) {
    throw std::invalid_argument("coupling_sweep: trials must be >= 1");
  }
  CouplingSweepReport report;
  report.kind = kind;
  report.trials = config.trials;
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::int64_t n =
        2 + static_cast<std::int64_t>(trial_uniform(config.base_seed, trial, 0) *
                                      static_cast<double>(config.max_n - 1));
    const double c = trial_uniform(config.base_seed, trial, 1) * config.max_c;
    const int K =
        1 + static_cast<int>(trial_uniform(config.base_seed, trial, 2) *
                             static_cast<double>(config.max_K));
    const ModelSpec spec{kind, K, c, n};
    const auto graph = sample_er_graph(n, c, config.base_seed,
                                       static_cast<std::uint32_t>(trial));
    const auto order = sample_permutation(n, config.base_seed,
                                          static_cast<std::uint32_t>(trial));
    const auto direct = run_direct(graph, order, spec);

    std::int64_t bad_vertex = -1;
    try {
      const auto coupled = run_explore_coupled(
          graph, order, spec, 101, CoupledOptions{config.corrupt_edge_keys});
      for (std::size_t v = 0; v < coupled.labels.size(); ++v) {
        if (coupled.labels[v] != direct.labels[v]) {
          bad_vertex = static_cast<std::int64_t>(v);
          break;
        }
      }
    } catch (const coupling_error& e) {
      bad_vertex = e.vertex;
    }
    if (bad_vertex >= 0) {
      ++report.failures;
      if (report.first_bad_trial < 0) {
        report.first_bad_trial = trial;
        report.first_bad_vertex = bad_vertex;
      }
    }
  }
  return report;
}

CondMomentReport cond_moment_enumeration_check(int max_total, int max_parts,
                                      const std::vector<double>& ps) {
  if (max_parts < 1 || max_parts > 3) {
    throw std::invalid_argument("cond_moment_enumeration_check: max_parts must be 1..3");
  }
  CondMomentReport report;

  auto run_case = [&](const std::vector<std::int64_t>& sizes, double p) {
    std::int64_t total = 0;
    for (auto s : sizes) total += s;
    if (total < 1) return;
    const std::size_t r = sizes.size();
    // Joint enumeration: accumulate, per total sum s, the probability mass,
    // E[X_i 1{sum=s}] and E[X_i(X_i-1) 1{sum=s}].
    std::vector<double> mass(static_cast<std::size_t>(total + 1), 0.0);
    std::vector<std::vector<double>> first(r, mass), second(r, mass);
    std::vector<std::int64_t> x(r, 0);
    while (true) {
      double prob = 1.0;
      std::int64_t s = 0;
      for (std::size_t i = 0; i < r; ++i) {
        prob *= binom_pmf(sizes[i], p, x[i]);
        s += x[i];
      }
      mass[static_cast<std::size_t>(s)] += prob;
      for (std::size_t i = 0; i < r; ++i) {
        first[i][static_cast<std::size_t>(s)] += static_cast<double>(x[i]) * prob;
        second[i][static_cast<std::size_t>(s)] +=
            static_cast<double>(x[i]) * static_cast<double>(x[i] - 1) * prob;
      }
      // odometer
      std::size_t pos = 0;
      while (pos < r && ++x[pos] > sizes[pos]) {
        x[pos] = 0;
        ++pos;
      }
      if (pos == r) break;
    }
    // Prefix sums give the conditioning on {sum <= R} for every R.
    for (std::int64_t s = 1; s <= total; ++s) {
      mass[static_cast<std::size_t>(s)] += mass[static_cast<std::size_t>(s - 1)];
      for (std::size_t i = 0; i < r; ++i) {
        first[i][static_cast<std::size_t>(s)] += first[i][static_cast<std::size_t>(s - 1)];
        second[i][static_cast<std::size_t>(s)] += second[i][static_cast<std::size_t>(s - 1)];
      }
    }
    for (std::int64_t R = 1; R <= total; ++R) {
      const double denom = mass[static_cast<std::size_t>(R)];
      if (denom <= 0.0) continue;
      for (std::size_t i = 0; i < r; ++i) {
        const double expected = first[i][static_cast<std::size_t>(R)] / denom;
        const double got = conditional_binomial_mean(BinomialFamily{sizes, p}, R, i);
        const double err = std::fabs(got - expected);
        if (err > report.max_mean_error) report.max_mean_error = err;
        // Second-moment bound on the same conditioning event.
        const double lhs = second[i][static_cast<std::size_t>(R)] / denom;
        const double ni = static_cast<double>(sizes[i]);
        const double rhs =
            ni * (ni - 1.0) * p * p / binom_cdf(total, p, R);
        if (lhs > rhs + 1e-12) ++report.inequality_violations;
        ++report.cases_checked;
      }
    }
  };

  for (int parts = 1; parts <= max_parts; ++parts) {
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(parts), 0);
    // Enumerate all vectors with entries >= 0 summing to <= max_total.
    while (true) {
      for (double p : ps) run_case(sizes, p);
      int pos = 0;
      while (pos < parts) {
        ++sizes[static_cast<std::size_t>(pos)];
        std::int64_t total = 0;
        for (auto s : sizes) total += s;
        if (total <= max_total) break;
        sizes[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == parts) break;
    }
  }
  return report;
}

}  // namespace rsajam
