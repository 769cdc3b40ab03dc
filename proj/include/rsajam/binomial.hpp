#pragma once

#include <cstdint>
#include <vector>

#include "rsajam/models.hpp"

namespace rsajam {

struct BinomialFamily {
  std::vector<std::int64_t> sizes;
  double p = 0.0;
};

// P(Bin(n, p) = k); 0 outside [0, n].
double binom_pmf(std::int64_t n, double p, std::int64_t k);

// P(Bin(n, p) <= k); 0 for k < 0, 1 for k >= n.
double binom_cdf(std::int64_t n, double p, std::int64_t k);

// Quantile transform: smallest k with u < P(Bin(n, p) <= k).
std::int64_t binomial_inverse(double u, std::int64_t n, double p);

// E[X_i | X_1 + ... + X_r <= R] for independent X_j ~ Bin(n_j, p).
double conditional_binomial_mean(const BinomialFamily& fam, std::int64_t R,
                                 std::size_t i);

// Exact one-step drift E[zeta_k | counts] of the Threshold counts chain,
// one entry per class 0..K-1. `active` holds the class counts, p the edge
// probability.
std::vector<double> finite_n_drift_threshold(
    const std::vector<std::int64_t>& active, double p);

}  // namespace rsajam
