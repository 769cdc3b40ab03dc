#include "rsajam/binomial.hpp"

#include <cmath>
#include <stdexcept>

namespace rsajam {

namespace {

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binomial: p must lie in [0, 1]");
  }
}

// (1-p)^n without overflow for large n.
double pow_q(std::int64_t n, double p) {
  if (n == 0) return 1.0;
  if (p == 1.0) return 0.0;
  return std::exp(static_cast<double>(n) * std::log1p(-p));
}

}  // namespace

double binom_pmf(std::int64_t n, double p, std::int64_t k) {
  check_p(p);
  if (n < 0) throw std::invalid_argument("binom_pmf: n must be >= 0");
  if (k < 0 || k > n) return 0.0;
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  // Multiplicative recurrence from the k = 0 term; k is small in every use.
  double term = pow_q(n, p);
  const double ratio = p / (1.0 - p);
  for (std::int64_t j = 0; j < k; ++j) {
    term *= static_cast<double>(n - j) / static_cast<double>(j + 1) * ratio;
  }
  return term;
}

double binom_cdf(std::int64_t n, double p, std::int64_t k) {
  check_p(p);
  if (n < 0) throw std::invalid_argument("binom_cdf: n must be >= 0");
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;  // k < n here
  double term = pow_q(n, p);
  double sum = term;
  const double ratio = p / (1.0 - p);
  for (std::int64_t j = 0; j < k; ++j) {
    term *= static_cast<double>(n - j) / static_cast<double>(j + 1) * ratio;
    sum += term;
  }
  return sum < 1.0 ? sum : 1.0;
}

std::int64_t binomial_inverse(double u, std::int64_t n, double p) {
  check_p(p);
  if (n < 0) throw std::invalid_argument("binomial_inverse: n must be >= 0");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  double term = pow_q(n, p);
  double cdf = term;
  const double ratio = p / (1.0 - p);
  std::int64_t k = 0;
  while (u >= cdf && k < n) {
    term *= static_cast<double>(n - k) / static_cast<double>(k + 1) * ratio;
    ++k;
    cdf += term;
  }
  return k;
}

double conditional_binomial_mean(const BinomialFamily& fam, std::int64_t R,
                                 std::size_t i) {
  check_p(fam.p);
  if (i >= fam.sizes.size()) {
    throw std::invalid_argument("conditional_binomial_mean: index out of range");
  }
  std::int64_t total = 0;
  for (auto s : fam.sizes) {
    if (s < 0) throw std::invalid_argument("conditional_binomial_mean: negative size");
    total += s;
  }
  if (R < 1 || R > total) {
    throw std::invalid_argument("conditional_binomial_mean: R must lie in [1, sum n_j]");
  }
  const double denom = binom_cdf(total, fam.p, R);
  if (denom == 0.0) {
    throw std::domain_error("conditional_binomial_mean: conditioning event has probability 0");
  }
  return static_cast<double>(fam.sizes[i]) * fam.p *
         binom_cdf(total - 1, fam.p, R - 1) / denom;
}

std::vector<double> finite_n_drift_threshold(
    const std::vector<std::int64_t>& active, double p) {
  check_p(p);
  const int K = static_cast<int>(active.size());
  if (K < 1) throw std::invalid_argument("finite_n_drift_threshold: K must be >= 1");
  std::int64_t upto_km2 = 0;  // A_0 + ... + A_{K-2}
  for (int k = 0; k + 1 < K; ++k) upto_km2 += active[k];
  const double survive = pow_q(active[K - 1], p);  // (1-p)^{A_{K-1}}
  // p (1-p)^{A_{K-1}} B(A_{<=K-2}-1, p; K-2); zero for K = 1 since B(., .; -1) = 0.
  const double common =
      K >= 2 ? p * survive * binom_cdf(upto_km2 > 0 ? upto_km2 - 1 : 0, p, K - 2)
             : 0.0;
  std::vector<double> drift(K);
  for (int k = 0; k < K; ++k) {
    const std::int64_t prev = k == 0 ? 0 : active[k - 1];
    // The outflow term -A_k applies to classes that can lose members to
    // promotion; class K-1 cannot (the acceptance event forces zero
    // connections to it), which is why its drift keeps only the inflow.
    const std::int64_t out = k + 1 < K ? active[k] : 0;
    drift[k] = static_cast<double>(prev - out) * common +
               binom_pmf(upto_km2, p, k) * survive;
  }
  return drift;
}

}  // namespace rsajam
