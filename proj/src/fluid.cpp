#include "rsajam/fluid.hpp"

#include <cmath>
#include <stdexcept>

#include "rsajam/errors.hpp"

namespace rsajam {

std::vector<double> drift_threshold(const std::vector<double>& alpha, double c) {
  const int K = static_cast<int>(alpha.size());
  double upto_km1 = 0.0;
  for (double a : alpha) upto_km1 += a;
  const double upto_km2 = upto_km1 - alpha[static_cast<std::size_t>(K - 1)];
  // S = sum_{r=0}^{K-2} (c alpha_{<=K-2})^r / r!; empty for K = 1.
  double S = 0.0;
  double term = 1.0;
  for (int r = 0; r <= K - 2; ++r) {
    S += term;
    term *= c * upto_km2 / static_cast<double>(r + 1);
  }
  const double E = std::exp(-c * upto_km1);
  std::vector<double> d(static_cast<std::size_t>(K));
  double pois = 1.0;  // (c alpha_{<=K-2})^k / k!
  d[0] = -c * alpha[0] * E * S + E;
  for (int k = 1; k < K; ++k) {
    pois *= c * upto_km2 / static_cast<double>(k);
    const double inflow =
        k < K - 1 ? alpha[static_cast<std::size_t>(k - 1)] - alpha[static_cast<std::size_t>(k)]
                  : alpha[static_cast<std::size_t>(K - 2)];
    d[static_cast<std::size_t>(k)] = c * inflow * E * S + E * pois;
  }
  return d;
}

std::vector<double> drift_tetris(const std::vector<double>& alpha, double c) {
  const int K = static_cast<int>(alpha.size());
  std::vector<double> d(static_cast<std::size_t>(K));
  // suffix(i) = alpha_{i+1} + ... + alpha_K in height terms.
  double suffix = 0.0;
  for (double a : alpha) suffix += a;
  d[0] = std::exp(-c * suffix);
  for (int i = 1; i < K; ++i) {
    suffix -= alpha[static_cast<std::size_t>(i - 1)];
    d[static_cast<std::size_t>(i)] =
        (1.0 - std::exp(-c * alpha[static_cast<std::size_t>(i - 1)])) *
        std::exp(-c * suffix);
  }
  return d;
}

std::vector<double> drift_sfap(const std::vector<double>& alpha, double c) {
  const int K = static_cast<int>(alpha.size());
  std::vector<double> d(static_cast<std::size_t>(K));
  double prod = 1.0;  // prod_{r<k} (1 - e^{-c alpha_r})
  for (int k = 0; k < K; ++k) {
    d[static_cast<std::size_t>(k)] =
        std::exp(-c * alpha[static_cast<std::size_t>(k)]) * prod;
    prod *= 1.0 - std::exp(-c * alpha[static_cast<std::size_t>(k)]);
  }
  return d;
}

std::vector<double> drift(ModelKind kind, const std::vector<double>& alpha,
                          double c) {
  switch (kind) {
    case ModelKind::Threshold: return drift_threshold(alpha, c);
    case ModelKind::Tetris: return drift_tetris(alpha, c);
    case ModelKind::Sfap: return drift_sfap(alpha, c);
  }
  throw std::logic_error("unknown ModelKind");
}

FluidSolution integrate(ModelKind kind, int K, double c, double step,
                        int grid_points) {
  if (K < 1) throw std::invalid_argument("integrate: K must be >= 1");
  if (!(c >= 0.0)) throw std::invalid_argument("integrate: c must be >= 0");
  if (!(step > 0.0 && step <= kMaxFluidStep)) {
    throw std::invalid_argument("integrate: step must lie in (0, 0.01]");
  }
  FluidSolution sol;
  sol.kind = kind;
  sol.K = K;
  sol.c = c;
  sol.grid = make_time_grid(grid_points);
  const int intervals = grid_points - 1;
  const int substeps = static_cast<int>(
      std::ceil(1.0 / (step * static_cast<double>(intervals)) - 1e-9));
  const double h = 1.0 / (static_cast<double>(intervals) * substeps);
  sol.step = h;
  sol.alpha.reserve(sol.grid.size());

  std::vector<double> a(static_cast<std::size_t>(K), 0.0);
  auto record = [&] {
    std::vector<double> row(a);
    for (double& x : row) {
      if (x < 0.0) x = 0.0;  // shave integrator round-off below zero
    }
    sol.alpha.push_back(std::move(row));
  };
  record();
  std::vector<double> tmp(static_cast<std::size_t>(K));
  for (int g = 0; g < intervals; ++g) {
    for (int s = 0; s < substeps; ++s) {
      const auto k1 = drift(kind, a, c);
      for (int i = 0; i < K; ++i) tmp[i] = a[i] + 0.5 * h * k1[i];
      const auto k2 = drift(kind, tmp, c);
      for (int i = 0; i < K; ++i) tmp[i] = a[i] + 0.5 * h * k2[i];
      const auto k3 = drift(kind, tmp, c);
      for (int i = 0; i < K; ++i) tmp[i] = a[i] + h * k3[i];
      const auto k4 = drift(kind, tmp, c);
      for (int i = 0; i < K; ++i) {
        a[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      }
    }
    record();
  }
  return sol;
}

std::vector<double> sfap_closed_form(double c, int K, double t) {
  if (K < 1) throw std::invalid_argument("sfap_closed_form: K must be >= 1");
  if (!(c >= 0.0)) throw std::invalid_argument("sfap_closed_form: c must be >= 0");
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("sfap_closed_form: t must lie in [0, 1]");
  }
  std::vector<double> a(static_cast<std::size_t>(K), 0.0);
  if (c == 0.0) {
    a[0] = t;
    return a;
  }
  a[0] = std::log1p(c * t) / c;
  for (int i = 1; i < K; ++i) {
    const double x = c * a[static_cast<std::size_t>(i - 1)];
    a[static_cast<std::size_t>(i)] = std::log(std::exp(x) - x) / c;
  }
  return a;
}

double threshold_k1_jamming(double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("threshold_k1_jamming: c must be >= 0");
  if (c == 0.0) return 1.0;
  return std::log1p(c) / c;
}

double jamming_constant(ModelKind kind, int K, double c, double step) {
  const FluidSolution sol = integrate(kind, K, c, step);
  double total = 0.0;
  for (double a : sol.alpha.back()) total += a;
  return total;
}

double tetris_crossing(int K, int k_low, int k_high, double c_lo, double c_hi,
                       double tol, double step) {
  if (K < 1 || k_low < 1 || k_low > K || k_high < 1 || k_high > K) {
    throw std::invalid_argument("tetris_crossing: classes must lie in 1..K");
  }
  if (k_low == k_high) {
    throw std::invalid_argument("tetris_crossing: classes must differ");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tetris_crossing: tol must be > 0");
  auto g = [&](double c) {
    const auto final = integrate(ModelKind::Tetris, K, c, step, 2).alpha.back();
    return final[static_cast<std::size_t>(k_low - 1)] -
           final[static_cast<std::size_t>(k_high - 1)];
  };
  double lo = c_lo, hi = c_hi;
  if (!(lo <= hi)) throw bracket_error("tetris_crossing: empty bracket");
  double g_lo = g(lo);
  double g_hi = g(hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if ((g_lo > 0.0) == (g_hi > 0.0)) {
    throw bracket_error("tetris_crossing: no sign change on bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace rsajam
