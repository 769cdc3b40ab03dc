#pragma once

#include <vector>

#include "rsajam/models.hpp"

namespace rsajam {

struct FluidSolution {
  ModelKind kind = ModelKind::Threshold;
  int K = 1;
  double c = 0.0;
  std::vector<double> grid;                // times, last entry 1
  std::vector<std::vector<double>> alpha;  // grid.size() rows of K entries
  double step = 0.0;                       // effective integrator step
};

// Limiting one-step drifts; alpha holds the K tracked class fractions
// (Threshold classes 0..K-1, Tetris/Sfap classes 1..K).
std::vector<double> drift_threshold(const std::vector<double>& alpha, double c);
std::vector<double> drift_tetris(const std::vector<double>& alpha, double c);
std::vector<double> drift_sfap(const std::vector<double>& alpha, double c);
std::vector<double> drift(ModelKind kind, const std::vector<double>& alpha,
                          double c);

inline constexpr double kDefaultFluidStep = 5e-5;
inline constexpr double kMaxFluidStep = 0.01;

// Classical RK4 with fixed step on [0, 1] from alpha(0) = 0; the step is
// shrunk if needed so that every grid time lands on an integrator step.
FluidSolution integrate(ModelKind kind, int K, double c,
                        double step = kDefaultFluidStep, int grid_points = 101);

// Exact SFAP trajectory at time t: alpha_1 = log(1+ct)/c and the recursion
// alpha_i = log(exp(c alpha_{i-1}) - c alpha_{i-1})/c; the c -> 0 limit is
// (t, 0, ..., 0).
std::vector<double> sfap_closed_form(double c, int K, double t);

// log(1+c)/c, continued to 1 at c = 0.
double threshold_k1_jamming(double c);

double jamming_constant(ModelKind kind, int K, double c,
                        double step = kDefaultFluidStep);

// Bisection for the mean degree at which the final Tetris densities of two
// heights cross. Classes are 1-based heights. Throws bracket_error when the
// bracket shows no sign change.
double tetris_crossing(int K, int k_low, int k_high, double c_lo, double c_hi,
                       double tol = 1e-4, double step = 1e-4);

}  // namespace rsajam
