#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rsajam/fluid.hpp"
#include "rsajam/models.hpp"
#include "rsajam/montecarlo.hpp"

namespace rsajam {

// CSV schemas; fixed column order, 9-significant-digit numbers, so output
// diffs cleanly across runs.
inline constexpr const char* kSimulateCsvHeader =
    "model,K,c,n,rep_count,t,class,alpha_mean,alpha_stderr";
inline constexpr const char* kFluidCsvHeader = "model,K,c,t,class,alpha";

std::string format_number(double x);

void write_simulate_csv(std::ostream& out, const EnsembleResult& ens,
                        bool header = true);
void write_fluid_csv(std::ostream& out, const FluidSolution& sol,
                     bool header = true);

// Per-vertex label dump: "vertex label" per line, 1-based vertices.
// Threshold labels are active_k / blocked; Tetris and Sfap labels 0..K.
void write_labels(std::ostream& out, const ModelSpec& spec,
                  const std::vector<int>& labels);

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

// Minimal polyline plot: axes, ticks, legend. Pure function of its inputs.
void write_svg_plot(std::ostream& out, const std::string& x_label,
                    const std::string& y_label,
                    const std::vector<PlotSeries>& series);

}  // namespace rsajam
