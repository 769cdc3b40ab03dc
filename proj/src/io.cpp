#include "rsajam/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace rsajam {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void write_simulate_csv(std::ostream& out, const EnsembleResult& ens,
                        bool header) {
  if (header) out << kSimulateCsvHeader << '\n';
  const std::string model = to_string(ens.spec.kind);
  for (std::size_t j = 0; j < ens.grid.size(); ++j) {
    for (std::size_t k = 0; k < ens.mean_alpha[j].size(); ++k) {
      out << model << ',' << ens.spec.K << ',' << format_number(ens.spec.c)
          << ',' << ens.spec.n << ',' << ens.reps << ','
          << format_number(ens.grid[j]) << ','
          << ens.spec.class_label(static_cast<int>(k)) << ','
          << format_number(ens.mean_alpha[j][k]) << ','
          << format_number(ens.stderr_alpha[j][k]) << '\n';
    }
  }
}

void write_fluid_csv(std::ostream& out, const FluidSolution& sol, bool header) {
  if (header) out << kFluidCsvHeader << '\n';
  const std::string model = to_string(sol.kind);
  const int label_base = sol.kind == ModelKind::Threshold ? 0 : 1;
  for (std::size_t j = 0; j < sol.grid.size(); ++j) {
    for (std::size_t k = 0; k < sol.alpha[j].size(); ++k) {
      out << model << ',' << sol.K << ',' << format_number(sol.c) << ','
          << format_number(sol.grid[j]) << ','
          << label_base + static_cast<int>(k) << ','
          << format_number(sol.alpha[j][k]) << '\n';
    }
  }
}

void write_labels(std::ostream& out, const ModelSpec& spec,
                  const std::vector<int>& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) {
    out << v + 1 << ' ';
    if (spec.kind == ModelKind::Threshold) {
      if (labels[v] == kBlockedLabel) {
        out << "blocked";
      } else {
        out << "active_" << labels[v];
      }
    } else {
      out << labels[v];
    }
    out << '\n';
  }
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 64.0;

const char* series_color(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  return colors[i % (sizeof colors / sizeof colors[0])];
}

}  // namespace

void write_svg_plot(std::ostream& out, const std::string& x_label,
                    const std::string& y_label,
                    const std::vector<PlotSeries>& series) {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min, y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!(x_min < x_max)) x_max = x_min + 1.0;
  if (!(y_min < y_max)) y_max = y_min + 1.0;
  y_min = std::min(y_min, 0.0);

  auto px = [&](double x) {
    return kMargin + (x - x_min) / (x_max - x_min) * (kWidth - 2 * kMargin);
  };
  auto py = [&](double y) {
    return kHeight - kMargin - (y - y_min) / (y_max - y_min) * (kHeight - 2 * kMargin);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << px(x_min) << "\" y1=\"" << py(y_min) << "\" x2=\""
      << px(x_max) << "\" y2=\"" << py(y_min)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << px(x_min) << "\" y1=\"" << py(y_min) << "\" x2=\""
      << px(x_min) << "\" y2=\"" << py(y_max)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xt = x_min + (x_max - x_min) * i / 5.0;
    const double yt = y_min + (y_max - y_min) * i / 5.0;
    out << "<text x=\"" << px(xt) << "\" y=\"" << py(y_min) + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_number(xt)
        << "</text>\n";
    out << "<text x=\"" << px(x_min) - 6 << "\" y=\"" << py(yt) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << format_number(yt)
        << "</text>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << kHeight / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << kHeight / 2 << ")\">" << y_label << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << "<polyline fill=\"none\" stroke=\"" << series_color(i)
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[i].points) {
      out << px(x) << ',' << py(y) << ' ';
    }
    out << "\"/>\n";
    const double ly = kMargin + 16.0 * static_cast<double>(i);
    out << "<line x1=\"" << kWidth - kMargin - 70 << "\" y1=\"" << ly
        << "\" x2=\"" << kWidth - kMargin - 50 << "\" y2=\"" << ly
        << "\" stroke=\"" << series_color(i) << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kWidth - kMargin - 44 << "\" y=\"" << ly + 4
        << "\" font-size=\"11\">" << series[i].name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace rsajam
