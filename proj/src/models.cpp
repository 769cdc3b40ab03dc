#include "rsajam/models.hpp"

#include <stdexcept>

namespace rsajam {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Threshold: return "threshold";
    case ModelKind::Tetris: return "tetris";
    case ModelKind::Sfap: return "sfap";
  }
  throw std::logic_error("unknown ModelKind");
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "threshold") return ModelKind::Threshold;
  if (name == "tetris") return ModelKind::Tetris;
  if (name == "sfap") return ModelKind::Sfap;
  throw std::invalid_argument("unknown model: " + name);
}

std::vector<double> make_time_grid(int points) {
  if (points < 2) throw std::invalid_argument("time grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    grid[static_cast<std::size_t>(j)] =
        static_cast<double>(j) / static_cast<double>(points - 1);
  }
  grid.back() = 1.0;
  return grid;
}

}  // namespace rsajam
