#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsajam {

enum class ModelKind { Threshold, Tetris, Sfap };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct ModelSpec {
  ModelKind kind = ModelKind::Threshold;
  int K = 1;
  double c = 0.0;
  std::int64_t n = 1;

  void validate() const {
    if (K < 1) throw std::invalid_argument("ModelSpec: K must be >= 1");
    if (n < 1) throw std::invalid_argument("ModelSpec: n must be >= 1");
    if (!(c >= 0.0)) throw std::invalid_argument("ModelSpec: c must be >= 0");
  }

  double edge_prob() const {
    const double p = c / static_cast<double>(n);
    return p > 1.0 ? 1.0 : p;
  }

  // Classes whose scaled counts the fluid limit tracks:
  // Threshold 0..K-1, Tetris/Sfap 1..K. Always K of them.
  int tracked_classes() const { return K; }

  // External label of tracked class index i.
  int class_label(int i) const {
    return kind == ModelKind::Threshold ? i : i + 1;
  }
};

// Markov state of the counts chain. `active` has K entries for Threshold
// (classes 0..K-1) and K+1 entries for Tetris/Sfap (entry 0 = frozen).
struct StateCounts {
  ModelKind kind = ModelKind::Threshold;
  std::vector<std::int64_t> active;
  std::int64_t blocked = 0;  // Threshold only
  std::int64_t unexplored = 0;

  std::int64_t total() const {
    std::int64_t s = blocked + unexplored;
    for (auto a : active) s += a;
    return s;
  }
};

struct JammingSummary {
  std::vector<double> per_class_final;  // tracked classes, scaled by 1/n
  double total_active = 0.0;
};

struct Trajectory {
  ModelSpec spec;
  std::vector<double> grid;                 // times in [0, 1], last entry 1
  std::vector<std::vector<double>> alpha;   // grid.size() rows of K entries
};

// Per-vertex outcome of an oracle or coupled run. Threshold: final active
// class 0..K-1, or kBlockedLabel. Tetris/Sfap: height/frequency 0..K with
// 0 = frozen.
inline constexpr int kBlockedLabel = -1;

struct ProcessResult {
  std::vector<int> labels;
  Trajectory trajectory;
};

std::vector<double> make_time_grid(int points);

}  // namespace rsajam
