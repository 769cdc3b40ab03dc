#include "rsajam/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace rsajam {

namespace {

// Skip-stream keys must not collide with simulation binomial draws, which
// use index_b = class <= K; the sentinel keeps them apart.
constexpr std::uint32_t kSkipSentinel = 0xffffffffu;

// Invert the row-major enumeration of pairs i < j; row i starts at linear
// index i*(2n - i - 1)/2.
void pair_from_linear(std::int64_t m, std::int64_t n, std::int64_t& i,
                      std::int64_t& j) {
  auto row_start = [n](std::int64_t r) { return r * (2 * n - r - 1) / 2; };
  const double nd = static_cast<double>(n);
  i = static_cast<std::int64_t>(std::floor(
      nd - 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(m))));
  if (i < 0) i = 0;
  while (i > 0 && row_start(i) > m) --i;
  while (row_start(i + 1) <= m) ++i;
  j = i + 1 + (m - row_start(i));
}

}  // namespace

bool GraphInstance::has_edge(std::int32_t i, std::int32_t j) const {
  const auto& nbrs = adjacency[static_cast<std::size_t>(i)];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::int64_t GraphInstance::edge_count() const {
  std::int64_t deg = 0;
  for (const auto& nbrs : adjacency) deg += static_cast<std::int64_t>(nbrs.size());
  return deg / 2;
}

GraphInstance sample_er_graph(std::int64_t n, double c, std::uint64_t base_seed,
                              std::uint32_t replication,
                              std::int64_t exhaustive_cap) {
  if (n < 1) throw std::invalid_argument("sample_er_graph: n must be >= 1");
  if (!(c >= 0.0)) throw std::invalid_argument("sample_er_graph: c must be >= 0");
  if (c >= static_cast<double>(n)) {
    std::fprintf(stderr,
                 "sample_er_graph: warning: c = %g >= n = %lld, edge probability "
                 "clamped to 1\n",
                 c, static_cast<long long>(n));
  }
  GraphInstance g;
  g.n = n;
  g.c = c;
  g.seed = SeedInfo{base_seed, replication};
  g.adjacency.assign(static_cast<std::size_t>(n), {});
  const double p = g.edge_prob();
  if (p == 0.0) return g;

  auto add_edge = [&g](std::int64_t i, std::int64_t j) {
    g.adjacency[static_cast<std::size_t>(i)].push_back(static_cast<std::int32_t>(j));
    g.adjacency[static_cast<std::size_t>(j)].push_back(static_cast<std::int32_t>(i));
  };

  if (n <= exhaustive_cap || p == 1.0) {
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        if (bernoulli(StreamKey::edge_pair(base_seed, replication,
                                           static_cast<std::uint32_t>(i),
                                           static_cast<std::uint32_t>(j)),
                      p)) {
          add_edge(i, j);
        }
      }
    }
  } else {
    // Geometric skipping over linear pair indices; same marginal acceptance
    // rate, one uniform per accepted pair.
    g.exhaustive = false;
    const std::int64_t total = n * (n - 1) / 2;
    const double log_q = std::log1p(-p);
    std::int64_t m = -1;
    std::uint32_t counter = 0;
    while (true) {
      const double u = uniform01(StreamKey::binomial_draw(base_seed, replication,
                                                          counter++, kSkipSentinel));
      const double gap = std::floor(std::log1p(-u) / log_q);
      if (gap >= static_cast<double>(total - m)) break;
      m += 1 + static_cast<std::int64_t>(gap);
      if (m >= total) break;
      std::int64_t i, j;
      pair_from_linear(m, n, i, j);
      add_edge(i, j);
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::vector<std::int32_t> sample_permutation(std::int64_t n,
                                             std::uint64_t base_seed,
                                             std::uint32_t replication) {
  if (n < 1) throw std::invalid_argument("sample_permutation: n must be >= 1");
  std::vector<std::int32_t> order(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
  for (std::int64_t i = n - 1; i > 0; --i) {
    const double u = uniform01(StreamKey::permutation(base_seed, replication,
                                                      static_cast<std::uint32_t>(i)));
    const std::int64_t j = static_cast<std::int64_t>(u * static_cast<double>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(j <= i ? j : i)]);
  }
  return order;
}

void write_edge_list(const GraphInstance& graph, std::ostream& out) {
  for (std::int64_t i = 0; i < graph.n; ++i) {
    for (std::int32_t j : graph.adjacency[static_cast<std::size_t>(i)]) {
      if (j > i) out << i + 1 << ' ' << j + 1 << '\n';
    }
  }
}

}  // namespace rsajam
