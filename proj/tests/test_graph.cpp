#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "rsajam/graph.hpp"

using namespace rsajam;

TEST_CASE("c = 0 gives the empty graph") {
  const auto g = sample_er_graph(5, 0.0, 1, 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("clamped probability: n = 2, c = 4 forces the single edge") {
  const auto g = sample_er_graph(2, 4.0, 1, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("n = 0 is rejected") {
  CHECK_THROWS_AS(sample_er_graph(0, 1.0, 1, 0), std::invalid_argument);
}

TEST_CASE("mean degree concentrates around c") {
  const auto g = sample_er_graph(10000, 3.0, 7, 0);
  const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / 10000.0;
  CHECK(std::fabs(mean_degree - 3.0) < 0.1);
}

TEST_CASE("adjacency is symmetric, sorted and loop-free") {
  for (bool large : {false, true}) {
    // n above the exhaustive cap exercises the geometric-skipping path.
    const std::int64_t n = large ? 20000 : 500;
    const auto g = sample_er_graph(n, 2.0, 3, large ? 1 : 0);
    CHECK(g.exhaustive == !large);
    for (std::int64_t i = 0; i < n; ++i) {
      const auto& nbrs = g.adjacency[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        CHECK(nbrs[k] != i);
        if (k > 0) CHECK(nbrs[k - 1] < nbrs[k]);
        CHECK(g.has_edge(nbrs[k], static_cast<std::int32_t>(i)));
      }
    }
    const double expected = static_cast<double>(n - 1);  // n(n-1)/2 * c/n
    const double sd = std::sqrt(expected);
    CHECK(std::fabs(static_cast<double>(g.edge_count()) - expected) < 6 * sd);
  }
}

TEST_CASE("exhaustively sampled edges agree with their edge keys") {
  const std::int64_t n = 60;
  const double c = 3.0;
  const auto g = sample_er_graph(n, c, 11, 4);
  const double p = g.edge_prob();
  for (std::int32_t i = 0; i < n; ++i) {
    for (std::int32_t j = i + 1; j < n; ++j) {
      CHECK(g.has_edge(i, j) ==
            bernoulli(StreamKey::edge_pair(11, 4, i, j), p));
    }
  }
}

TEST_CASE("edge count mean over replications") {
  const int reps = 100;
  double sum = 0.0;
  for (int r = 0; r < reps; ++r) {
    sum += static_cast<double>(
        sample_er_graph(1000, 2.0, 13, static_cast<std::uint32_t>(r)).edge_count());
  }
  const double mean = sum / reps;
  const double pairs = 1000.0 * 999.0 / 2.0;
  const double p = 2.0 / 1000.0;
  const double se = std::sqrt(pairs * p * (1 - p) / reps);
  CHECK(std::fabs(mean - pairs * p) < 3 * se);
}

TEST_CASE("permutations: determinism, n = 1, uniformity at n = 3") {
  CHECK(sample_permutation(1, 0, 0) == std::vector<std::int32_t>{0});
  CHECK(sample_permutation(10, 5, 2) == sample_permutation(10, 5, 2));

  std::map<std::vector<std::int32_t>, int> freq;
  const int reps = 60000;
  for (int r = 0; r < reps; ++r) {
    ++freq[sample_permutation(3, 17, static_cast<std::uint32_t>(r))];
  }
  CHECK(freq.size() == 6);
  for (const auto& [perm, count] : freq) {
    CHECK(std::fabs(static_cast<double>(count) / reps - 1.0 / 6.0) < 0.01);
  }
}

TEST_CASE("edge list dump: 1-based, i < j, sorted") {
  const auto g = sample_er_graph(30, 4.0, 2, 0);
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  int i, j, prev_i = 0, prev_j = 0;
  std::int64_t lines = 0;
  while (in >> i >> j) {
    CHECK(i < j);
    CHECK(i >= 1);
    CHECK(j <= 30);
    CHECK((i > prev_i || (i == prev_i && j > prev_j)));
    CHECK(g.has_edge(i - 1, j - 1));
    prev_i = i;
    prev_j = j;
    ++lines;
  }
  CHECK(lines == g.edge_count());
}
