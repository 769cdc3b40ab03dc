#pragma once

#include <cstdint>
#include <stdexcept>

namespace rsajam {

// Counter-based randomness: every draw is addressed by a key and computed
// statelessly, so two algorithms can consume the same draws in different
// orders and still agree bit for bit.

enum class StreamPurpose : std::uint32_t {
  EdgePair = 1,
  Permutation = 2,
  BinomialDraw = 3,
};

struct StreamKey {
  std::uint64_t base_seed = 0;
  std::uint32_t replication = 0;
  StreamPurpose purpose = StreamPurpose::EdgePair;
  std::uint32_t index_a = 0;
  std::uint32_t index_b = 0;

  // Unordered vertex pair; stores the smaller index first.
  static StreamKey edge_pair(std::uint64_t seed, std::uint32_t replication,
                             std::uint32_t i, std::uint32_t j) {
    if (i > j) {
      const std::uint32_t t = i;
      i = j;
      j = t;
    }
    return StreamKey{seed, replication, StreamPurpose::EdgePair, i, j};
  }

  static StreamKey permutation(std::uint64_t seed, std::uint32_t replication,
                               std::uint32_t position) {
    return StreamKey{seed, replication, StreamPurpose::Permutation, position, 0};
  }

  static StreamKey binomial_draw(std::uint64_t seed, std::uint32_t replication,
                                 std::uint32_t step, std::uint32_t cls) {
    return StreamKey{seed, replication, StreamPurpose::BinomialDraw, step, cls};
  }
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

inline std::uint64_t key_hash(const StreamKey& key) {
  using detail::mix64;
  std::uint64_t h = mix64(key.base_seed ^ 0xa0761d6478bd642fULL);
  h = mix64(h ^ (static_cast<std::uint64_t>(key.replication) + 0xe7037ed1a0b428dbULL));
  h = mix64(h ^ (static_cast<std::uint64_t>(key.purpose) + 0x8ebc6af09c88c6e3ULL));
  h = mix64(h ^ (static_cast<std::uint64_t>(key.index_a) + 0x589965cc75374cc3ULL));
  h = mix64(h ^ (static_cast<std::uint64_t>(key.index_b) + 0x1d8e4e27c47d124fULL));
  return h;
}

// Uniform on [0, 1); pure function of the key.
inline double uniform01(const StreamKey& key) {
  return static_cast<double>(key_hash(key) >> 11) * 0x1.0p-53;
}

// Strict `<` so that p = 0 is always false and p = 1 always true.
inline bool bernoulli(const StreamKey& key, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bernoulli: p must lie in [0, 1]");
  }
  return uniform01(key) < p;
}

}  // namespace rsajam
