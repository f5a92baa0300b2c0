#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ftoracle/graph.hpp"

namespace fto {

/// Seeded generator with platform-independent derived distributions
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// m distinct ordered pairs without self-loops, uniformly, sorted by (tail, head).
Graph random_digraph(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight = 1);

/// Rejection-samples random_digraph until the result is strongly connected.
Graph random_strongly_connected(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight = 1);

/// Random arborescence from vertex 0 over a shuffled vertex order plus
/// random extra edges, so every vertex is reachable from 0. Requires
/// n-1 <= m <= n(n-1).
Graph random_reachable_digraph(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight = 1);

/// Random DAG in which every vertex is reachable from 0; edges go from
/// smaller to larger ids. Requires n-1 <= m <= n(n-1)/2.
Graph random_dag(std::size_t n, std::size_t m, std::uint64_t seed, Weight max_weight = 1);

/// Hamiltonian cycle over a random vertex order plus random chords.
/// Strongly connected with diameter that shrinks as chords are added.
Graph cycle_with_chords(std::size_t n, std::size_t chords, std::uint64_t seed);

/// 0 -> 1 -> ... -> n-1 -> 0.
Graph directed_cycle(std::size_t n);

}  // namespace fto
