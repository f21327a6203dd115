#pragma once

#include <cstddef>
#include <cstdint>

#include "strongmatch/graph.hpp"

namespace strongmatch {

/// splitmix64. The whole stream is a function of the seed, which keeps fuzz
/// runs reproducible across platforms and ports.
class Prng {
 public:
  explicit constexpr Prng(std::uint64_t seed = 0) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound). Takes the top ceil(log2 bound) bits of
  /// each output and rejects values >= bound, so there is no modulo bias.
  /// bound == 1 consumes no output.
  std::uint64_t uniform(std::uint64_t bound);

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

struct RandomGraphConfig {
  std::size_t n = 1;
  std::size_t extra_edge_attempts = 0;
  std::uint64_t seed = 0;
};

/// C_{2,5}: a_i = i, b_i = i + 5, and for j = i + 1 (mod 5) the four edges
/// a_i a_j, a_i b_j, b_i a_j, b_i b_j.
Graph gen_c25();

/// K_{3,3} on {0,1,2} x {3,4,5} with the edge 0-3 subdivided by vertex 6.
Graph gen_k33plus();

/// C_{2,5} minus vertex 9: connected, 9 vertices, strong matching number 1.
Graph gen_tight9();

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);

/// Random connected graph with maximum degree at most max_degree: a random
/// recursive tree (each new vertex k attaches to a uniform earlier vertex that
/// still has spare degree, redrawing on saturated picks), followed by
/// cfg.extra_edge_attempts uniform pair draws that add the edge whenever it
/// is new, not a loop, and both endpoints have spare degree.
Graph gen_random_bounded(const RandomGraphConfig& cfg, std::size_t max_degree);

inline Graph gen_random_maxdeg4(const RandomGraphConfig& cfg) {
  return gen_random_bounded(cfg, 4);
}

}  // namespace strongmatch
