#include "strongmatch/instances.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace strongmatch {

std::uint64_t Prng::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform: empty range");
  if (bound == 1) return 0;
  const int bits = std::bit_width(bound - 1);
  for (;;) {
    const std::uint64_t x = next() >> (64 - bits);
    if (x < bound) return x;
  }
}

Graph gen_c25() {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 5; ++i) {
    const VertexId j = (i + 1) % 5;
    e.push_back(make_edge(i, j));
    e.push_back(make_edge(i, j + 5));
    e.push_back(make_edge(i + 5, j));
    e.push_back(make_edge(i + 5, j + 5));
  }
  return Graph::from_edges(10, e);
}

Graph gen_k33plus() {
  std::vector<Edge> e;
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) {
      if (a != 0 || b != 3) e.push_back({a, b});
    }
  }
  e.push_back({0, 6});
  e.push_back({3, 6});
  return Graph::from_edges(7, e);
}

Graph gen_tight9() {
  std::vector<Edge> e;
  for (const Edge& x : gen_c25().edges()) {
    if (x.u != 9 && x.v != 9) e.push_back(x);
  }
  return Graph::from_edges(9, e);
}

Graph gen_path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) {
    e.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(i)});
  }
  return Graph::from_edges(n, e);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(make_edge(static_cast<VertexId>(i),
                          static_cast<VertexId>((i + 1) % n)));
  }
  return Graph::from_edges(n, e);
}

Graph gen_random_bounded(const RandomGraphConfig& cfg, std::size_t max_degree) {
  if (cfg.n == 0) throw std::invalid_argument("random graph needs n >= 1");
  if (max_degree < 2 && cfg.n > 2) {
    throw std::invalid_argument("max degree too small for a connected graph");
  }
  Prng rng(cfg.seed);
  std::vector<std::size_t> deg(cfg.n, 0);
  std::set<Edge> edges;
  for (std::size_t k = 1; k < cfg.n; ++k) {
    for (;;) {
      const std::size_t j = rng.uniform(k);
      if (deg[j] < max_degree) {
        edges.insert({static_cast<VertexId>(j), static_cast<VertexId>(k)});
        ++deg[j];
        ++deg[k];
        break;
      }
    }
  }
  for (std::size_t t = 0; t < cfg.extra_edge_attempts; ++t) {
    const auto a = static_cast<VertexId>(rng.uniform(cfg.n));
    const auto b = static_cast<VertexId>(rng.uniform(cfg.n));
    if (a == b || deg[a] >= max_degree || deg[b] >= max_degree) continue;
    if (edges.insert(make_edge(a, b)).second) {
      ++deg[a];
      ++deg[b];
    }
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(cfg.n, list);
}

}  // namespace strongmatch
