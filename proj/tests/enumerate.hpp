#pragma once

// All connected graphs with maximum degree <= max_degree on 1..n_max
// vertices, one per isomorphism class, with identifiers 0..n-1.
//
// Every connected graph on n vertices has a vertex whose deletion leaves it
// connected (a leaf of a spanning tree), so extending each class on n-1
// vertices by one new vertex in every admissible way reaches every class on n.
// Duplicates are removed by an invariant hash followed by an isomorphism test.

#include <algorithm>
#include <map>
#include <vector>

#include "strongmatch/graph.hpp"

namespace enumerate {

using strongmatch::Edge;
using strongmatch::Graph;
using strongmatch::VertexId;

inline std::vector<std::size_t> invariant(const Graph& g) {
  std::vector<std::size_t> key{g.n(), g.m()};
  std::vector<std::vector<std::size_t>> local;
  for (VertexId v : g.vertices()) {
    std::vector<std::size_t> row{g.degree(v)};
    std::size_t tri = 0;
    for (VertexId a : g.neighbors(v)) {
      row.push_back(g.degree(a));
      for (VertexId b : g.neighbors(v)) {
        if (a < b && g.adjacent(a, b)) ++tri;
      }
    }
    std::sort(row.begin() + 1, row.end());
    row.push_back(tri);
    local.push_back(std::move(row));
  }
  std::sort(local.begin(), local.end());
  for (auto& row : local) {
    key.insert(key.end(), row.begin(), row.end());
    key.push_back(99);
  }
  return key;
}

inline std::vector<std::vector<Graph>> connected_graphs(std::size_t n_max,
                                                        std::size_t max_degree) {
  std::vector<std::vector<Graph>> by_n(n_max + 1);
  if (n_max == 0) return by_n;
  by_n[1].push_back(Graph::from_edges(1, {}));
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    const auto fresh = static_cast<VertexId>(n - 1);
    for (const Graph& h : by_n[n - 1]) {
      const auto base = h.edges();
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_degree) continue;
        bool fits = true;
        auto edges = base;
        for (VertexId v = 0; v < fresh && fits; ++v) {
          if (mask >> v & 1) {
            fits = h.degree(v) < max_degree;
            edges.push_back({v, fresh});
          }
        }
        if (!fits) continue;
        Graph g = Graph::from_edges(n, edges);
        auto& bucket = buckets[invariant(g)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t k) {
          return strongmatch::are_isomorphic(by_n[n][k], g);
        });
        if (!seen) {
          bucket.push_back(by_n[n].size());
          by_n[n].push_back(std::move(g));
        }
      }
    }
  }
  return by_n;
}

}  // namespace enumerate
