#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "strongmatch/graph.hpp"

namespace strongmatch {

/// Induced matching as sorted (min id, max id) pairs.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Sorts each pair and the list.
Matching make_matching(std::vector<Edge> edges);

/// One node per edge of the source graph; two nodes conflict when the edges
/// share a vertex or are joined by an edge. Independent sets are exactly the
/// induced matchings.
struct ConflictGraph {
  std::vector<Edge> nodes;
  std::vector<std::vector<std::size_t>> conflicts;
};

ConflictGraph build_conflict_graph(const Graph& g);

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("exact search exceeded budget of " +
                           std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Maximum induced matching by branch and bound on the conflict graph, one
/// connected component at a time. Branches on the live node of largest
/// conflict degree (ties: lowest index), include before exclude, and prunes
/// with a greedy clique cover of the remaining nodes. Throws BudgetExceeded
/// once more than budget.max_nodes search nodes have been expanded.
Matching max_induced_matching(const Graph& g, SearchBudget budget = {});

}  // namespace strongmatch
