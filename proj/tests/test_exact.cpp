#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strongmatch/exact.hpp"
#include "strongmatch/instances.hpp"

using namespace strongmatch;

TEST(Exact, NamedGraphs) {
  EXPECT_EQ(max_induced_matching(gen_c25()).size(), 1u);
  EXPECT_EQ(max_induced_matching(gen_k33plus()).size(), 1u);
  EXPECT_EQ(max_induced_matching(gen_tight9()).size(), 1u);
  EXPECT_EQ(max_induced_matching(gen_path(20)).size(), 7u);
  EXPECT_EQ(max_induced_matching(gen_cycle(9)).size(), 3u);
  EXPECT_EQ(max_induced_matching(Graph::from_edges(3, {})).size(), 0u);
  EXPECT_EQ(max_induced_matching(Graph{}).size(), 0u);
}

TEST(Exact, ConflictGraphMatchesDefinition) {
  const Graph g = gen_random_maxdeg4({12, 20, 5});
  const auto cg = build_conflict_graph(g);
  const oracle::Adj a(g);
  ASSERT_EQ(cg.nodes, g.edges());
  for (std::size_t i = 0; i < cg.nodes.size(); ++i) {
    for (std::size_t j = 0; j < cg.nodes.size(); ++j) {
      if (i == j) continue;
      const bool clash = !oracle::is_induced_matching(a, {cg.nodes[i], cg.nodes[j]});
      const auto& c = cg.conflicts[i];
      EXPECT_EQ(std::find(c.begin(), c.end(), j) != c.end(), clash);
    }
  }
}

TEST(Exact, AgreesWithSubsetEnumeration) {
  Prng rng(11);
  int checked = 0;
  while (checked < 300) {
    RandomGraphConfig c{2 + rng.uniform(10), rng.uniform(12), rng.next()};
    const Graph g = gen_random_maxdeg4(c);
    if (g.m() > 16) continue;
    const Matching m = max_induced_matching(g);
    EXPECT_TRUE(oracle::is_induced_matching(oracle::Adj(g), m.edges));
    EXPECT_EQ(m.size(), oracle::nu_s_subsets(g)) << checked;
    ++checked;
  }
}

TEST(Exact, AgreesWithRecursionOnDisconnectedGraphs) {
  Prng rng(12);
  for (int t = 0; t < 60; ++t) {
    // Two random pieces side by side.
    const Graph a = gen_random_maxdeg4({3 + rng.uniform(10), rng.uniform(20), rng.next()});
    const Graph b = gen_random_maxdeg4({3 + rng.uniform(10), rng.uniform(20), rng.next()});
    auto edges = a.edges();
    const auto shift = static_cast<VertexId>(a.n());
    for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
    const Graph g = Graph::from_edges(a.n() + b.n(), edges);
    EXPECT_EQ(max_induced_matching(g).size(), oracle::nu_s_recursive(g));
  }
}

TEST(Exact, Deterministic) {
  const Graph g = gen_random_maxdeg4({40, 80, 3});
  EXPECT_EQ(max_induced_matching(g), max_induced_matching(g));
}

TEST(Exact, BudgetIsEnforced) {
  const Graph g = gen_random_maxdeg4({60, 200, 8});
  EXPECT_THROW(max_induced_matching(g, {5}), BudgetExceeded);
  EXPECT_NO_THROW(max_induced_matching(gen_path(4), {100}));
}
