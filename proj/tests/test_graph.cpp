#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strongmatch/graph.hpp"
#include "strongmatch/instances.hpp"

using namespace strongmatch;

namespace {

Graph make(std::size_t n, std::vector<Edge> es) { return Graph::from_edges(n, es); }

GraphErrc error_of(std::size_t n, std::vector<Edge> es) {
  try {
    Graph::from_edges(n, es);
  } catch (const GraphError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return GraphErrc::kUnknownVertex;
}

}  // namespace

TEST(Graph, BasicQueries) {
  const Graph g = make(4, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.degree(3), 0u);
  EXPECT_EQ(g.isolated_count(), 1u);
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(3, 0));
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_EQ(g.min_degree(), 0u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Graph, ConstructionErrors) {
  EXPECT_EQ(error_of(2, {{1, 1}}), GraphErrc::kSelfLoop);
  EXPECT_EQ(error_of(2, {{0, 1}, {1, 0}}), GraphErrc::kDuplicateEdge);
  EXPECT_EQ(error_of(2, {{0, 2}}), GraphErrc::kIdOutOfRange);
}

TEST(Graph, UnknownVertexQueries) {
  const Graph g = make(3, {{0, 1}});
  try {
    (void)g.degree(7);
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrc::kUnknownVertex);
  }
  const VertexSet x{5};
  EXPECT_THROW(d_out(g, x), GraphError);
}

TEST(Graph, InducedSubgraphKeepsIds) {
  const Graph p = gen_path(5);
  const VertexSet keep{1, 2, 4};
  const Graph h = induced_subgraph(p, keep);
  EXPECT_EQ(h.vertices(), keep);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(h.isolated_count(), 1u);
  EXPECT_FALSE(h.contains(3));
  const VertexSet drop{2};
  EXPECT_EQ(remove_vertices(p, drop).edges(), (std::vector<Edge>{{0, 1}, {3, 4}}));
}

TEST(Graph, ComponentsOrderedBySmallestMember) {
  const Graph g = make(7, {{5, 6}, {0, 3}, {1, 2}});
  const auto cs = components(g);
  ASSERT_EQ(cs.size(), 4u);
  EXPECT_EQ(cs[0], (VertexSet{0, 3}));
  EXPECT_EQ(cs[1], (VertexSet{1, 2}));
  EXPECT_EQ(cs[2], (VertexSet{4}));
  EXPECT_EQ(cs[3], (VertexSet{5, 6}));
}

TEST(Graph, DOutAndIsolation) {
  // Star with center 0 and leaves 1..3, plus edge 3-4.
  const Graph g = make(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  const VertexSet x{0};
  EXPECT_EQ(d_out(g, x), 3u);
  EXPECT_EQ(newly_isolated(g, x), (VertexSet{1, 2}));
  EXPECT_EQ(isolated_after_removal(g, x), 2u);
  const auto p = isolated_profile(g, x);
  EXPECT_EQ(p.members, (VertexSet{1, 2}));
  EXPECT_EQ(p.count(1), 2u);
  EXPECT_EQ(p.count(3), 0u);
  EXPECT_EQ(closed_neighborhood(g, VertexSet{3}), (VertexSet{0, 3, 4}));
  EXPECT_EQ(neighborhood_union(g, 1, 4), (VertexSet{0, 3}));
}

TEST(Graph, InducedMatchingMatchesDefinition) {
  const Graph c6 = gen_cycle(6);
  const oracle::Adj a(c6);
  const std::vector<std::vector<Edge>> cases = {
      {{0, 1}, {3, 4}}, {{0, 1}, {2, 3}}, {{0, 1}}, {{0, 2}}, {{0, 1}, {1, 2}}, {}};
  for (const auto& m : cases) {
    EXPECT_EQ(is_induced_matching(c6, m), oracle::is_induced_matching(a, m));
  }
}

TEST(Graph, ShortCycles) {
  const auto tri = short_cycle(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(tri.kind, CycleKind::kTriangle);
  EXPECT_EQ(tri.witness, (std::vector<VertexId>{1, 2, 3}));
  const auto sq = short_cycle(gen_cycle(4));
  EXPECT_EQ(sq.kind, CycleKind::kFourCycle);
  EXPECT_EQ(sq.witness, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(short_cycle(gen_cycle(5)).kind, CycleKind::kNone);
}

TEST(Graph, BfsDistance) {
  const Graph p = gen_path(6);
  EXPECT_EQ(bfs_distance(p, 0, 5), 5u);
  EXPECT_EQ(bfs_distance(p, 2, 2), 0u);
  EXPECT_FALSE(bfs_distance(make(3, {{0, 1}}), 0, 2).has_value());
}

TEST(Graph, ResidualTracksDegrees) {
  const Graph c5 = gen_cycle(5);
  Residual h(c5);
  h.remove(0);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_FALSE(h.contains(0));
  EXPECT_EQ(h.degree(1), 1u);
  EXPECT_EQ(h.isolated_count(), 0u);
  h.remove(2);
  EXPECT_EQ(h.isolated_count(), 1u);
  EXPECT_EQ(h.degree(1), 0u);
  EXPECT_EQ(h.first_vertex(), 1u);
  EXPECT_EQ(h.neighbors(3), (VertexSet{4}));
  EXPECT_THROW(h.degree(0), GraphError);
}

TEST(Graph, IsomorphismAgreesWithPermutationOracle) {
  Prng rng(7);
  for (int t = 0; t < 150; ++t) {
    RandomGraphConfig c{6 + rng.uniform(3), rng.uniform(12), rng.next()};
    RandomGraphConfig d = c;
    d.seed = t % 3 == 0 ? c.seed : rng.next();
    const Graph a = gen_random_maxdeg4(c);
    // Relabel a by reversing identifiers to get an isomorphic copy.
    std::vector<Edge> flipped;
    const auto top = static_cast<VertexId>(a.n() - 1);
    for (const Edge& e : a.edges()) flipped.push_back(make_edge(top - e.u, top - e.v));
    const Graph a2 = Graph::from_edges(a.n(), flipped);
    EXPECT_TRUE(are_isomorphic(a, a2));
    const Graph b = gen_random_maxdeg4(d);
    EXPECT_EQ(are_isomorphic(a, b), oracle::isomorphic_by_permutation(a, b));
  }
}

TEST(Graph, RecognizesC25) {
  EXPECT_TRUE(is_isomorphic_c25(gen_c25()));
  EXPECT_FALSE(is_isomorphic_c25(gen_tight9()));
  EXPECT_FALSE(is_isomorphic_c25(gen_cycle(10)));
}

TEST(Graph, LargeInducedMatchingsMatchDefinition) {
  Prng rng(31);
  for (int t = 0; t < 300; ++t) {
    const Graph g = gen_random_maxdeg4({20 + rng.uniform(40), rng.uniform(80), rng.next()});
    const oracle::Adj a(g);
    const auto edges = g.edges();
    std::vector<Edge> pick;
    // Greedy picks stay induced; an occasional random edge usually breaks it.
    for (const Edge& e : edges) {
      auto trial = pick;
      trial.push_back(e);
      if (oracle::is_induced_matching(a, trial) || rng.uniform(25) == 0) pick = trial;
    }
    EXPECT_EQ(is_induced_matching(g, pick), oracle::is_induced_matching(a, pick));
    if (pick.size() > 5) {
      auto dup = pick;
      dup.push_back(pick.front());
      EXPECT_FALSE(is_induced_matching(g, dup));
    }
  }
}

TEST(Graph, CompactSubgraphRelabelsByRank) {
  const Graph c6 = gen_cycle(6);
  const VertexSet keep{5, 0, 1, 3};
  const Graph h = compact_subgraph(c6, keep);
  EXPECT_EQ(h.vertices(), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 3}}));
  EXPECT_EQ(h.isolated_count(), 1u);
  EXPECT_TRUE(are_isomorphic(h, induced_subgraph(c6, keep)));
}
