#include <gtest/gtest.h>

#include "oracles.hpp"
#include "strongmatch/engine.hpp"
#include "strongmatch/exact.hpp"
#include "strongmatch/harness.hpp"
#include "strongmatch/instances.hpp"
#include "strongmatch/io.hpp"

using namespace strongmatch;

namespace {

// Generalized Petersen graph GP(10, 2), i.e. the dodecahedron: cubic, girth 5.
Graph dodecahedron() {
  std::vector<Edge> es;
  for (VertexId i = 0; i < 10; ++i) {
    es.push_back(make_edge(i, (i + 1) % 10));
    es.push_back(make_edge(i, 10 + i));
    es.push_back(make_edge(10 + i, 10 + (i + 2) % 10));
  }
  return Graph::from_edges(20, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  const auto shift = static_cast<VertexId>(a.id_bound());
  for (const Edge& e : b.edges()) es.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.id_bound() + b.id_bound(), es);
}

void expect_valid(const Graph& g, const SolveResult& r) {
  const auto rep = verify_certificate(g, r);
  EXPECT_TRUE(rep.ok()) << (rep.details.empty() ? "" : rep.details.front()) << "\n"
                        << format_graph(g);
  EXPECT_TRUE(oracle::is_induced_matching(oracle::Adj(g), r.matching.edges));
  EXPECT_GE(9 * r.matching.size(), g.n() - g.isolated_count());
}

}  // namespace

TEST(Engine, RuleNamesRoundTrip) {
  for (std::size_t k = 0; k < kRuleCount; ++k) {
    const auto r = static_cast<Rule>(k);
    EXPECT_EQ(parse_rule(rule_name(r)), r);
  }
  EXPECT_EQ(rule_name(Rule::kExact), "EXACT");
  EXPECT_FALSE(parse_rule("R13").has_value());
}

TEST(Engine, PathStartsWithEndVertexRule) {
  const ReductionStep s = next_reduction(gen_path(20));
  EXPECT_EQ(s.rule, Rule::kR1);
  EXPECT_EQ(s.matched, (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(s.removed, (VertexSet{0, 1, 2}));
  const SolveResult r = solve(gen_path(20));
  EXPECT_EQ(r.matching.size(), 7u);
  expect_valid(gen_path(20), r);
}

TEST(Engine, CycleStartsWithDegreeTwoRule) {
  const ReductionStep s = next_reduction(gen_cycle(20));
  EXPECT_EQ(s.rule, Rule::kR5);
  EXPECT_EQ(s.removed, (VertexSet{0, 1, 2, 19}));
  EXPECT_EQ(s.matched.size(), 1u);
}

TEST(Engine, GirthFiveCubicGraphUsesBaseStep) {
  const Graph g = dodecahedron();
  const ReductionStep s = next_reduction(g);
  EXPECT_EQ(s.rule, Rule::kR12);
  EXPECT_EQ(s.matched, (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(s.removed.size(), 6u);
  EXPECT_TRUE(validate_step(g, s).empty());
  expect_valid(g, solve(g));
}

TEST(Engine, NextReductionPreconditions) {
  EXPECT_THROW(next_reduction(gen_path(5)), std::invalid_argument);
  EXPECT_THROW(next_reduction(disjoint_union(gen_path(20), gen_path(20))),
               std::invalid_argument);
}

TEST(Engine, SmallGraphsAreSolvedExactly) {
  const SolveResult r = solve(gen_tight9());
  EXPECT_EQ(r.matching.size(), 1u);
  ASSERT_EQ(r.certificate.steps.size(), 1u);
  EXPECT_EQ(r.certificate.steps[0].rule, Rule::kExact);
  EXPECT_EQ(solve(gen_k33plus()).matching.size(), 1u);
}

TEST(Engine, RejectsHighDegree) {
  const Graph star = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  try {
    solve(star);
    FAIL();
  } catch (const MaxDegreeExceeded& e) {
    EXPECT_EQ(e.vertex(), 0u);
    EXPECT_EQ(e.degree(), 5u);
  }
}

TEST(Engine, RejectsC25Component) {
  EXPECT_THROW(solve(gen_c25()), IsC25Component);
  try {
    solve(disjoint_union(gen_path(3), gen_c25()));
    FAIL();
  } catch (const IsC25Component& e) {
    EXPECT_EQ(e.component().front(), 3u);
    EXPECT_EQ(e.component().size(), 10u);
  }
}

TEST(Engine, IsolatedVerticesAreExcludedFromTheBound) {
  const Graph g = Graph::from_edges(30, std::vector<Edge>{{0, 1}});
  const SolveResult r = solve(g);
  EXPECT_EQ(r.isolated, 28u);
  EXPECT_EQ(r.matching.size(), 1u);
  expect_valid(g, r);
  const Graph empty;
  EXPECT_EQ(solve(empty).matching.size(), 0u);
}

TEST(Engine, ValidateStepFlagsBadSteps) {
  const Graph g = gen_path(20);
  ReductionStep s = next_reduction(g);
  EXPECT_TRUE(validate_step(g, s).empty());

  ReductionStep no_closure = s;
  no_closure.removed = {0, 1};
  EXPECT_FALSE(validate_step(g, no_closure).empty());

  ReductionStep not_induced = s;
  not_induced.matched = {{0, 1}, {2, 3}};
  not_induced.removed = {0, 1, 2, 3, 4};
  EXPECT_FALSE(validate_step(g, not_induced).empty());

  ReductionStep too_costly;
  too_costly.rule = Rule::kR1;
  too_costly.matched = {{0, 1}};
  too_costly.removed = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_FALSE(validate_step(g, too_costly).empty());

  ReductionStep not_an_edge = s;
  not_an_edge.matched = {{0, 2}};
  EXPECT_FALSE(validate_step(g, not_an_edge).empty());
}

TEST(Engine, TwoMatchingSearchWithinSet) {
  const Graph g = gen_path(6);
  const auto p = find_induced_2matching_within(g, VertexSet{0, 1, 2, 3, 4, 5});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->first, (Edge{0, 1}));
  EXPECT_EQ(p->second, (Edge{3, 4}));
  EXPECT_FALSE(find_induced_2matching_within(g, VertexSet{0, 1, 2, 3}).has_value());
}

TEST(Engine, IncrementalSearchMatchesNaiveSearch) {
  Prng rng(21);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 19 + rng.uniform(120);
    const Graph g = gen_random_maxdeg4({n, (1 + rng.uniform(12)) * n, rng.next()});
    EngineOptions naive;
    naive.naive_search = true;
    const SolveResult a = solve(g);
    const SolveResult b = solve(g, naive);
    EXPECT_EQ(format_certificate(a), format_certificate(b)) << format_graph(g);
  }
}

TEST(Engine, RandomGraphsOfAllDensities) {
  Prng rng(22);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng.uniform(250);
    const Graph g = gen_random_maxdeg4({n, rng.uniform(20) * n, rng.next()});
    expect_valid(g, solve(g));
  }
}

TEST(Engine, RulesWithoutExactShortcut) {
  // Threshold 0 pushes even tiny graphs through the reduction rules.
  Prng rng(23);
  EngineOptions opt;
  opt.exact_threshold = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng.uniform(40);
    const Graph g = gen_random_maxdeg4({n, rng.uniform(20) * n, rng.next()});
    if (is_isomorphic_c25(g)) continue;
    const SolveResult r = solve(g, opt);
    expect_valid(g, r);
    if (g.n() <= 20) EXPECT_LE(r.matching.size(), oracle::nu_s_recursive(g));
  }
  expect_valid(gen_tight9(), solve(gen_tight9(), opt));
  expect_valid(gen_k33plus(), solve(gen_k33plus(), opt));
}

TEST(Engine, RuleCountsMatchCertificate) {
  const Graph g = gen_random_maxdeg4({300, 2000, 4});
  const SolveResult r = solve(g);
  std::array<std::size_t, kRuleCount> counts{};
  for (const auto& s : r.certificate.steps) ++counts[static_cast<std::size_t>(s.rule)];
  EXPECT_EQ(counts, r.stats.rule_counts);
  expect_valid(g, r);
}
