#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongmatch/exact.hpp"
#include "strongmatch/graph.hpp"

namespace strongmatch {

// Reduction rules in priority order. R1..R11 remove local obstructions
// (end-vertices, degree-2 vertices, triangles, 4-cycles); R12 is the base
// step for graphs of girth >= 5 and minimum degree >= 3. kExact records a
// component handed to the exact solver.
enum class Rule : std::uint8_t {
  kR1, kR2, kR3, kR4, kR5, kR6, kR7, kR8, kR9, kR10, kR11, kR12, kExact
};

inline constexpr std::size_t kRuleCount = 13;

std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view name);

/// Quantities measured when a step was built. Informational only: the
/// verifier recomputes everything it checks from the graph.
struct StepMetrics {
  std::size_t removed = 0;             // |removed|
  std::size_t isolated_after = 0;      // i(G - removed)
  std::size_t d_out_removed = 0;       // d_out(removed)
  std::size_t first_stage_size = 0;    // |X| of the rule's first-stage set
  std::size_t first_stage_isolated = 0;  // i(G - X)
  std::size_t first_stage_d_out = 0;   // d_out(X)
  std::optional<std::size_t> spill;    // |Y1| for the two-edge extensions
};

struct ReductionStep {
  Rule rule = Rule::kR1;
  std::vector<Edge> matched;
  VertexSet removed;
  StepMetrics metrics;
  // The rule's textbook witness was rejected by validation and a later
  // candidate from the same local search was used.
  bool alternative_witness = false;
};

struct Certificate {
  std::vector<ReductionStep> steps;
};

struct SolveStats {
  std::array<std::size_t, kRuleCount> rule_counts{};
  std::size_t alternative_witnesses = 0;
};

struct SolveResult {
  Matching matching;
  Certificate certificate;
  std::size_t n = 0;
  std::size_t isolated = 0;  // degree-0 vertices of the input
  SolveStats stats;
};

struct EngineOptions {
  // Components with at most this many vertices go to the exact solver.
  std::size_t exact_threshold = 18;
  // Recompute every rule at every vertex before each step instead of
  // maintaining candidate sets incrementally. Quadratic; for testing.
  bool naive_search = false;
};

class MaxDegreeExceeded : public std::runtime_error {
 public:
  MaxDegreeExceeded(VertexId v, std::size_t degree);
  VertexId vertex() const noexcept { return vertex_; }
  std::size_t degree() const noexcept { return degree_; }

 private:
  VertexId vertex_;
  std::size_t degree_;
};

class IsC25Component : public std::runtime_error {
 public:
  explicit IsC25Component(VertexSet component);
  const VertexSet& component() const noexcept { return component_; }

 private:
  VertexSet component_;
};

/// A bound or existence guarantee behind one of the rules failed at runtime.
class InternalInvariantViolation : public std::runtime_error {
 public:
  InternalInvariantViolation(Rule rule, std::vector<VertexId> witness,
                             std::vector<std::string> details,
                             std::string graph);
  Rule rule() const noexcept { return rule_; }
  const std::vector<VertexId>& witness() const noexcept { return witness_; }
  const std::vector<std::string>& details() const noexcept { return details_; }
  // Input graph in the text graph format, for reproduction.
  const std::string& graph() const noexcept { return graph_; }

 private:
  Rule rule_;
  std::vector<VertexId> witness_;
  std::vector<std::string> details_;
  std::string graph_;
};

/// Constructs an induced matching M with 9|M| >= n - i, i the number of
/// isolated vertices. Requires maximum degree <= 4 and no component
/// isomorphic to C_{2,5}.
SolveResult solve(const Graph& g, const EngineOptions& options = {});

/// First applicable rule with its lexicographically smallest witness, built
/// into a validated step. g must be connected, larger than the exact
/// threshold, of maximum degree <= 4 and not C_{2,5}.
ReductionStep next_reduction(const Graph& g, const EngineOptions& options = {});

/// Lexicographically first pair of edges with all endpoints in s forming an
/// induced matching of g.
std::optional<std::pair<Edge, Edge>> find_induced_2matching_within(
    const Graph& g, std::span<const VertexId> s);

/// Empty iff (a) the matched edges exist and form an induced matching,
/// (b) every matched endpoint has its closed neighborhood inside removed, and
/// (c) 9 |matched| >= |removed| + i(g - removed).
std::vector<std::string> validate_step(const Graph& g, const ReductionStep& step);
std::vector<std::string> validate_step(const Residual& g,
                                       const ReductionStep& step);

}  // namespace strongmatch
