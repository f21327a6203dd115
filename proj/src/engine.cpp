#include "strongmatch/engine.hpp"

#include <set>
#include <sstream>

#include "strongmatch/io.hpp"

namespace strongmatch {

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "R1", "R2", "R3", "R4", "R5", "R6", "R7",
    "R8", "R9", "R10", "R11", "R12", "EXACT"};

std::string edge_text(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::string join_details(Rule rule, const std::vector<std::string>& details) {
  std::string s = "rule ";
  s += rule_name(rule);
  for (const auto& d : details) s += "; " + d;
  return s;
}

template <GraphView V>
std::vector<std::string> check_step(const V& g, const ReductionStep& step) {
  std::vector<std::string> out;
  if (step.rule == Rule::kExact) {
    out.push_back("EXACT steps are checked against the exact solver");
    return out;
  }
  if (step.matched.empty() || step.matched.size() > 2) {
    out.push_back("a reduction step matches 1 or 2 edges, got " +
                  std::to_string(step.matched.size()));
  }
  if (!std::is_sorted(step.removed.begin(), step.removed.end()) ||
      std::adjacent_find(step.removed.begin(), step.removed.end()) !=
          step.removed.end()) {
    out.push_back("removed set is not sorted and duplicate-free");
    return out;
  }
  for (VertexId v : step.removed) {
    if (!g.contains(v)) {
      out.push_back("removed vertex " + std::to_string(v) + " is not in the graph");
      return out;
    }
  }
  bool endpoints_known = true;
  for (const Edge& e : step.matched) {
    if (!g.contains(e.u) || !g.contains(e.v)) {
      out.push_back("matched edge " + edge_text(e) + " has an unknown endpoint");
      endpoints_known = false;
    } else if (e.u == e.v || !g.adjacent(e.u, e.v)) {
      out.push_back("matched pair " + edge_text(e) + " is not an edge");
    }
  }
  if (!endpoints_known) return out;
  if (!is_induced_matching(g, step.matched)) {
    out.push_back("matched edges do not form an induced matching");
  }
  for (const Edge& e : step.matched) {
    for (VertexId x : {e.u, e.v}) {
      if (!set_contains(step.removed, x)) {
        out.push_back("endpoint " + std::to_string(x) + " not removed");
      }
      g.for_each_neighbor(x, [&](VertexId y) {
        if (!set_contains(step.removed, y)) {
          out.push_back("neighbor " + std::to_string(y) + " of endpoint " +
                        std::to_string(x) + " not removed");
        }
      });
    }
  }
  const std::size_t isolated = isolated_after_removal(g, step.removed);
  if (9 * step.matched.size() < step.removed.size() + isolated) {
    out.push_back("accounting: 9*" + std::to_string(step.matched.size()) +
                  " < |removed| " + std::to_string(step.removed.size()) +
                  " + isolated " + std::to_string(isolated));
  }
  return out;
}

struct Witness {
  Rule rule = Rule::kR1;
  std::array<VertexId, 5> v{};
  std::size_t size = 0;

  std::vector<VertexId> list() const { return {v.begin(), v.begin() + size}; }
};

// Raised by the step builders; callers attach the serialized input graph.
struct StepFailure {
  Rule rule;
  std::vector<VertexId> witness;
  std::vector<std::string> details;
};

// Locality of each rule R1..R11: whether the rule applies with a given
// anchor depends only on vertices within this distance of the anchor (edges
// included), so a deletion can change the answer only for anchors this close
// to a deleted vertex.
constexpr std::array<std::uint8_t, 11> kRuleRadius = {2, 3, 5, 1, 2, 1,
                                                      2, 1, 1, 2, 2};
constexpr std::uint8_t kMaxRadius = 5;

class RuleBook {
 public:
  explicit RuleBook(const Residual& h)
      : h_(h), stamp_(h.base().id_bound(), 0) {}

  std::optional<Witness> probe(Rule r, VertexId u) const;
  ReductionStep build(const Witness& w) const;

 private:
  using Nbrs = VertexSet;

  Nbrs nbrs(VertexId v) const { return h_.neighbors(v); }

  ReductionStep one_edge(Rule r, VertexId a, VertexId b, const VertexSet& removed,
                         const VertexSet& first_stage) const;
  ReductionStep two_edge(Rule r, Edge e1, Edge e2, const VertexSet& base,
                         const VertexSet& first_stage) const;
  bool valid(const ReductionStep& s) const { return check_step(h_, s).empty(); }
  void fill_metrics(ReductionStep& s, const VertexSet& first_stage) const;

  // Induced 2-matchings inside s in lexicographic order; the first whose
  // step validates (and whose spill stays within max_spill, if given).
  std::optional<ReductionStep> search_pairs(
      Rule r, const VertexSet& base, const VertexSet& first_stage,
      std::optional<std::size_t> max_spill, bool& skipped) const;

  [[noreturn]] void fail(const Witness& w, std::vector<std::string> d) const {
    throw StepFailure{w.rule, w.list(), std::move(d)};
  }

  ReductionStep checked(const Witness& w, ReductionStep s) const {
    auto v = check_step(h_, s);
    if (!v.empty()) fail(w, std::move(v));
    return s;
  }

  ReductionStep build_r2(const Witness& w) const;
  ReductionStep build_r7(const Witness& w) const;
  ReductionStep build_r8(const Witness& w) const;
  ReductionStep build_r9(const Witness& w) const;
  ReductionStep build_r10_r11(const Witness& w) const;

  std::optional<Witness> probe_r3(VertexId u) const;

  const Residual& h_;
  mutable std::uint32_t epoch_ = 0;
  mutable std::vector<std::uint32_t> stamp_;
};

std::optional<Witness> RuleBook::probe(Rule r, VertexId u) const {
  const std::size_t du = h_.degree(u);
  const auto make = [r](std::initializer_list<VertexId> vs) {
    Witness w;
    w.rule = r;
    for (VertexId x : vs) w.v[w.size++] = x;
    return std::optional<Witness>(w);
  };
  switch (r) {
    case Rule::kR1: {
      if (du != 1) return std::nullopt;
      const VertexId v = nbrs(u)[0];
      if (h_.degree(v) <= 3) return make({u, v});
      return std::nullopt;
    }
    case Rule::kR2: {
      if (du != 1) return std::nullopt;
      const VertexId v = nbrs(u)[0];
      for (VertexId x : nbrs(v)) {
        if (x != u && h_.degree(x) == 1) return make({u, x, v});
      }
      return std::nullopt;
    }
    case Rule::kR3:
      return probe_r3(u);
    case Rule::kR4: {
      if (du != 1) return std::nullopt;
      return make({u, nbrs(u)[0]});
    }
    case Rule::kR5: {
      if (du != 2) return std::nullopt;
      for (VertexId v : nbrs(u)) {
        if (h_.degree(v) == 2) return make({u, v});
      }
      return std::nullopt;
    }
    case Rule::kR6: {
      if (du != 2) return std::nullopt;
      const auto n = nbrs(u);
      if (h_.adjacent(n[0], n[1])) return make({u, n[0], n[1]});
      return std::nullopt;
    }
    case Rule::kR7: {
      if (du != 2) return std::nullopt;
      const auto n = nbrs(u);
      const VertexId v = n[0], t = n[1];
      for (VertexId w : nbrs(v)) {
        if (w != u && h_.adjacent(w, t)) return make({u, v, w, t});
      }
      return std::nullopt;
    }
    case Rule::kR8: {
      if (du != 2) return std::nullopt;
      const auto n = nbrs(u);
      return make({u, n[0], n[1]});
    }
    case Rule::kR9: {
      const auto n = nbrs(u);
      for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < u) continue;
        for (std::size_t j = i + 1; j < n.size(); ++j) {
          if (h_.adjacent(n[i], n[j])) return make({u, n[i], n[j]});
        }
      }
      return std::nullopt;
    }
    case Rule::kR10: {
      if (du != 3) return std::nullopt;
      const auto n = nbrs(u);
      for (VertexId a : n) {
        for (VertexId x : nbrs(a)) {
          if (x == u) continue;
          for (VertexId b : n) {
            if (b > a && h_.adjacent(b, x)) {
              VertexId off = 0;
              for (VertexId c : n) {
                if (c != a && c != b) off = c;
              }
              return make({u, a, x, b, off});
            }
          }
        }
      }
      return std::nullopt;
    }
    case Rule::kR11: {
      const auto n = nbrs(u);
      for (VertexId a : n) {
        if (a < u) continue;
        for (VertexId x : nbrs(a)) {
          if (x <= u) continue;
          for (VertexId b : n) {
            if (b > a && h_.adjacent(b, x)) return make({u, a, x, b});
          }
        }
      }
      return std::nullopt;
    }
    case Rule::kR12: {
      const auto n = nbrs(u);
      if (n.empty()) return std::nullopt;
      return make({u, n[0]});
    }
    case Rule::kExact:
      break;
  }
  return std::nullopt;
}

std::optional<Witness> RuleBook::probe_r3(VertexId u1) const {
  if (h_.degree(u1) != 1) return std::nullopt;
  const Graph& g = h_.base();
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  std::vector<VertexId> frontier{u1}, next;
  stamp_[g.index_of(u1)] = epoch_;
  for (int depth = 1; depth <= 4; ++depth) {
    next.clear();
    for (VertexId x : frontier) {
      h_.for_each_neighbor(x, [&](VertexId y) {
        const std::size_t i = g.index_of(y);
        if (stamp_[i] == epoch_) return;
        stamp_[i] = epoch_;
        next.push_back(y);
      });
    }
    frontier.swap(next);
  }
  std::optional<VertexId> u2;
  for (VertexId x : frontier) {
    if (h_.degree(x) == 1 && (!u2 || x < *u2)) u2 = x;
  }
  if (!u2) return std::nullopt;
  const VertexId v1 = nbrs(u1)[0];
  const VertexId v2 = nbrs(*u2)[0];
  VertexId mid = 0;
  for (VertexId m : nbrs(v1)) {
    if (h_.adjacent(m, v2)) {
      mid = m;
      break;
    }
  }
  Witness w;
  w.rule = Rule::kR3;
  w.v = {u1, *u2, v1, mid, v2};
  w.size = 5;
  return w;
}

void RuleBook::fill_metrics(ReductionStep& s, const VertexSet& first_stage) const {
  s.metrics.removed = s.removed.size();
  s.metrics.isolated_after = isolated_after_removal(h_, s.removed);
  s.metrics.d_out_removed = d_out(h_, s.removed);
  s.metrics.first_stage_size = first_stage.size();
  s.metrics.first_stage_isolated = newly_isolated(h_, first_stage).size();
  s.metrics.first_stage_d_out = d_out(h_, first_stage);
}

ReductionStep RuleBook::one_edge(Rule r, VertexId a, VertexId b,
                                 const VertexSet& removed,
                                 const VertexSet& first_stage) const {
  ReductionStep s;
  s.rule = r;
  s.matched = {make_edge(a, b)};
  s.removed = removed;
  fill_metrics(s, first_stage);
  return s;
}

ReductionStep RuleBook::two_edge(Rule r, Edge e1, Edge e2, const VertexSet& base,
                                 const VertexSet& first_stage) const {
  ReductionStep s;
  s.rule = r;
  s.matched = {make_edge(e1.u, e1.v), make_edge(e2.u, e2.v)};
  std::sort(s.matched.begin(), s.matched.end());
  const VertexId ends[4] = {e1.u, e1.v, e2.u, e2.v};
  const VertexSet closed = closed_neighborhood(h_, ends);
  s.removed = set_union(base, closed);
  fill_metrics(s, first_stage);
  s.metrics.spill = set_difference(closed, base).size();
  return s;
}

std::optional<ReductionStep> RuleBook::search_pairs(
    Rule r, const VertexSet& base, const VertexSet& first_stage,
    std::optional<std::size_t> max_spill, bool& skipped) const {
  std::vector<Edge> inner;
  for (VertexId a : base) {
    h_.for_each_neighbor(a, [&](VertexId b) {
      if (b > a && set_contains(base, b)) inner.push_back({a, b});
    });
  }
  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      const Edge pair[2] = {inner[i], inner[j]};
      if (!is_induced_matching(h_, pair)) continue;
      ReductionStep s = two_edge(r, inner[i], inner[j], base, first_stage);
      if ((!max_spill || *s.metrics.spill <= *max_spill) && valid(s)) return s;
      skipped = true;
    }
  }
  return std::nullopt;
}

ReductionStep RuleBook::build(const Witness& w) const {
  const auto& v = w.v;
  switch (w.rule) {
    case Rule::kR1: {
      const VertexId x[1] = {v[1]};
      const VertexSet X = closed_neighborhood(h_, x);
      return checked(w, one_edge(w.rule, v[0], v[1], X, X));
    }
    case Rule::kR2:
      return build_r2(w);
    case Rule::kR3: {
      const VertexId centers[2] = {v[2], v[4]};
      const VertexSet X = closed_neighborhood(h_, centers);
      ReductionStep s;
      s.rule = w.rule;
      s.matched = {make_edge(v[0], v[2]), make_edge(v[1], v[4])};
      std::sort(s.matched.begin(), s.matched.end());
      s.removed = X;
      fill_metrics(s, X);
      return checked(w, std::move(s));
    }
    case Rule::kR4: {
      const VertexId x[1] = {v[1]};
      const VertexSet X = closed_neighborhood(h_, x);
      const std::size_t iso = newly_isolated(h_, X).size();
      if (iso > 4) {
        fail(w, {"end-vertex neighborhood leaves " + std::to_string(iso) +
                 " isolated vertices (expected at most 4)"});
      }
      return checked(w, one_edge(w.rule, v[0], v[1], X, X));
    }
    case Rule::kR5:
    case Rule::kR6: {
      const VertexSet X = neighborhood_union(h_, v[0], v[1]);
      return checked(w, one_edge(w.rule, v[0], v[1], X, X));
    }
    case Rule::kR7:
      return build_r7(w);
    case Rule::kR8:
      return build_r8(w);
    case Rule::kR9:
      return build_r9(w);
    case Rule::kR10:
    case Rule::kR11:
      return build_r10_r11(w);
    case Rule::kR12: {
      const VertexSet X = neighborhood_union(h_, v[0], v[1]);
      const std::size_t iso = newly_isolated(h_, X).size();
      if (iso != 0) {
        fail(w, {"base step left " + std::to_string(iso) +
                 " isolated vertices (expected none)"});
      }
      return checked(w, one_edge(w.rule, v[0], v[1], X, X));
    }
    case Rule::kExact:
      break;
  }
  fail(w, {"no builder for rule"});
}

ReductionStep RuleBook::build_r2(const Witness& w) const {
  const VertexId u1 = w.v[0], u2 = w.v[1], c = w.v[2];
  const VertexId x[1] = {c};
  const VertexSet X = closed_neighborhood(h_, x);
  const VertexSet iso = newly_isolated(h_, X);
  if (iso.size() <= 4) return checked(w, one_edge(w.rule, u1, c, X, X));

  std::vector<VertexId> others;
  for (VertexId y : nbrs(c)) {
    if (y != u1 && y != u2) others.push_back(y);
  }
  if (others.size() != 2) {
    fail(w, {"common neighbor of two end-vertices has degree " +
             std::to_string(others.size() + 2) + " (expected 4)"});
  }
  const VertexId w1 = others[0], w2 = others[1];
  if (h_.adjacent(w1, w2)) fail(w, {"w1 and w2 adjacent while i(G') >= 5"});
  const auto end_neighbor = [&](VertexId a) -> std::optional<VertexId> {
    for (VertexId t : nbrs(a)) {
      if (h_.degree(t) == 1) return t;
    }
    return std::nullopt;
  };
  const auto t1 = end_neighbor(w1);
  const auto t2 = end_neighbor(w2);
  if (!t1 || !t2) fail(w, {"w1 or w2 has no end-vertex neighbor"});
  return checked(w, two_edge(w.rule, {w1, *t1}, {w2, *t2}, X, X));
}

ReductionStep RuleBook::build_r7(const Witness& w) const {
  const VertexId u = w.v[0], v = w.v[1], mid = w.v[2], t = w.v[3];
  const VertexSet X = neighborhood_union(h_, u, v);
  const VertexSet iso = newly_isolated(h_, X);
  if (iso.size() <= 3) return checked(w, one_edge(w.rule, u, v, X, X));

  const VertexSet base = set_union(X, iso);
  bool skipped = false;
  for (VertexId s : iso) {
    if (h_.adjacent(s, t)) continue;
    for (VertexId r : nbrs(v)) {
      if (r == u || r == mid || !h_.adjacent(r, s) || h_.adjacent(r, t)) continue;
      ReductionStep step = two_edge(w.rule, {u, t}, {r, s}, base, X);
      if (valid(step)) {
        step.alternative_witness = skipped;
        return step;
      }
      skipped = true;
    }
  }
  if (auto step = search_pairs(w.rule, base, X, std::nullopt, skipped)) {
    step->alternative_witness = true;
    return *step;
  }
  fail(w, {"no induced 2-matching {ut, rs} or alternative in X ∪ I(G')"});
}

ReductionStep RuleBook::build_r8(const Witness& w) const {
  const VertexId u = w.v[0];
  const std::array<std::pair<VertexId, VertexId>, 2> orientations = {
      std::pair{w.v[1], w.v[2]}, std::pair{w.v[2], w.v[1]}};
  bool skipped = false;
  std::vector<VertexSet> bases;
  std::vector<VertexSet> stages;
  for (const auto& [v, other] : orientations) {
    const VertexSet X = neighborhood_union(h_, u, v);
    const VertexSet iso = newly_isolated(h_, X);
    if (iso.size() <= 3) {
      ReductionStep step = one_edge(w.rule, u, v, X, X);
      if (valid(step)) {
        step.alternative_witness = skipped;
        return step;
      }
      skipped = true;
      continue;
    }
    const VertexSet base = set_union(X, iso);
    for (VertexId s : iso) {
      if (h_.adjacent(s, other)) continue;
      for (VertexId t : nbrs(v)) {
        if (!h_.adjacent(t, s)) continue;
        ReductionStep step = two_edge(w.rule, {s, t}, {u, other}, base, X);
        if (valid(step)) {
          step.alternative_witness = skipped;
          return step;
        }
        skipped = true;
      }
    }
    bases.push_back(base);
    stages.push_back(X);
  }
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (auto step = search_pairs(w.rule, bases[k], stages[k], std::nullopt, skipped)) {
      step->alternative_witness = true;
      return *step;
    }
  }
  fail(w, {"no induced 2-matching {st, uw} or alternative in X ∪ I(G')"});
}

ReductionStep RuleBook::build_r9(const Witness& w) const {
  const VertexId u = w.v[0], v = w.v[1], c = w.v[2];
  const VertexSet X = neighborhood_union(h_, u, v);
  const VertexSet iso = newly_isolated(h_, X);
  if (iso.size() <= 2) return checked(w, one_edge(w.rule, u, v, X, X));

  const VertexSet base = set_union(X, iso);
  bool skipped = false;
  for (VertexId s : iso) {
    if (h_.adjacent(s, c)) continue;
    for (VertexId r : X) {
      if (r == u || r == v || r == c || !h_.adjacent(r, s)) continue;
      const bool near_u = h_.adjacent(r, u);
      const bool near_v = h_.adjacent(r, v);
      if (near_u == near_v) continue;
      const Edge tri = near_v ? Edge{u, c} : Edge{v, c};
      ReductionStep step = two_edge(w.rule, tri, {r, s}, base, X);
      if (valid(step)) {
        step.alternative_witness = skipped;
        return step;
      }
      skipped = true;
    }
  }
  if (auto step = search_pairs(w.rule, base, X, std::nullopt, skipped)) {
    step->alternative_witness = true;
    return *step;
  }
  fail(w, {"no induced 2-matching {uw, rs} or alternative in X ∪ I(G')"});
}

ReductionStep RuleBook::build_r10_r11(const Witness& w) const {
  const VertexId u = w.v[0];
  const VertexId v = w.rule == Rule::kR10 ? w.v[4] : w.v[1];
  const VertexSet X = neighborhood_union(h_, u, v);
  const VertexSet iso = newly_isolated(h_, X);
  const std::size_t one_edge_limit = w.rule == Rule::kR10 ? 2 : 1;
  if (iso.size() <= one_edge_limit) return checked(w, one_edge(w.rule, u, v, X, X));

  if (w.rule == Rule::kR10 && h_.degree(v) == 3) {
    if (iso.size() > 3) {
      fail(w, {"d(v) = 3 but i(G') = " + std::to_string(iso.size()) +
               " (expected at most 3)"});
    }
    return checked(w, one_edge(w.rule, u, v, X, X));
  }
  if (w.rule == Rule::kR11) {
    for (VertexId s : iso) {
      if (h_.degree(s) != 4) {
        fail(w, {"isolated vertex " + std::to_string(s) + " has degree " +
                 std::to_string(h_.degree(s)) + " (expected 4)"});
      }
    }
  }
  const VertexSet base = set_union(X, iso);
  bool skipped = false;
  if (auto step = search_pairs(w.rule, base, X, 4, skipped)) {
    step->alternative_witness = skipped;
    return *step;
  }
  fail(w, {w.rule == Rule::kR11
               ? "no induced 2-matching with spill <= 4 in X ∪ I(G'); the "
                 "component would have to be C_{2,5}"
               : "no induced 2-matching with spill <= 4 in X ∪ I(G')"});
}

class Engine {
 public:
  Engine(const Graph& g, const EngineOptions& opt)
      : g_(g),
        opt_(opt),
        h_(g),
        book_(h_),
        stamp_(g.id_bound(), 0) {}

  SolveResult run() {
    result_.n = g_.n();
    result_.isolated = g_.isolated_count();
    for (const VertexSet& comp : components(g_)) {
      if (comp.size() == 1) {
        h_.remove(comp[0]);
      } else if (comp.size() <= opt_.exact_threshold) {
        solve_exactly(comp);
      }
    }
    if (!opt_.naive_search) {
      h_.for_each_vertex([&](VertexId v) {
        for (std::size_t k = 0; k < cand_.size(); ++k) refresh(k, v);
      });
    }
    while (!h_.empty()) apply(pick());

    std::vector<Edge> all;
    for (const auto& s : result_.certificate.steps) {
      all.insert(all.end(), s.matched.begin(), s.matched.end());
    }
    result_.matching = make_matching(std::move(all));
    return std::move(result_);
  }

  ReductionStep pick() {
    if (opt_.naive_search) {
      for (std::size_t k = 0; k < cand_.size(); ++k) {
        for (VertexId v : g_.vertices()) {
          if (!h_.contains(v)) continue;
          if (auto w = book_.probe(static_cast<Rule>(k), v)) return build(*w);
        }
      }
    } else {
      for (std::size_t k = 0; k < cand_.size(); ++k) {
        if (cand_[k].empty()) continue;
        const VertexId a = *cand_[k].begin();
        const auto w = book_.probe(static_cast<Rule>(k), a);
        if (!w) {
          throw InternalInvariantViolation(
              static_cast<Rule>(k), {a}, {"stale rule candidate"}, format_graph(g_));
        }
        return build(*w);
      }
    }
    const VertexId u = *h_.first_vertex();
    return build(*book_.probe(Rule::kR12, u));
  }

 private:
  ReductionStep build(const Witness& w) {
    try {
      return book_.build(w);
    } catch (const StepFailure& f) {
      throw InternalInvariantViolation(f.rule, f.witness, f.details, format_graph(g_));
    }
  }

  void refresh(std::size_t k, VertexId v) {
    if (book_.probe(static_cast<Rule>(k), v)) {
      cand_[k].insert(v);
    } else {
      cand_[k].erase(v);
    }
  }

  void drop(VertexId v) {
    h_.remove(v);
    for (auto& c : cand_) c.erase(v);
  }

  void record(ReductionStep step) {
    ++result_.stats.rule_counts[static_cast<std::size_t>(step.rule)];
    if (step.alternative_witness) ++result_.stats.alternative_witnesses;
    result_.certificate.steps.push_back(std::move(step));
  }

  void solve_exactly(const VertexSet& comp) {
    const Graph piece = compact_subgraph(g_, comp);
    if (is_isomorphic_c25(piece)) {
      throw InternalInvariantViolation(
          Rule::kExact, comp, {"a C_{2,5} component appeared during reduction"},
          format_graph(g_));
    }
    ReductionStep step;
    step.rule = Rule::kExact;
    for (const Edge& e : max_induced_matching(piece).edges) {
      step.matched.push_back({comp[e.u], comp[e.v]});
    }
    step.removed = comp;
    step.metrics.removed = comp.size();
    for (VertexId v : comp) drop(v);
    record(std::move(step));
  }

  // Vertices within kMaxRadius of `from`, with their distance.
  std::vector<std::pair<VertexId, std::uint8_t>> ball(const VertexSet& from) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    std::vector<std::pair<VertexId, std::uint8_t>> out;
    for (VertexId v : from) {
      stamp_[g_.index_of(v)] = epoch_;
      out.emplace_back(v, 0);
    }
    for (std::size_t head = 0; head < out.size(); ++head) {
      const auto [x, d] = out[head];
      if (d == kMaxRadius) continue;
      h_.for_each_neighbor(x, [&](VertexId y) {
        const std::size_t i = g_.index_of(y);
        if (stamp_[i] == epoch_) return;
        stamp_[i] = epoch_;
        out.emplace_back(y, static_cast<std::uint8_t>(d + 1));
      });
    }
    return out;
  }

  void apply(ReductionStep step) {
    if (auto v = check_step(h_, step); !v.empty()) {
      throw InternalInvariantViolation(step.rule, step.removed, v, format_graph(g_));
    }
    std::vector<std::pair<VertexId, std::uint8_t>> dirty;
    if (!opt_.naive_search) dirty = ball(step.removed);

    VertexSet boundary;
    for (VertexId v : step.removed) {
      for (VertexId w : g_.neighbors(v)) {
        if (h_.contains(w) && !set_contains(step.removed, w)) boundary.push_back(w);
      }
    }
    normalize(boundary);
    const VertexSet removed = step.removed;
    record(std::move(step));
    for (VertexId v : removed) drop(v);

    // New isolated vertices are credited to the step; small components go to
    // the exact solver in order of their smallest vertex.
    std::vector<VertexSet> small;
    VertexSet seen;
    for (VertexId b : boundary) {
      if (!h_.contains(b) || set_contains(seen, b)) continue;
      if (h_.degree(b) == 0) {
        drop(b);
        continue;
      }
      VertexSet comp{b};
      std::vector<VertexId> stack{b};
      while (!stack.empty() && comp.size() <= opt_.exact_threshold) {
        const VertexId x = stack.back();
        stack.pop_back();
        h_.for_each_neighbor(x, [&](VertexId y) {
          if (std::find(comp.begin(), comp.end(), y) == comp.end()) {
            comp.push_back(y);
            stack.push_back(y);
          }
        });
      }
      normalize(comp);
      if (stack.empty() && comp.size() <= opt_.exact_threshold) {
        small.push_back(comp);
        seen = set_union(seen, comp);
      }
    }
    std::sort(small.begin(), small.end());
    for (const VertexSet& comp : small) solve_exactly(comp);

    for (const auto& [v, d] : dirty) {
      if (!h_.contains(v)) continue;
      for (std::size_t k = 0; k < cand_.size(); ++k) {
        if (d <= kRuleRadius[k]) refresh(k, v);
      }
    }
  }

  const Graph& g_;
  EngineOptions opt_;
  Residual h_;
  RuleBook book_;
  std::array<std::set<VertexId>, 11> cand_;
  SolveResult result_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
};

void check_degree(const Graph& g) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > 4) throw MaxDegreeExceeded(v, g.degree(v));
  }
}

}  // namespace

std::string_view rule_name(Rule r) {
  return kRuleNames[static_cast<std::size_t>(r)];
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (std::size_t k = 0; k < kRuleNames.size(); ++k) {
    if (kRuleNames[k] == name) return static_cast<Rule>(k);
  }
  return std::nullopt;
}

MaxDegreeExceeded::MaxDegreeExceeded(VertexId v, std::size_t degree)
    : std::runtime_error("vertex " + std::to_string(v) + " has degree " +
                         std::to_string(degree) + " > 4"),
      vertex_(v),
      degree_(degree) {}

namespace {
std::string component_text(const VertexSet& c) {
  std::string s;
  for (VertexId v : c) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}
}  // namespace

IsC25Component::IsC25Component(VertexSet component)
    : std::runtime_error("component {" + component_text(component) +
                         "} is isomorphic to C_{2,5}"),
      component_(std::move(component)) {}

InternalInvariantViolation::InternalInvariantViolation(
    Rule rule, std::vector<VertexId> witness, std::vector<std::string> details,
    std::string graph)
    : std::runtime_error("internal invariant violation: " +
                         join_details(rule, details)),
      rule_(rule),
      witness_(std::move(witness)),
      details_(std::move(details)),
      graph_(std::move(graph)) {}

SolveResult solve(const Graph& g, const EngineOptions& options) {
  check_degree(g);
  for (const VertexSet& comp : components(g)) {
    if (comp.size() == 10 && is_isomorphic_c25(compact_subgraph(g, comp))) {
      throw IsC25Component(comp);
    }
  }
  return Engine(g, options).run();
}

ReductionStep next_reduction(const Graph& g, const EngineOptions& options) {
  check_degree(g);
  if (components(g).size() != 1) {
    throw std::invalid_argument("next_reduction needs a connected graph");
  }
  if (g.n() <= options.exact_threshold) {
    throw std::invalid_argument("graph is within the exact-solver threshold");
  }
  if (is_isomorphic_c25(g)) throw IsC25Component(g.vertices());
  Residual h(g);
  RuleBook book(h);
  for (std::size_t k = 0; k < 11; ++k) {
    for (VertexId v : g.vertices()) {
      if (auto w = book.probe(static_cast<Rule>(k), v)) {
        try {
          return book.build(*w);
        } catch (const StepFailure& f) {
          throw InternalInvariantViolation(f.rule, f.witness, f.details, format_graph(g));
        }
      }
    }
  }
  try {
    return book.build(*book.probe(Rule::kR12, g.vertices().front()));
  } catch (const StepFailure& f) {
    throw InternalInvariantViolation(f.rule, f.witness, f.details, format_graph(g));
  }
}

std::optional<std::pair<Edge, Edge>> find_induced_2matching_within(
    const Graph& g, std::span<const VertexId> s) {
  require_vertices(g, s);
  VertexSet within(s.begin(), s.end());
  normalize(within);
  std::vector<Edge> inner;
  for (VertexId a : within) {
    for (VertexId b : g.neighbors(a)) {
      if (b > a && set_contains(within, b)) inner.push_back({a, b});
    }
  }
  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      const Edge pair[2] = {inner[i], inner[j]};
      if (is_induced_matching(g, pair)) return std::pair{inner[i], inner[j]};
    }
  }
  return std::nullopt;
}

std::vector<std::string> validate_step(const Graph& g, const ReductionStep& step) {
  return check_step(g, step);
}

std::vector<std::string> validate_step(const Residual& g, const ReductionStep& step) {
  return check_step(g, step);
}

}  // namespace strongmatch
