#include "strongmatch/harness.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "strongmatch/instances.hpp"
#include "strongmatch/io.hpp"

namespace strongmatch {

namespace {

constexpr std::uint64_t kVerifierBudget = 10'000'000;

std::string step_label(std::size_t k) { return "step " + std::to_string(k) + ": "; }

void strip_isolated_near(Residual& h, const VertexSet& removed) {
  VertexSet near;
  for (VertexId v : removed) {
    for (VertexId w : h.base().neighbors(v)) {
      if (h.contains(w) && h.degree(w) == 0) near.push_back(w);
    }
  }
  for (VertexId w : normalize(near)) h.remove(w);
}

VertexSet live_component(const Residual& h, VertexId root) {
  VertexSet comp{root};
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    h.for_each_neighbor(x, [&](VertexId y) {
      auto it = std::lower_bound(comp.begin(), comp.end(), y);
      if (it == comp.end() || *it != y) {
        comp.insert(it, y);
        stack.push_back(y);
      }
    });
  }
  return comp;
}

// The step's matching in the identifiers of compact_subgraph(g, comp), or
// nullopt when an endpoint lies outside comp.
std::optional<std::vector<Edge>> compact_matching(const VertexSet& comp,
                                                  const std::vector<Edge>& matched) {
  auto id = [&](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
  };
  std::vector<Edge> m;
  for (const Edge& e : matched) {
    if (!set_contains(comp, e.u) || !set_contains(comp, e.v)) return std::nullopt;
    m.push_back(make_edge(id(e.u), id(e.v)));
  }
  return m;
}

}  // namespace

VerifyReport verify_solution(const Graph& g, const Matching& m) {
  VerifyReport r;
  r.induced_ok = is_induced_matching(g, m.edges);
  if (!r.induced_ok) r.details.push_back("matching is not an induced matching");
  const std::size_t need = g.n() - g.isolated_count();
  r.bound_ok = 9 * m.size() >= need;
  if (!r.bound_ok) {
    r.details.push_back("bound: 9*" + std::to_string(m.size()) + " < n - i = " +
                        std::to_string(need));
  }
  return r;
}

VerifyReport verify_certificate(const Graph& g, const SolveResult& r) {
  VerifyReport rep = verify_solution(g, r.matching);
  auto fail = [&](std::string msg) {
    rep.certificate_ok = false;
    rep.details.push_back(std::move(msg));
  };
  if (r.n != g.n()) fail("recorded n differs from the graph");
  if (r.isolated != g.isolated_count()) fail("recorded isolated count differs");

  Residual h(g);
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) h.remove(v);
  }
  std::vector<Edge> union_of_steps;
  std::size_t k = 0;
  for (const ReductionStep& step : r.certificate.steps) {
    ++k;
    require_vertices(g, step.removed);
    for (const Edge& e : step.matched) {
      if (!g.contains(e.u)) throw_unknown_vertex(e.u);
      if (!g.contains(e.v)) throw_unknown_vertex(e.v);
    }
    if (step.removed.empty()) {
      fail(step_label(k) + "empty removed set");
      return rep;
    }
    bool replayable = true;
    for (VertexId v : step.removed) {
      if (!h.contains(v)) {
        fail(step_label(k) + "vertex " + std::to_string(v) +
             " was already removed or stripped as isolated");
        replayable = false;
        break;
      }
    }
    if (!replayable) return rep;

    if (step.rule == Rule::kExact) {
      if (live_component(h, step.removed.front()) != step.removed) {
        fail(step_label(k) + "EXACT removed set is not a component");
      } else {
        const Graph piece = compact_subgraph(g, step.removed);
        const auto local = compact_matching(step.removed, step.matched);
        if (!local || !is_induced_matching(piece, *local)) {
          fail(step_label(k) + "EXACT matching is not induced in its component");
        }
        try {
          const auto best = max_induced_matching(piece, {kVerifierBudget});
          if (best.size() != step.matched.size()) {
            fail(step_label(k) + "EXACT matching has " +
                 std::to_string(step.matched.size()) + " edges, optimum is " +
                 std::to_string(best.size()));
          }
        } catch (const BudgetExceeded&) {
          fail(step_label(k) + "EXACT component too large to re-solve");
        }
      }
    } else {
      for (auto& v : validate_step(h, step)) fail(step_label(k) + v);
    }
    union_of_steps.insert(union_of_steps.end(), step.matched.begin(), step.matched.end());
    for (VertexId v : step.removed) h.remove(v);
    strip_isolated_near(h, step.removed);
  }
  if (!h.empty()) {
    fail(std::to_string(h.size()) + " vertices are never removed by any step");
  }
  if (make_matching(std::move(union_of_steps)) != r.matching) {
    fail("union of step matchings differs from the reported matching");
  }
  return rep;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) {
  return Prng(master + trial).next();
}

Graph trial_graph(const FuzzConfig& cfg, std::size_t trial) {
  Prng rng(trial_seed(cfg.seed, trial));
  RandomGraphConfig rc;
  rc.n = cfg.n_min + rng.uniform(cfg.n_max - cfg.n_min + 1);
  rc.extra_edge_attempts = 2 * rc.n;
  rc.seed = rng.next();
  return gen_random_maxdeg4(rc);
}

namespace {

struct TrialOutcome {
  bool accepted = false;
  bool rejected_c25 = false;
  bool cross_checked = false;
  std::size_t n = 0;
  std::size_t matched = 0;
  SolveStats stats;
  std::vector<FuzzFailure> failures;
  double seconds = 0;
};

bool has_c25_component(const Graph& g) {
  for (const VertexSet& c : components(g)) {
    if (c.size() == 10 && is_isomorphic_c25(compact_subgraph(g, c))) return true;
  }
  return false;
}

TrialOutcome run_instance(const Graph& g, std::size_t trial, std::uint64_t seed,
                          const FuzzConfig& cfg) {
  TrialOutcome out;
  out.n = g.n();
  const auto start = std::chrono::steady_clock::now();
  auto failure = [&](std::string kind, std::string detail, std::string cert = {}) {
    out.failures.push_back({trial, seed, std::move(kind), std::move(detail),
                            format_graph(g), std::move(cert)});
  };

  EngineOptions opt;
  opt.exact_threshold = cfg.exact_threshold;
  const bool expect_reject = has_c25_component(g);
  std::optional<SolveResult> res;
  try {
    res = solve(g, opt);
  } catch (const IsC25Component& e) {
    if (expect_reject) {
      out.rejected_c25 = true;
    } else {
      failure("unexpected-c25-reject", e.what());
    }
  } catch (const InternalInvariantViolation& e) {
    failure("invariant", e.what());
  } catch (const MaxDegreeExceeded& e) {
    failure("max-degree", e.what());
  }
  if (res) {
    if (expect_reject) failure("c25-accepted", "solve accepted a C_{2,5} component");
    out.accepted = true;
    out.matched = res->matching.size();
    out.stats = res->stats;
    const std::string cert = format_certificate(*res);
    const auto sol = verify_solution(g, res->matching);
    if (!sol.ok()) failure("solution", sol.details.front(), cert);
    const auto rep = verify_certificate(g, *res);
    if (!rep.ok()) failure("certificate", rep.details.front(), cert);

    if (g.n() <= cfg.cross_check_max_n) {
      out.cross_checked = true;
      const std::size_t nu = max_induced_matching(g).size();
      if (res->matching.size() > nu) {
        failure("exceeds-optimum", "solve found " + std::to_string(res->matching.size()) +
                                       " > optimum " + std::to_string(nu), cert);
      }
      if (9 * nu < g.n() - g.isolated_count()) {
        failure("optimum-below-bound", "optimum " + std::to_string(nu) + " below n/9", cert);
      }
      bool all_small = true;
      for (const auto& c : components(g)) all_small = all_small && c.size() <= cfg.exact_threshold;
      if (all_small && res->matching.size() != nu) {
        failure("not-optimal", "exact path returned " + std::to_string(res->matching.size()) +
                                   " but optimum is " + std::to_string(nu), cert);
      }
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

FuzzReport fuzz(const FuzzConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("fuzz: trials must be >= 1");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) {
    throw std::invalid_argument("fuzz: need 1 <= n_min <= n_max");
  }
  if (cfg.cross_check_max_n > 24) {
    throw std::invalid_argument("fuzz: cross_check_max_n is capped at 24");
  }
  const std::size_t total = cfg.trials + cfg.extra_instances.size();
  std::vector<TrialOutcome> outcomes(total);
  auto work = [&](std::size_t k) {
    if (k < cfg.trials) {
      outcomes[k] = run_instance(trial_graph(cfg, k), k, trial_seed(cfg.seed, k), cfg);
    } else {
      outcomes[k] = run_instance(cfg.extra_instances[k - cfg.trials], k, 0, cfg);
    }
  };
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    for (std::size_t k = 0; k < total; ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < total;) work(k);
      });
    }
  }

  FuzzReport rep;
  for (auto& o : outcomes) {
    ++rep.trials_run;
    rep.accepted += o.accepted;
    rep.rejected_c25 += o.rejected_c25;
    rep.cross_checked += o.cross_checked;
    if (o.accepted) {
      rep.vertices += o.n;
      rep.matched += o.matched;
    }
    for (std::size_t r = 0; r < kRuleCount; ++r) rep.stats.rule_counts[r] += o.stats.rule_counts[r];
    rep.stats.alternative_witnesses += o.stats.alternative_witnesses;
    for (auto& f : o.failures) rep.failures.push_back(std::move(f));
    rep.max_runtime_seconds = std::max(rep.max_runtime_seconds, o.seconds);
  }
  return rep;
}

std::string format_fuzz_summary(const FuzzReport& r) {
  std::string s;
  auto line = [&](const std::string& key, std::size_t v) {
    s += key + " " + std::to_string(v) + "\n";
  };
  line("trials", r.trials_run);
  line("accepted", r.accepted);
  line("rejected_c25", r.rejected_c25);
  line("cross_checked", r.cross_checked);
  line("vertices", r.vertices);
  line("matched", r.matched);
  for (std::size_t k = 0; k < kRuleCount; ++k) {
    line("rule " + std::string(rule_name(static_cast<Rule>(k))), r.stats.rule_counts[k]);
  }
  line("alternative_witnesses", r.stats.alternative_witnesses);
  line("failures", r.failures.size());
  for (const auto& f : r.failures) {
    s += "failure trial " + std::to_string(f.trial) + " seed " + std::to_string(f.seed) +
         " kind " + f.kind + " detail " + f.detail + "\n";
  }
  return s;
}

}  // namespace strongmatch
