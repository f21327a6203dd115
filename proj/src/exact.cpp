#include "strongmatch/exact.hpp"

#include <bit>

namespace strongmatch {

Matching make_matching(std::vector<Edge> edges) {
  for (Edge& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  return Matching{std::move(edges)};
}

ConflictGraph build_conflict_graph(const Graph& g) {
  ConflictGraph cg;
  cg.nodes = g.edges();
  cg.conflicts.resize(cg.nodes.size());
  // Edges touching each vertex, to enumerate conflicts locally: f conflicts
  // with e=ab iff f has an endpoint in N[a] ∪ N[b].
  std::vector<std::vector<std::size_t>> incident(g.id_bound());
  for (std::size_t k = 0; k < cg.nodes.size(); ++k) {
    incident[cg.nodes[k].u].push_back(k);
    incident[cg.nodes[k].v].push_back(k);
  }
  for (std::size_t k = 0; k < cg.nodes.size(); ++k) {
    const VertexId ends[2] = {cg.nodes[k].u, cg.nodes[k].v};
    auto& out = cg.conflicts[k];
    for (VertexId a : closed_neighborhood(g, ends)) {
      for (std::size_t f : incident[a]) {
        if (f != k) out.push_back(f);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return cg;
}

namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  bool any() const {
    for (auto x : w_) {
      if (x) return true;
    }
    return false;
  }

  std::size_t first() const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    }
    return npos;
  }

  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  Bits& and_not(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      for (std::uint64_t x = w_[k]; x; x &= x - 1) f(k * 64 + std::countr_zero(x));
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> w_;
};

class IndependentSetSearch {
 public:
  IndependentSetSearch(const ConflictGraph& cg, std::uint64_t budget,
                       std::uint64_t& expanded)
      : n_(cg.nodes.size()), budget_(budget), expanded_(expanded) {
    adj_.assign(n_, Bits(n_));
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t f : cg.conflicts[k]) adj_[k].set(f);
    }
  }

  std::vector<std::size_t> run(const Bits& live) {
    best_.clear();
    chosen_.clear();
    search(live);
    return best_;
  }

 private:
  // Number of cliques in a greedy clique cover of `live`; no independent
  // set can take two nodes from one clique.
  std::size_t clique_cover(Bits uncovered) const {
    std::size_t cliques = 0;
    while (uncovered.any()) {
      ++cliques;
      Bits q = uncovered;
      while (q.any()) {
        const std::size_t v = q.first();
        uncovered.reset(v);
        q.reset(v);
        q &= adj_[v];
      }
    }
    return cliques;
  }

  void search(const Bits& live) {
    if (budget_ != 0 && expanded_ >= budget_) throw BudgetExceeded(budget_);
    ++expanded_;
    if (!live.any()) {
      if (chosen_.size() > best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + clique_cover(live) <= best_.size()) return;

    std::size_t pick = Bits::npos;
    std::size_t pick_deg = 0;
    live.for_each([&](std::size_t v) {
      const std::size_t d = adj_[v].count_and(live);
      if (pick == Bits::npos || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });

    Bits with = live;
    with.reset(pick);
    with.and_not(adj_[pick]);
    chosen_.push_back(pick);
    search(with);
    chosen_.pop_back();

    if (pick_deg == 0) return;  // excluding an unconstrained node cannot help
    Bits without = live;
    without.reset(pick);
    search(without);
  }

  std::size_t n_;
  std::vector<Bits> adj_;
  std::uint64_t budget_;
  std::uint64_t& expanded_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

Matching max_induced_matching(const Graph& g, SearchBudget budget) {
  std::vector<Edge> result;
  std::uint64_t expanded = 0;
  for (const VertexSet& comp : components(g)) {
    if (comp.size() < 2) continue;
    const Graph piece = compact_subgraph(g, comp);
    const ConflictGraph cg = build_conflict_graph(piece);
    IndependentSetSearch search(cg, budget.max_nodes, expanded);
    Bits live(cg.nodes.size());
    for (std::size_t k = 0; k < cg.nodes.size(); ++k) live.set(k);
    for (std::size_t k : search.run(live)) {
      result.push_back({comp[cg.nodes[k].u], comp[cg.nodes[k].v]});
    }
  }
  return make_matching(std::move(result));
}

}  // namespace strongmatch
