#include "strongmatch/graph.hpp"

#include <array>
#include <functional>
#include <iterator>
#include <numeric>

namespace strongmatch {

void throw_unknown_vertex(VertexId v) {
  throw GraphError(GraphErrc::kUnknownVertex,
                   "unknown vertex " + std::to_string(v));
}

VertexSet& normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const VertexId> a,
                         std::span<const VertexId> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::size_t{kNoIndex}) {
    throw GraphError(GraphErrc::kIdOutOfRange, "too many vertices");
  }
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError(GraphErrc::kIdOutOfRange,
                       "edge " + std::to_string(e.u) + "-" +
                           std::to_string(e.v) + " out of range for n=" +
                           std::to_string(n));
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrc::kSelfLoop,
                       "self-loop at vertex " + std::to_string(e.u));
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  Graph g;
  g.ids_.resize(n);
  std::iota(g.ids_.begin(), g.ids_.end(), VertexId{0});
  g.index_.resize(n);
  std::iota(g.index_.begin(), g.index_.end(), std::uint32_t{0});
  g.offsets_.assign(n + 1, 0);
  g.nbrs_.reserve(2 * edges.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = adj[v];
    std::sort(nb.begin(), nb.end());
    if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end()) {
      const Edge e = make_edge(static_cast<VertexId>(v), *dup);
      throw GraphError(GraphErrc::kDuplicateEdge,
                       "duplicate edge " + std::to_string(e.u) + "-" +
                           std::to_string(e.v));
    }
    g.nbrs_.insert(g.nbrs_.end(), nb.begin(), nb.end());
    g.offsets_[v + 1] = g.nbrs_.size();
    if (nb.empty()) ++g.isolated_;
  }
  return g;
}

std::size_t Graph::min_degree() const noexcept {
  if (ids_.empty()) return 0;
  std::size_t best = offsets_[1] - offsets_[0];
  for (std::size_t i = 1; i < ids_.size(); ++i) {
    best = std::min(best, offsets_[i + 1] - offsets_[i]);
  }
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    best = std::max(best, offsets_[i + 1] - offsets_[i]);
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) {
      if (ids_[i] < nbrs_[k]) out.push_back({ids_[i], nbrs_[k]});
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  require_vertices(g, keep);
  Graph h;
  h.ids_.assign(keep.begin(), keep.end());
  normalize(h.ids_);
  h.index_.assign(h.ids_.empty() ? 0 : h.ids_.back() + 1, Graph::kNoIndex);
  for (std::size_t i = 0; i < h.ids_.size(); ++i) {
    h.index_[h.ids_[i]] = static_cast<std::uint32_t>(i);
  }
  h.offsets_.assign(h.ids_.size() + 1, 0);
  for (std::size_t i = 0; i < h.ids_.size(); ++i) {
    std::size_t deg = 0;
    for (VertexId w : g.neighbors(h.ids_[i])) {
      if (h.contains(w)) {
        h.nbrs_.push_back(w);
        ++deg;
      }
    }
    h.offsets_[i + 1] = h.nbrs_.size();
    if (deg == 0) ++h.isolated_;
  }
  return h;
}

Graph compact_subgraph(const Graph& g, std::span<const VertexId> keep) {
  require_vertices(g, keep);
  VertexSet ids(keep.begin(), keep.end());
  normalize(ids);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (VertexId w : g.neighbors(ids[i])) {
      auto it = std::lower_bound(ids.begin(), ids.end(), w);
      if (it != ids.end() && *it == w && ids[i] < w) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(it - ids.begin())});
      }
    }
  }
  return Graph::from_edges(ids.size(), edges);
}

Graph remove_vertices(const Graph& g, std::span<const VertexId> x) {
  require_vertices(g, x);
  VertexSet drop(x.begin(), x.end());
  normalize(drop);
  return induced_subgraph(g, set_difference(g.vertices(), drop));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.n(), 0);
  std::vector<VertexId> stack;
  for (VertexId root : g.vertices()) {
    if (seen[g.index_of(root)]) continue;
    VertexSet comp;
    seen[g.index_of(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[g.index_of(w)]) {
          seen[g.index_of(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(normalize(comp)));
  }
  return out;
}

Residual::Residual(const Graph& g)
    : g_(&g),
      alive_(g.n(), 1),
      degree_(g.n()),
      alive_count_(g.n()),
      isolated_(g.isolated_count()) {
  for (std::size_t i = 0; i < g.n(); ++i) {
    degree_[i] = static_cast<std::uint32_t>(g.degree(g.vertices()[i]));
  }
}

std::optional<VertexId> Residual::first_vertex() const {
  const auto& ids = g_->vertices();
  while (cursor_ < ids.size() && !alive_[cursor_]) ++cursor_;
  if (cursor_ == ids.size()) return std::nullopt;
  return ids[cursor_];
}

void Residual::remove(VertexId v) {
  const std::size_t i = g_->index_of(v);
  if (!alive_[i]) throw_unknown_vertex(v);
  alive_[i] = 0;
  --alive_count_;
  if (degree_[i] == 0) --isolated_;
  for (VertexId w : g_->neighbors(v)) {
    const std::size_t j = g_->index_of(w);
    if (alive_[j] && --degree_[j] == 0) ++isolated_;
  }
}

VertexSet Residual::neighbors(VertexId v) const {
  VertexSet out;
  for_each_neighbor(v, [&](VertexId w) { out.push_back(w); });
  return out;
}

ShortCycleReport short_cycle(const Graph& g) {
  for (VertexId u : g.vertices()) {
    const auto nu = g.neighbors(u);
    for (auto a = nu.begin(); a != nu.end(); ++a) {
      if (*a < u) continue;
      for (auto b = std::next(a); b != nu.end(); ++b) {
        if (g.adjacent(*a, *b)) return {CycleKind::kTriangle, {u, *a, *b}};
      }
    }
  }
  // No triangles from here on, so any 4-cycle found is chordless.
  for (VertexId u : g.vertices()) {
    const auto nu = g.neighbors(u);
    for (VertexId a : nu) {
      if (a < u) continue;
      for (VertexId x : g.neighbors(a)) {
        if (x <= u) continue;
        for (VertexId b : nu) {
          if (b > a && g.adjacent(b, x)) {
            return {CycleKind::kFourCycle, {u, a, x, b}};
          }
        }
      }
    }
  }
  return {};
}

namespace {

// Backtracking search for a bijection pattern -> target. Pattern vertices are
// visited in BFS order so every vertex after the first of its component has
// an already-mapped neighbor, which keeps the candidate lists short.
class IsoSearch {
 public:
  IsoSearch(const Graph& pattern, const Graph& target)
      : p_(pattern), t_(target) {
    std::vector<char> seen(p_.n(), 0);
    std::vector<std::size_t> deg(p_.n());
    for (std::size_t i = 0; i < p_.n(); ++i) deg[i] = p_.degree(p_.vertices()[i]);
    while (order_.size() < p_.n()) {
      std::size_t root = p_.n();
      for (std::size_t i = 0; i < p_.n(); ++i) {
        if (!seen[i] && (root == p_.n() || deg[i] > deg[root])) root = i;
      }
      seen[root] = 1;
      std::size_t head = order_.size();
      order_.push_back(root);
      while (head < order_.size()) {
        const VertexId v = p_.vertices()[order_[head++]];
        for (VertexId w : p_.neighbors(v)) {
          const std::size_t j = p_.index_of(w);
          if (!seen[j]) {
            seen[j] = 1;
            order_.push_back(j);
          }
        }
      }
    }
    map_.assign(p_.n(), kUnset);
    used_.assign(t_.n(), 0);
  }

  bool run() { return extend(0); }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t pi, std::size_t ti) const {
    const VertexId pv = p_.vertices()[pi];
    const VertexId tv = t_.vertices()[ti];
    if (p_.degree(pv) != t_.degree(tv)) return false;
    for (std::size_t k = 0; k < p_.n(); ++k) {
      if (map_[k] == kUnset) continue;
      const bool pa = p_.adjacent(pv, p_.vertices()[k]);
      const bool ta = t_.adjacent(tv, t_.vertices()[map_[k]]);
      if (pa != ta) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t pi = order_[depth];
    for (std::size_t ti = 0; ti < t_.n(); ++ti) {
      if (used_[ti] || !consistent(pi, ti)) continue;
      map_[pi] = ti;
      used_[ti] = 1;
      if (extend(depth + 1)) return true;
      map_[pi] = kUnset;
      used_[ti] = 0;
    }
    return false;
  }

  const Graph& p_;
  const Graph& t_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  d.reserve(g.n());
  for (VertexId v : g.vertices()) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

const Graph& canonical_c25() {
  static const Graph g = [] {
    std::vector<Edge> e;
    for (VertexId i = 0; i < 5; ++i) {
      const VertexId j = (i + 1) % 5;
      for (VertexId a : {i, i + 5}) {
        for (VertexId b : {j, j + 5}) e.push_back(make_edge(a, b));
      }
    }
    return Graph::from_edges(10, e);
  }();
  return g;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return IsoSearch(a, b).run();
}

bool is_isomorphic_c25(const Graph& g) {
  if (g.n() != 10 || g.m() != 20) return false;
  if (g.min_degree() != 4 || g.max_degree() != 4) return false;
  return IsoSearch(g, canonical_c25()).run();
}

}  // namespace strongmatch
