#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace strongmatch {

using VertexId = std::uint32_t;

// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<VertexId>;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Smaller id first.
constexpr Edge make_edge(VertexId a, VertexId b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

enum class GraphErrc {
  kSelfLoop,
  kDuplicateEdge,
  kIdOutOfRange,
  kUnknownVertex,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

[[noreturn]] void throw_unknown_vertex(VertexId v);

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet& normalize(VertexSet& s);

inline bool set_contains(std::span<const VertexId> sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_difference(std::span<const VertexId> a,
                         std::span<const VertexId> b);

/// Immutable undirected simple graph.
///
/// Vertices carry stable identifiers: subgraphs obtained through
/// remove_vertices() or induced_subgraph() keep the identifiers of the
/// surviving vertices, so results computed on pieces can be reported in terms
/// of the original input. Adjacency is stored in CSR form, each neighbor list
/// sorted by identifier.
class Graph {
 public:
  static constexpr std::uint32_t kNoIndex =
      std::numeric_limits<std::uint32_t>::max();

  Graph() = default;

  /// Vertices 0..n-1 and exactly the given edges. Throws GraphError on
  /// self-loops, duplicate edges and out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return ids_.size(); }
  std::size_t m() const noexcept { return nbrs_.size() / 2; }
  bool empty() const noexcept { return ids_.empty(); }

  const VertexSet& vertices() const noexcept { return ids_; }

  bool contains(VertexId v) const noexcept {
    return v < index_.size() && index_[v] != kNoIndex;
  }

  /// Position of v in vertices(); throws GraphError for unknown ids.
  std::size_t index_of(VertexId v) const {
    if (!contains(v)) throw_unknown_vertex(v);
    return index_[v];
  }

  /// One past the largest identifier; sizes id-indexed scratch arrays.
  std::size_t id_bound() const noexcept { return index_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    const std::size_t i = index_of(v);
    return {nbrs_.data() + offsets_[i], nbrs_.data() + offsets_[i + 1]};
  }

  std::size_t degree(VertexId v) const {
    const std::size_t i = index_of(v);
    return offsets_[i + 1] - offsets_[i];
  }

  bool adjacent(VertexId a, VertexId b) const {
    const auto nb = neighbors(a);
    if (!contains(b)) throw_unknown_vertex(b);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    for (VertexId w : neighbors(v)) f(w);
  }

  template <class F>
  void for_each_vertex(F&& f) const {
    for (VertexId v : ids_) f(v);
  }

  /// Number of degree-0 vertices.
  std::size_t isolated_count() const noexcept { return isolated_; }

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;

  /// All edges as (min id, max id), sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.offsets_ == b.offsets_ && a.nbrs_ == b.nbrs_;
  }

 private:
  friend Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

  VertexSet ids_;
  std::vector<std::uint32_t> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> nbrs_;
  std::size_t isolated_ = 0;
};

/// Read-only adjacency interface shared by Graph and Residual so the local
/// accounting routines below run unchanged on either.
template <class V>
concept GraphView = requires(const V& g, VertexId v) {
  { g.contains(v) } -> std::convertible_to<bool>;
  { g.degree(v) } -> std::convertible_to<std::size_t>;
  { g.adjacent(v, v) } -> std::convertible_to<bool>;
  { g.isolated_count() } -> std::convertible_to<std::size_t>;
  g.for_each_neighbor(v, [](VertexId) {});
  g.for_each_vertex([](VertexId) {});
};

/// A Graph with a removal mask. Removing a vertex updates the live degree of
/// its neighbors; nothing is ever re-inserted. Used by the reduction engine
/// and the certificate verifier to walk through a long chain of vertex
/// deletions without rebuilding adjacency.
class Residual {
 public:
  explicit Residual(const Graph& g);

  const Graph& base() const noexcept { return *g_; }
  std::size_t size() const noexcept { return alive_count_; }
  bool empty() const noexcept { return alive_count_ == 0; }

  bool contains(VertexId v) const noexcept {
    return g_->contains(v) && alive_[g_->index_of(v)];
  }

  std::size_t degree(VertexId v) const {
    const std::size_t i = g_->index_of(v);
    if (!alive_[i]) throw_unknown_vertex(v);
    return degree_[i];
  }

  bool adjacent(VertexId a, VertexId b) const {
    return contains(a) && contains(b) && g_->adjacent(a, b);
  }

  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    if (!contains(v)) throw_unknown_vertex(v);
    for (VertexId w : g_->neighbors(v)) {
      if (alive_[g_->index_of(w)]) f(w);
    }
  }

  template <class F>
  void for_each_vertex(F&& f) const {
    for (VertexId v : g_->vertices()) {
      if (alive_[g_->index_of(v)]) f(v);
    }
  }

  std::size_t isolated_count() const noexcept { return isolated_; }

  /// Smallest live identifier.
  std::optional<VertexId> first_vertex() const;

  void remove(VertexId v);

  VertexSet neighbors(VertexId v) const;

 private:
  const Graph* g_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> degree_;
  std::size_t alive_count_ = 0;
  std::size_t isolated_ = 0;
  mutable std::size_t cursor_ = 0;
};

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

/// G[keep] relabeled so that the i-th smallest member of keep becomes i.
/// Unlike induced_subgraph, the cost does not depend on the identifier range.
Graph compact_subgraph(const Graph& g, std::span<const VertexId> keep);

/// G - X. Surviving vertices keep their identifiers.
Graph remove_vertices(const Graph& g, std::span<const VertexId> x);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

template <GraphView V>
void require_vertices(const V& g, std::span<const VertexId> x) {
  for (VertexId v : x) {
    if (!g.contains(v)) throw_unknown_vertex(v);
  }
}

/// Number of edges with exactly one endpoint in x (x sorted).
template <GraphView V>
std::size_t d_out(const V& g, std::span<const VertexId> x) {
  require_vertices(g, x);
  std::size_t out = 0;
  for (VertexId v : x) {
    g.for_each_neighbor(v, [&](VertexId w) {
      if (!set_contains(x, w)) ++out;
    });
  }
  return out;
}

/// Vertices that have neighbors, lie outside x and have every neighbor in x:
/// the vertices that become isolated when x is deleted.
template <GraphView V>
VertexSet newly_isolated(const V& g, std::span<const VertexId> x) {
  VertexSet out;
  for (VertexId v : x) {
    g.for_each_neighbor(v, [&](VertexId w) {
      if (set_contains(x, w)) return;
      bool inside = true;
      g.for_each_neighbor(w, [&](VertexId z) {
        if (!set_contains(x, z)) inside = false;
      });
      if (inside) out.push_back(w);
    });
  }
  return normalize(out);
}

/// i(G - x), computed locally from the neighborhood of x.
template <GraphView V>
std::size_t isolated_after_removal(const V& g, std::span<const VertexId> x) {
  std::size_t already = g.isolated_count();
  for (VertexId v : x) {
    if (g.degree(v) == 0) --already;
  }
  return already + newly_isolated(g, x).size();
}

/// I(G - X) split by degree in the parent graph: by_degree[j] is i_j.
struct IsolatedProfile {
  VertexSet members;
  std::vector<std::size_t> by_degree;

  std::size_t count(std::size_t degree) const {
    return degree < by_degree.size() ? by_degree[degree] : 0;
  }

  /// i_1 + 2 i_2 + 3 i_3 + 4 i_4 (+ higher degrees, if any).
  std::size_t weighted_sum() const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < by_degree.size(); ++j) s += j * by_degree[j];
    return s;
  }
};

template <GraphView V>
IsolatedProfile isolated_profile(const V& g, std::span<const VertexId> x) {
  require_vertices(g, x);
  IsolatedProfile p;
  p.members = newly_isolated(g, x);
  if (g.isolated_count() > 0) {
    g.for_each_vertex([&](VertexId v) {
      if (g.degree(v) == 0 && !set_contains(x, v)) p.members.push_back(v);
    });
    normalize(p.members);
  }
  for (VertexId v : p.members) {
    const std::size_t d = g.degree(v);
    if (p.by_degree.size() <= d) p.by_degree.resize(d + 1, 0);
    ++p.by_degree[d];
  }
  return p;
}

/// Closed neighborhoods of the given vertices, united.
template <GraphView V>
VertexSet closed_neighborhood(const V& g, std::span<const VertexId> vs) {
  VertexSet out(vs.begin(), vs.end());
  for (VertexId v : vs) g.for_each_neighbor(v, [&](VertexId w) { out.push_back(w); });
  return normalize(out);
}

/// N(a) ∪ N(b), open neighborhoods.
template <GraphView V>
VertexSet neighborhood_union(const V& g, VertexId a, VertexId b) {
  VertexSet out;
  g.for_each_neighbor(a, [&](VertexId w) { out.push_back(w); });
  g.for_each_neighbor(b, [&](VertexId w) { out.push_back(w); });
  return normalize(out);
}

/// True iff every pair is an edge, no vertex repeats, and no edge of g joins
/// endpoints of two different pairs.
template <GraphView V>
bool is_induced_matching(const V& g, std::span<const Edge> m) {
  for (const Edge& e : m) {
    if (!g.contains(e.u)) throw_unknown_vertex(e.u);
    if (!g.contains(e.v)) throw_unknown_vertex(e.v);
    if (e.u == e.v || !g.adjacent(e.u, e.v)) return false;
  }
  if (m.size() <= 4) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const VertexId a[2] = {m[i].u, m[i].v};
        const VertexId b[2] = {m[j].u, m[j].v};
        for (VertexId x : a) {
          for (VertexId y : b) {
            if (x == y || g.adjacent(x, y)) return false;
          }
        }
      }
    }
    return true;
  }
  // Large matchings: look up the owning pair of every endpoint's neighbors.
  std::vector<std::pair<VertexId, std::size_t>> owner;
  owner.reserve(2 * m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    owner.emplace_back(m[i].u, i);
    owner.emplace_back(m[i].v, i);
  }
  std::sort(owner.begin(), owner.end());
  for (std::size_t k = 1; k < owner.size(); ++k) {
    if (owner[k].first == owner[k - 1].first) return false;
  }
  bool ok = true;
  for (const auto& [x, i] : owner) {
    g.for_each_neighbor(x, [&](VertexId y) {
      auto it = std::lower_bound(owner.begin(), owner.end(), std::pair{y, std::size_t{0}});
      if (it != owner.end() && it->first == y && it->second != i) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

enum class CycleKind { kTriangle, kFourCycle, kNone };

struct ShortCycleReport {
  CycleKind kind = CycleKind::kNone;
  std::vector<VertexId> witness;  // cyclic order; empty when kind is kNone
};

/// Lexicographically smallest triangle, else lexicographically smallest
/// 4-cycle (u, a, x, b) with u its minimum and a < b, else kNone.
ShortCycleReport short_cycle(const Graph& g);

/// Shortest-path length, or nullopt when v is unreachable from u.
template <GraphView V>
std::optional<std::size_t> bfs_distance(const V& g, VertexId u, VertexId v) {
  if (!g.contains(u)) throw_unknown_vertex(u);
  if (!g.contains(v)) throw_unknown_vertex(v);
  if (u == v) return 0;
  std::vector<std::pair<VertexId, std::size_t>> queue{{u, 0}};
  std::unordered_set<VertexId> seen{u};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [x, d] = queue[head];
    std::optional<std::size_t> hit;
    g.for_each_neighbor(x, [&](VertexId w) {
      if (hit || seen.contains(w)) return;
      if (w == v) {
        hit = d + 1;
        return;
      }
      seen.insert(w);
      queue.emplace_back(w, d + 1);
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

/// Isomorphism test for small graphs by backtracking over degree-compatible
/// candidates in BFS order.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Recognizes C_{2,5}: the 5-cycle with every vertex doubled into two
/// non-adjacent twins.
bool is_isomorphic_c25(const Graph& g);

}  // namespace strongmatch
