#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbs {

using VertexId = int;
using EdgeId = int;

/// Which slot of an edge an end refers to. For arcs, `a` is the tail and `b`
/// the head; for undirected edges `a` is the smaller endpoint.
enum class End : std::uint8_t { a = 0, b = 1 };

constexpr End other(End e) noexcept { return e == End::a ? End::b : End::a; }

struct EdgeEnd {
  EdgeId edge = 0;
  End end = End::a;

  friend constexpr auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Edge {
  VertexId u = 0;  // tail for arcs
  VertexId v = 0;  // head for arcs

  bool is_loop() const noexcept { return u == v; }
  VertexId at(End e) const noexcept { return e == End::a ? u : v; }
  VertexId opposite(VertexId x) const noexcept { return x == u ? v : u; }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

class graph_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multigraph with stable vertex and edge identifiers.
///
/// Parallel edges and self-loops are ordinary edges. Deleting a vertex only
/// clears its bit in the alive mask; an edge is live iff both endpoints are.
/// A self-loop contributes two ends to its vertex, so the degree sum is always
/// twice the number of live edges.
template <bool Directed>
class basic_graph {
 public:
  static constexpr bool directed = Directed;

  basic_graph() = default;
  explicit basic_graph(int n) : alive_(static_cast<std::size_t>(n), 1), inc_(static_cast<std::size_t>(n)) {
    if (n < 0) throw graph_error("negative vertex count");
  }

  VertexId add_vertex() {
    alive_.push_back(1);
    inc_.emplace_back();
    return static_cast<VertexId>(alive_.size() - 1);
  }

  EdgeId add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if constexpr (!Directed) {
      if (v < u) std::swap(u, v);
    }
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    inc_[static_cast<std::size_t>(u)].push_back({id, End::a});
    inc_[static_cast<std::size_t>(v)].push_back({id, End::b});
    return id;
  }

  void kill(VertexId v) {
    check_vertex(v);
    alive_[static_cast<std::size_t>(v)] = 0;
  }

  /// Copy with the given vertices masked out.
  basic_graph without(std::span<const VertexId> vs) const {
    basic_graph g = *this;
    for (VertexId v : vs) g.kill(v);
    return g;
  }

  int vertex_count() const noexcept { return static_cast<int>(alive_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  int live_vertex_count() const noexcept {
    return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
  }
  int live_edge_count() const noexcept {
    int c = 0;
    for (EdgeId e = 0; e < edge_count(); ++e) c += live(e) ? 1 : 0;
    return c;
  }
  bool has_dead_vertices() const noexcept { return live_vertex_count() != vertex_count(); }

  bool contains(VertexId v) const noexcept { return v >= 0 && v < vertex_count(); }
  bool alive(VertexId v) const noexcept { return contains(v) && alive_[static_cast<std::size_t>(v)] != 0; }
  bool live(EdgeId e) const noexcept {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    return alive_[static_cast<std::size_t>(ed.u)] && alive_[static_cast<std::size_t>(ed.v)];
  }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  VertexId endpoint(EdgeEnd ee) const { return edge(ee.edge).at(ee.end); }

  /// All edge-ends at v, in insertion order, including ends of dead edges.
  std::span<const EdgeEnd> incidence(VertexId v) const { return inc_.at(static_cast<std::size_t>(v)); }

  /// Live edge-ends at v in insertion order.
  std::vector<EdgeEnd> live_ends(VertexId v) const {
    std::vector<EdgeEnd> out;
    if (!alive(v)) return out;
    for (const EdgeEnd& ee : incidence(v))
      if (live(ee.edge)) out.push_back(ee);
    return out;
  }

  int degree(VertexId v) const {
    if (!alive(v)) return 0;
    int d = 0;
    for (const EdgeEnd& ee : incidence(v)) d += live(ee.edge) ? 1 : 0;
    return d;
  }
  int in_degree(VertexId v) const { return count_ends(v, End::b); }
  int out_degree(VertexId v) const { return count_ends(v, End::a); }

  /// Live out-arcs (directed) or live incident edges seen from v (undirected),
  /// as (edge id, neighbour) pairs in insertion order. Self-loops appear once
  /// per end in the undirected case.
  std::vector<std::pair<EdgeId, VertexId>> out_arcs(VertexId v) const {
    std::vector<std::pair<EdgeId, VertexId>> out;
    if (!alive(v)) return out;
    for (const EdgeEnd& ee : incidence(v)) {
      if (!live(ee.edge)) continue;
      if (Directed && ee.end != End::a) continue;
      out.emplace_back(ee.edge, edge(ee.edge).at(other(ee.end)));
    }
    return out;
  }
  std::vector<std::pair<EdgeId, VertexId>> in_arcs(VertexId v) const {
    static_assert(Directed, "in_arcs is defined for digraphs only");
    std::vector<std::pair<EdgeId, VertexId>> out;
    if (!alive(v)) return out;
    for (const EdgeEnd& ee : incidence(v)) {
      if (!live(ee.edge) || ee.end != End::b) continue;
      out.emplace_back(ee.edge, edge(ee.edge).u);
    }
    return out;
  }

  std::vector<VertexId> live_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
      if (alive(v)) out.push_back(v);
    return out;
  }

  friend bool operator==(const basic_graph& x, const basic_graph& y) {
    return x.alive_ == y.alive_ && x.edges_ == y.edges_;
  }

 private:
  void check_vertex(VertexId v) const {
    if (!contains(v)) throw graph_error("vertex " + std::to_string(v) + " out of range");
  }
  int count_ends(VertexId v, End which) const {
    if (!alive(v)) return 0;
    int d = 0;
    for (const EdgeEnd& ee : incidence(v)) d += (live(ee.edge) && ee.end == which) ? 1 : 0;
    return d;
  }

  std::vector<std::uint8_t> alive_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeEnd>> inc_;
};

using UGraph = basic_graph<false>;
using DiGraph = basic_graph<true>;

template <class G>
concept Graph = std::same_as<G, UGraph> || std::same_as<G, DiGraph>;

/// Result of dropping dead vertices: the compacted graph plus id maps.
template <Graph G>
struct Compacted {
  G graph;
  std::vector<VertexId> new_id;  // old -> new, -1 for dead
  std::vector<VertexId> old_id;  // new -> old
  std::vector<EdgeId> new_edge;  // old -> new, -1 for dead edges
};

template <Graph G>
Compacted<G> compact(const G& g) {
  Compacted<G> c;
  c.new_id.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    c.new_id[static_cast<std::size_t>(v)] = static_cast<VertexId>(c.old_id.size());
    c.old_id.push_back(v);
  }
  c.graph = G(static_cast<int>(c.old_id.size()));
  c.new_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.live(e)) continue;
    const Edge& ed = g.edge(e);
    c.new_edge[static_cast<std::size_t>(e)] =
        c.graph.add_edge(c.new_id[static_cast<std::size_t>(ed.u)], c.new_id[static_cast<std::size_t>(ed.v)]);
  }
  return c;
}

/// The undirected multigraph underlying a digraph; edge ids are preserved.
inline UGraph underlying(const DiGraph& d) {
  UGraph g(d.vertex_count());
  for (const Edge& e : d.edges()) g.add_edge(e.u, e.v);
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (!d.alive(v)) g.kill(v);
  return g;
}

// ---------------------------------------------------------------------------
// Degree bookkeeping

struct DegreeProfile {
  std::vector<int> in;   // empty for undirected graphs
  std::vector<int> out;  // empty for undirected graphs
  std::vector<int> total;
  int max_degree = 0;  // Delta
  int sigma = 0;       // max over v of min(d-(v), d+(v)); 0 for undirected graphs
};

template <Graph G>
DegreeProfile degree_profile(const G& g) {
  DegreeProfile p;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  p.total.assign(n, 0);
  if constexpr (G::directed) {
    p.in.assign(n, 0);
    p.out.assign(n, 0);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.live(e)) continue;
    const Edge& ed = g.edge(e);
    ++p.total[static_cast<std::size_t>(ed.u)];
    ++p.total[static_cast<std::size_t>(ed.v)];
    if constexpr (G::directed) {
      ++p.out[static_cast<std::size_t>(ed.u)];
      ++p.in[static_cast<std::size_t>(ed.v)];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    p.max_degree = std::max(p.max_degree, p.total[v]);
    if constexpr (G::directed) p.sigma = std::max(p.sigma, std::min(p.in[v], p.out[v]));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Elementary transformations

/// Replaces every edge by a path of length two through a fresh vertex. The
/// fresh vertex of edge e gets id n + e; edge e becomes edges 2e and 2e+1.
template <Graph G>
G subdivide_all(const G& g) {
  const int n = g.vertex_count();
  G out(n + g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out.add_edge(ed.u, n + e);
    out.add_edge(n + e, ed.v);
  }
  for (VertexId v = 0; v < n; ++v)
    if (!g.alive(v)) out.kill(v);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!g.live(e)) out.kill(n + e);
  return out;
}

/// Masks vertices with no live in-arc or no live out-arc until none remain.
/// Every directed cycle survives untouched.
inline DiGraph trim_non_cyclic(const DiGraph& d) {
  DiGraph out = d;
  const int n = d.vertex_count();
  std::vector<int> in(static_cast<std::size_t>(n), 0), outd(static_cast<std::size_t>(n), 0);
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    if (!d.live(e)) continue;
    ++outd[static_cast<std::size_t>(d.edge(e).u)];
    ++in[static_cast<std::size_t>(d.edge(e).v)];
  }
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (d.alive(v) && (in[static_cast<std::size_t>(v)] == 0 || outd[static_cast<std::size_t>(v)] == 0)) queue.push_back(v);
  while (!queue.empty()) {
    const VertexId v = queue.back();
    queue.pop_back();
    if (!out.alive(v)) continue;
    const auto ends = out.live_ends(v);
    out.kill(v);
    for (const EdgeEnd& ee : ends) {
      const Edge& ed = out.edge(ee.edge);
      if (ed.is_loop()) continue;
      const VertexId w = ed.at(other(ee.end));
      auto& deg = ee.end == End::a ? in[static_cast<std::size_t>(w)] : outd[static_cast<std::size_t>(w)];
      if (--deg == 0) queue.push_back(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural predicates

template <Graph G>
bool is_connected(const G& g) {
  const auto vs = g.live_vertices();
  if (vs.size() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexId> stack{vs.front()};
  seen[static_cast<std::size_t>(vs.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const EdgeEnd& ee : g.incidence(v)) {
      if (!g.live(ee.edge)) continue;
      const VertexId w = g.edge(ee.edge).at(other(ee.end));
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vs.size();
}

/// No self-loops and no parallel edges (for digraphs, opposite arcs are not
/// parallel).
template <Graph G>
bool is_simple(const G& g) {
  std::vector<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.live(e)) continue;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return false;
    seen.emplace_back(ed.u, ed.v);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

struct StructuralPredicates {
  bool is_cubic = false;               // undirected: simple and every live vertex has degree 3
  bool is_3_regular_digraph = false;   // directed: d-(v) = d+(v) = 3 everywhere
  bool is_connected = false;           // underlying graph over live vertices
  bool is_simple = false;
  bool has_self_loop = false;
  bool has_min_edges = false;          // at least two live edges
};

template <Graph G>
StructuralPredicates structural_predicates(const G& g) {
  StructuralPredicates p;
  const auto prof = degree_profile(g);
  const auto vs = g.live_vertices();
  p.is_simple = is_simple(g);
  p.is_connected = is_connected(g);
  p.has_min_edges = g.live_edge_count() >= 2;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.live(e) && g.edge(e).is_loop()) p.has_self_loop = true;
  const bool nonempty = !vs.empty();
  if constexpr (G::directed) {
    p.is_3_regular_digraph = nonempty && std::all_of(vs.begin(), vs.end(), [&](VertexId v) {
      return prof.in[static_cast<std::size_t>(v)] == 3 && prof.out[static_cast<std::size_t>(v)] == 3;
    });
  } else {
    p.is_cubic = nonempty && p.is_simple && std::all_of(vs.begin(), vs.end(), [&](VertexId v) {
      return prof.total[static_cast<std::size_t>(v)] == 3;
    });
  }
  return p;
}

// ---------------------------------------------------------------------------
// Small named graphs used throughout tests and generators.

namespace named {

inline UGraph complete(int n) {
  UGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline UGraph cycle(int n) {
  UGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline UGraph path(int n) {
  UGraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline UGraph complete_bipartite(int p, int q) {
  UGraph g(p + q);
  for (VertexId u = 0; u < p; ++u)
    for (VertexId v = 0; v < q; ++v) g.add_edge(u, p + v);
  return g;
}

/// Hub 0 joined to a rim cycle 1..k.
inline UGraph wheel(int k) {
  UGraph g(k + 1);
  for (VertexId v = 1; v <= k; ++v) g.add_edge(0, v);
  for (VertexId v = 1; v <= k; ++v) g.add_edge(v, v % k + 1);
  return g;
}

/// Two triangles 0-1-2 and 3-4-5 joined by the matching i -- i+3.
inline UGraph prism() {
  UGraph g(6);
  for (VertexId i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(3 + i, 3 + (i + 1) % 3);
    g.add_edge(i, i + 3);
  }
  return g;
}

inline UGraph cube() {
  UGraph g(8);
  for (VertexId v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
  return g;
}

inline UGraph octahedron() {
  UGraph g(6);
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = u + 1; v < 6; ++v)
      if (u % 3 != v % 3) g.add_edge(u, v);
  return g;
}

inline DiGraph directed_cycle(int n) {
  DiGraph d(n);
  for (VertexId v = 0; v < n; ++v) d.add_edge(v, (v + 1) % n);
  return d;
}

/// Each undirected edge becomes two opposite arcs (2e: u->v, 2e+1: v->u).
inline DiGraph doubled(const UGraph& g) {
  DiGraph d(g.vertex_count());
  for (const Edge& e : g.edges()) {
    d.add_edge(e.u, e.v);
    d.add_edge(e.v, e.u);
  }
  return d;
}

}  // namespace named

}  // namespace fbs
