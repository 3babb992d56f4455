#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "fbs/graph.hpp"

namespace fbs {

/// Seeded generator with draws defined by modular reduction only, so the
/// same seed yields the same instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }
  /// True with probability num / den.
  bool chance(int num, int den) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(den)) < num; }
  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

namespace gen {

/// G(n, p) digraph with p = num/den per ordered pair of distinct vertices.
inline DiGraph random_digraph(int n, int num, int den, Rng& rng) {
  DiGraph d(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && rng.chance(num, den)) d.add_edge(u, v);
  return d;
}

inline UGraph random_graph(int n, int num, int den, Rng& rng) {
  UGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) g.add_edge(u, v);
  return g;
}

/// Digraph with total degree at most two at every vertex; loops and
/// opposite arc pairs may occur.
inline DiGraph random_deg2_digraph(int n, Rng& rng) {
  DiGraph d(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  const int attempts = 2 * n;
  for (int i = 0; i < attempts; ++i) {
    const int u = rng.uniform(0, n - 1), v = rng.uniform(0, n - 1);
    const int need_u = u == v ? 2 : 1;
    if (deg[static_cast<std::size_t>(u)] + need_u > 2 || (u != v && deg[static_cast<std::size_t>(v)] + 1 > 2)) continue;
    if (u == v && !rng.chance(1, 8)) continue;
    d.add_edge(u, v);
    deg[static_cast<std::size_t>(u)] += need_u;
    if (u != v) ++deg[static_cast<std::size_t>(v)];
  }
  return d;
}

/// Random maximal planar graph by repeated face stellation, followed by
/// deletion of each edge with probability num/den.
inline UGraph random_planar(int n, int num, int den, Rng& rng) {
  if (n < 3) return named::path(std::max(n, 0));
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
  for (int v = 3; v < n; ++v) {
    const auto f = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(faces.size()) - 1));
    const auto [a, b, c] = faces[f];
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
    edges.push_back({a, v});
    edges.push_back({b, v});
    edges.push_back({c, v});
  }
  UGraph g(n);
  for (const auto& [u, v] : edges)
    if (!rng.chance(num, den)) g.add_edge(u, v);
  return g;
}

/// Some labelling of a graph, used for isomorphism dedupe of small graphs.
struct Adjacency {
  int n = 0;
  std::vector<std::uint32_t> rows;  // bit j of rows[i] = edge ij

  static Adjacency of(const UGraph& g) {
    Adjacency a;
    a.n = g.vertex_count();
    a.rows.assign(static_cast<std::size_t>(a.n), 0);
    for (const Edge& e : g.edges()) {
      a.rows[static_cast<std::size_t>(e.u)] |= 1U << e.v;
      a.rows[static_cast<std::size_t>(e.v)] |= 1U << e.u;
    }
    return a;
  }
};

namespace detail {

// Per-vertex invariant: degree plus sorted neighbour degrees plus triangle count.
inline std::vector<std::uint64_t> vertex_invariants(const Adjacency& a) {
  std::vector<std::uint64_t> inv(static_cast<std::size_t>(a.n));
  for (int v = 0; v < a.n; ++v) {
    const std::uint32_t r = a.rows[static_cast<std::size_t>(v)];
    std::vector<int> nd;
    int tri = 0;
    for (int w = 0; w < a.n; ++w)
      if ((r >> w) & 1U) {
        nd.push_back(std::popcount(a.rows[static_cast<std::size_t>(w)]));
        tri += std::popcount(a.rows[static_cast<std::size_t>(w)] & r);
      }
    std::sort(nd.begin(), nd.end());
    std::uint64_t h = static_cast<std::uint64_t>(std::popcount(r));
    for (int x : nd) h = h * 31 + static_cast<std::uint64_t>(x);
    inv[static_cast<std::size_t>(v)] = h * 131 + static_cast<std::uint64_t>(tri);
  }
  return inv;
}

inline bool extend_iso(const Adjacency& a, const Adjacency& b, const std::vector<std::uint64_t>& ia,
                       const std::vector<std::uint64_t>& ib, std::vector<int>& map, std::vector<char>& used, int v) {
  if (v == a.n) return true;
  for (int w = 0; w < b.n; ++w) {
    if (used[static_cast<std::size_t>(w)] || ia[static_cast<std::size_t>(v)] != ib[static_cast<std::size_t>(w)]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      const bool ea = (a.rows[static_cast<std::size_t>(v)] >> u) & 1U;
      const bool eb = (b.rows[static_cast<std::size_t>(w)] >> map[static_cast<std::size_t>(u)]) & 1U;
      ok = ea == eb;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = 1;
    if (extend_iso(a, b, ia, ib, map, used, v + 1)) return true;
    used[static_cast<std::size_t>(w)] = 0;
  }
  return false;
}

}  // namespace detail

/// Isomorphism of simple graphs on at most 32 vertices.
inline bool isomorphic(const UGraph& g, const UGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const auto a = Adjacency::of(g), b = Adjacency::of(h);
  auto ia = detail::vertex_invariants(a), ib = detail::vertex_invariants(b);
  auto sa = ia, sb = ib;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(static_cast<std::size_t>(a.n), -1);
  std::vector<char> used(static_cast<std::size_t>(a.n), 0);
  return detail::extend_iso(a, b, ia, ib, map, used, 0);
}

/// Keeps the first representative of each isomorphism class.
class IsoDedupe {
 public:
  bool insert(const UGraph& g) {
    auto inv = detail::vertex_invariants(Adjacency::of(g));
    std::sort(inv.begin(), inv.end());
    auto& bucket = buckets_[inv];
    for (const UGraph& h : bucket)
      if (isomorphic(g, h)) return false;
    bucket.push_back(g);
    return true;
  }

 private:
  std::map<std::vector<std::uint64_t>, std::vector<UGraph>> buckets_;
};

namespace detail {

inline void cubic_fill(int n, std::vector<int>& deg, std::vector<std::uint32_t>& adj,
                       std::vector<std::pair<int, int>>& edges, std::vector<UGraph>& out, IsoDedupe& seen) {
  int v = 0;
  while (v < n && deg[static_cast<std::size_t>(v)] == 3) ++v;
  if (v == n) {
    UGraph g(n);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    if (is_connected(g) && seen.insert(g)) out.push_back(std::move(g));
    return;
  }
  // Neighbours above v are added in increasing order.
  const std::uint32_t row = adj[static_cast<std::size_t>(v)];
  const int start = std::max(v + 1, row ? 32 - std::countl_zero(row) : 0);
  bool fresh_tried = false;
  for (int w = start; w < n; ++w) {
    if (deg[static_cast<std::size_t>(w)] == 3 || ((adj[static_cast<std::size_t>(v)] >> w) & 1U)) continue;
    if (deg[static_cast<std::size_t>(w)] == 0) {
      // Untouched vertices are interchangeable.
      if (fresh_tried) continue;
      fresh_tried = true;
    }
    ++deg[static_cast<std::size_t>(v)];
    ++deg[static_cast<std::size_t>(w)];
    adj[static_cast<std::size_t>(v)] |= 1U << w;
    adj[static_cast<std::size_t>(w)] |= 1U << v;
    edges.emplace_back(v, w);
    cubic_fill(n, deg, adj, edges, out, seen);
    edges.pop_back();
    adj[static_cast<std::size_t>(v)] &= ~(1U << w);
    adj[static_cast<std::size_t>(w)] &= ~(1U << v);
    --deg[static_cast<std::size_t>(v)];
    --deg[static_cast<std::size_t>(w)];
  }
}

}  // namespace detail

/// All connected simple cubic graphs on n vertices, one per isomorphism class.
inline std::vector<UGraph> cubic_catalog(int n) {
  std::vector<UGraph> out;
  if (n < 4 || n % 2 != 0 || n > 16) return out;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> edges;
  IsoDedupe seen;
  detail::cubic_fill(n, deg, adj, edges, out, seen);
  return out;
}

/// All simple graphs on n <= 7 vertices up to isomorphism.
inline std::vector<UGraph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<UGraph> out;
  IsoDedupe seen;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    UGraph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    if (seen.insert(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gen

}  // namespace fbs
