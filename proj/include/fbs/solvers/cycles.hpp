#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "fbs/graph.hpp"

namespace fbs {

/// Closed walk v0 e0 v1 ... v_{k-1} e_{k-1} v0 with distinct v_i.
/// `vertices` repeats the first vertex at the end.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const noexcept { return static_cast<int>(edges.size()); }
};

/// True iff the cycle is closed, simple, and uses live incident edges of g
/// (respecting direction for digraphs).
template <Graph G>
bool is_valid_cycle(const G& g, const Cycle& c) {
  if (c.edges.empty() || c.vertices.size() != c.edges.size() + 1) return false;
  if (c.vertices.front() != c.vertices.back()) return false;
  std::vector<VertexId> inner(c.vertices.begin(), c.vertices.end() - 1);
  std::sort(inner.begin(), inner.end());
  if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) return false;
  std::vector<EdgeId> es = c.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const EdgeId e = c.edges[i];
    if (e < 0 || e >= g.edge_count() || !g.live(e)) return false;
    const Edge& ed = g.edge(e);
    const VertexId x = c.vertices[i], y = c.vertices[i + 1];
    if constexpr (G::directed) {
      if (ed.u != x || ed.v != y) return false;
    } else {
      if (!((ed.u == x && ed.v == y) || (ed.u == y && ed.v == x))) return false;
    }
  }
  return true;
}

/// A minimum-length cycle: directed cycle for digraphs, cycle of the
/// multigraph for undirected graphs (self-loops have length 1, parallel
/// edges length 2). None iff the graph is acyclic / a forest.
inline std::optional<Cycle> shortest_cycle(const DiGraph& d) {
  const int n = d.vertex_count();
  for (EdgeId e = 0; e < d.edge_count(); ++e)
    if (d.live(e) && d.edge(e).is_loop()) return Cycle{{d.edge(e).u, d.edge(e).u}, {e}};
  std::optional<Cycle> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<EdgeId> via(static_cast<std::size_t>(n));
  for (VertexId s = 0; s < n; ++s) {
    if (!d.alive(s)) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<VertexId> q{s};
    EdgeId closing = -1;
    while (!q.empty() && closing < 0) {
      const VertexId x = q.front();
      q.pop_front();
      if (best && dist[static_cast<std::size_t>(x)] + 1 >= best->length()) break;
      for (const auto& [e, y] : d.out_arcs(x)) {
        if (y == s) {
          closing = e;
          break;
        }
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          via[static_cast<std::size_t>(y)] = e;
          q.push_back(y);
        }
      }
    }
    if (closing < 0) continue;
    Cycle c;
    VertexId x = d.edge(closing).u;
    c.edges.push_back(closing);
    c.vertices.push_back(s);
    while (x != s) {
      c.vertices.push_back(x);
      const EdgeId e = via[static_cast<std::size_t>(x)];
      c.edges.push_back(e);
      x = d.edge(e).u;
    }
    c.vertices.push_back(s);
    std::reverse(c.vertices.begin(), c.vertices.end());
    std::reverse(c.edges.begin(), c.edges.end());
    if (!best || c.length() < best->length()) best = std::move(c);
  }
  return best;
}

inline std::optional<Cycle> shortest_cycle(const UGraph& g) {
  const int n = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.live(e) && g.edge(e).is_loop()) return Cycle{{g.edge(e).u, g.edge(e).u}, {e}};
  {
    std::vector<std::pair<std::pair<VertexId, VertexId>, EdgeId>> pairs;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.live(e)) pairs.push_back({{g.edge(e).u, g.edge(e).v}, e});
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
      if (pairs[i].first == pairs[i + 1].first) {
        const auto [u, v] = pairs[i].first;
        return Cycle{{u, v, u}, {pairs[i].second, pairs[i + 1].second}};
      }
  }
  std::optional<Cycle> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<EdgeId> via(static_cast<std::size_t>(n));
  std::vector<VertexId> par(static_cast<std::size_t>(n));
  for (VertexId s = 0; s < n; ++s) {
    if (!g.alive(s)) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    par[static_cast<std::size_t>(s)] = -1;
    via[static_cast<std::size_t>(s)] = -1;
    std::deque<VertexId> q{s};
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop_front();
      for (const auto& [e, y] : g.out_arcs(x)) {
        if (e == via[static_cast<std::size_t>(x)]) continue;
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          par[static_cast<std::size_t>(y)] = x;
          via[static_cast<std::size_t>(y)] = e;
          q.push_back(y);
          continue;
        }
        // Non-tree edge x-y closes a cycle through their lowest common ancestor.
        const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
        if (best && len >= best->length()) continue;
        std::vector<VertexId> px{x}, py{y};
        std::vector<EdgeId> ex, ey;
        VertexId a = x, b = y;
        while (dist[static_cast<std::size_t>(a)] > dist[static_cast<std::size_t>(b)]) {
          ex.push_back(via[static_cast<std::size_t>(a)]);
          a = par[static_cast<std::size_t>(a)];
          px.push_back(a);
        }
        while (dist[static_cast<std::size_t>(b)] > dist[static_cast<std::size_t>(a)]) {
          ey.push_back(via[static_cast<std::size_t>(b)]);
          b = par[static_cast<std::size_t>(b)];
          py.push_back(b);
        }
        while (a != b) {
          ex.push_back(via[static_cast<std::size_t>(a)]);
          a = par[static_cast<std::size_t>(a)];
          px.push_back(a);
          ey.push_back(via[static_cast<std::size_t>(b)]);
          b = par[static_cast<std::size_t>(b)];
          py.push_back(b);
        }
        // lca -> ... -> x -- y -> ... -> lca
        Cycle c;
        c.vertices.assign(px.rbegin(), px.rend());
        c.edges.assign(ex.rbegin(), ex.rend());
        c.edges.push_back(e);
        for (std::size_t i = 0; i < py.size(); ++i) c.vertices.push_back(py[i]);
        for (EdgeId f : ey) c.edges.push_back(f);
        if (!best || c.length() < best->length()) best = std::move(c);
      }
    }
  }
  return best;
}

}  // namespace fbs
