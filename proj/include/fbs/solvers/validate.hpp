#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fbs/graph.hpp"
#include "fbs/solvers/cycles.hpp"
#include "fbs/solvers/problem.hpp"

namespace fbs {

/// Outcome of a feasibility check. On failure exactly one witness is set.
struct Validation {
  bool feasible = false;
  std::optional<Cycle> cycle;                                   // surviving cycle
  std::optional<EdgeId> uncovered;                              // edge with no endpoint chosen
  std::optional<std::pair<VertexId, VertexId>> disconnected;    // chosen vertices in different components

  std::string describe() const {
    if (feasible) return "feasible";
    if (cycle) {
      std::string s = "cycle survives:";
      for (VertexId v : cycle->vertices) s += " " + std::to_string(v);
      return s;
    }
    if (uncovered) return "edge " + std::to_string(*uncovered) + " is not covered";
    if (disconnected)
      return "vertices " + std::to_string(disconnected->first) + " and " + std::to_string(disconnected->second) +
             " are not connected inside the solution";
    return "infeasible";
  }
};

namespace detail {

template <Graph G>
void check_ids(const G& g, std::span<const int> s, bool arcs) {
  const int limit = arcs ? g.edge_count() : g.vertex_count();
  for (int x : s)
    if (x < 0 || x >= limit)
      throw graph_error(std::string(arcs ? "arc" : "vertex") + " id " + std::to_string(x) + " outside the graph");
}

/// First pair (min, other) of chosen vertices not connected in g[chosen].
inline std::optional<std::pair<VertexId, VertexId>> induced_disconnection(const UGraph& g, std::span<const int> chosen) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexId> live;
  for (int v : chosen)
    if (g.alive(v) && !in[static_cast<std::size_t>(v)]) {
      in[static_cast<std::size_t>(v)] = 1;
      live.push_back(v);
    }
  if (live.size() <= 1) return std::nullopt;
  std::sort(live.begin(), live.end());
  std::vector<char> seen(in.size(), 0);
  std::vector<VertexId> stack{live.front()};
  seen[static_cast<std::size_t>(live.front())] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& [e, w] : g.out_arcs(v))
      if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  for (VertexId v : live)
    if (!seen[static_cast<std::size_t>(v)]) return std::make_pair(live.front(), v);
  return std::nullopt;
}

/// Linear-time acyclicity test; witnesses are left to shortest_cycle.
inline bool acyclic(const UGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& px = parent[static_cast<std::size_t>(x)];
      px = parent[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.live(e)) continue;
    const int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

inline bool acyclic(const DiGraph& d) {
  std::vector<int> indeg(static_cast<std::size_t>(d.vertex_count()), 0);
  for (EdgeId e = 0; e < d.edge_count(); ++e)
    if (d.live(e)) ++indeg[static_cast<std::size_t>(d.edge(e).v)];
  std::vector<VertexId> ready;
  int live = 0;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (!d.alive(v)) continue;
    ++live;
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int done = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++done;
    for (const auto& [e, w] : d.out_arcs(v))
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  return done == live;
}

}  // namespace detail

/// Feasibility of a vertex set for fvs/vc/cvc/cfvs, or of an arc set for fas.
template <Graph G>
Validation validate(const G& g, Problem p, std::span<const int> s) {
  if (p == Problem::fas && !G::directed) throw kind_error("fas requires a directed graph");
  if (is_connected_variant(p) && G::directed) throw kind_error("connected variants require an undirected graph");
  detail::check_ids(g, s, selects_arcs(p));
  Validation r;
  if (p == Problem::fas) {
    if constexpr (G::directed) {
      // Remove arcs by rebuilding without them.
      std::vector<char> cut(static_cast<std::size_t>(g.edge_count()), 0);
      for (int a : s) cut[static_cast<std::size_t>(a)] = 1;
      DiGraph rest(g.vertex_count());
      std::vector<EdgeId> orig;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (cut[static_cast<std::size_t>(e)]) continue;
        rest.add_edge(g.edge(e).u, g.edge(e).v);
        orig.push_back(e);
      }
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!g.alive(v)) rest.kill(v);
      if (!detail::acyclic(rest)) {
        auto c = shortest_cycle(rest);
        for (EdgeId& e : c->edges) e = orig[static_cast<std::size_t>(e)];
        r.cycle = std::move(c);
        return r;
      }
    }
    r.feasible = true;
    return r;
  }

  if (p == Problem::vc || p == Problem::cvc) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) in[static_cast<std::size_t>(v)] = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!g.live(e)) continue;
      if (!in[static_cast<std::size_t>(g.edge(e).u)] && !in[static_cast<std::size_t>(g.edge(e).v)]) {
        r.uncovered = e;
        return r;
      }
    }
  } else {
    std::vector<VertexId> vs(s.begin(), s.end());
    const G rest = g.without(vs);
    if (!detail::acyclic(rest)) {
      r.cycle = shortest_cycle(rest);
      return r;
    }
  }
  if constexpr (!G::directed) {
    if (is_connected_variant(p)) {
      if (auto d = detail::induced_disconnection(g, s)) {
        r.disconnected = d;
        return r;
      }
    }
  }
  r.feasible = true;
  return r;
}

inline Validation validate(const Instance& inst, std::span<const int> s) {
  check_kind(inst);
  return std::visit([&](const auto& g) { return validate(g, inst.problem, s); }, inst.graph);
}

}  // namespace fbs
