#pragma once

#include "fbs/reductions/reduction.hpp"

namespace fbs {

enum class DoubleMode { arcs, parallel_edges, subdivided };

inline const char* to_string(DoubleMode m) {
  switch (m) {
    case DoubleMode::arcs: return "arcs";
    case DoubleMode::parallel_edges: return "parallel_edges";
    case DoubleMode::subdivided: return "subdivided";
  }
  return "?";
}

/// Vertex cover of g becomes feedback vertex set of the doubled graph.
/// arcs: edge e gives arcs 2e (u->v) and 2e+1 (v->u).
/// parallel_edges: edge e gives parallel edges 2e and 2e+1.
/// subdivided: edge e is kept and also joined through a new vertex n+e.
inline ReductionArtifact double_edges(const UGraph& g, DoubleMode mode) {
  const int n = g.vertex_count();
  ReductionArtifact r;
  r.name = std::string("double/") + to_string(mode);
  r.from = Problem::vc;
  r.to = Problem::fvs;

  auto copy_mask = [&](auto& h) {
    for (VertexId v = 0; v < n; ++v)
      if (!g.alive(v)) h.kill(v);
  };
  if (mode == DoubleMode::arcs) {
    DiGraph d(n);
    for (const Edge& e : g.edges()) {
      d.add_edge(e.u, e.v);
      d.add_edge(e.v, e.u);
    }
    copy_mask(d);
    r.output = std::move(d);
  } else if (mode == DoubleMode::parallel_edges) {
    UGraph h(n);
    for (const Edge& e : g.edges()) {
      h.add_edge(e.u, e.v);
      h.add_edge(e.u, e.v);
    }
    copy_mask(h);
    r.output = std::move(h);
  } else {
    UGraph h(n + g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      h.add_edge(ed.u, ed.v);
      h.add_edge(ed.u, n + e);
      h.add_edge(n + e, ed.v);
      if (!g.live(e)) h.kill(n + e);
    }
    copy_mask(h);
    r.output = std::move(h);
  }

  for (VertexId v = 0; v < n; ++v) r.registry.push_back({GadgetEntry::Source::vertex, v, {v}});
  if (mode == DoubleMode::subdivided)
    for (EdgeId e = 0; e < g.edge_count(); ++e) r.registry.push_back({GadgetEntry::Source::edge, e, {n + e}});

  r.lift = [n](std::span<const int> s) {
    for (int v : s)
      if (v < 0 || v >= n) throw graph_error("double: vertex " + std::to_string(v) + " out of range");
    return detail::sorted_unique({s.begin(), s.end()});
  };
  std::vector<VertexId> smaller;
  for (const Edge& e : g.edges()) smaller.push_back(e.u);
  const int total = r.output_vertex_count();
  r.project = [n, total, smaller](std::span<const int> s) {
    std::vector<int> out;
    for (int v : s) {
      if (v < 0 || v >= total) throw graph_error("double: vertex " + std::to_string(v) + " out of range");
      out.push_back(v < n ? v : smaller[static_cast<std::size_t>(v - n)]);
    }
    return detail::sorted_unique(std::move(out));
  };
  return r;
}

}  // namespace fbs
