#pragma once

#include <queue>

#include "fbs/planarity.hpp"
#include "fbs/reductions/reduction.hpp"
#include "fbs/solvers/validate.hpp"

namespace fbs {

/// Layout of the connected-FVS construction on n vertices.
struct CfvsLayout {
  int n = 0;

  int path_length() const noexcept { return 8 * n; }
  /// v_j for j in 1..8.
  VertexId vertex_path(VertexId v, int j) const noexcept { return 8 * v + j - 1; }
  /// e^i_{uv} for i in 1..8n; `forward` selects P(uv) with u the smaller endpoint of e.
  VertexId edge_path(EdgeId e, bool forward, int i) const noexcept {
    return 8 * n + e * 16 * n + (forward ? 0 : 8 * n) + i - 1;
  }
};

/// Connected vertex cover with budget k becomes connected feedback vertex
/// set with budget 8k + 8n(k - 1). Every vertex v becomes a path
/// v_1..v_8 and every edge uv two paths P(uv), P(vu) on 8n vertices;
/// for the i-th neighbour x_i of v in rotation order, v_{2i-1} is joined
/// to the first vertex of P(v x_i) and v_{2i} to the last of P(x_i v).
inline ReductionArtifact cfvs_gadget(const UGraph& g, int k) {
  detail::require_compact(g, "cfvs");
  const auto pred = structural_predicates(g);
  if (!pred.is_connected) throw precondition_error("cfvs requires a connected graph");
  if (!pred.has_min_edges) throw precondition_error("cfvs requires at least two edges");
  if (pred.has_self_loop) throw precondition_error("cfvs requires a graph without self-loops");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 4)
      throw precondition_error("cfvs requires max degree <= 4, found " + std::to_string(g.degree(v)) + " at vertex " +
                               std::to_string(v));
  if (k < 1) throw precondition_error("cfvs requires a budget k >= 1");
  auto pr = test_planarity(g);
  if (!pr.planar()) throw precondition_error("cfvs requires a planar graph");

  const int n = g.vertex_count(), m = g.edge_count();
  const CfvsLayout lay{n};
  UGraph out(8 * n + 16 * n * m);
  for (VertexId v = 0; v < n; ++v)
    for (int j = 1; j < 8; ++j) out.add_edge(lay.vertex_path(v, j), lay.vertex_path(v, j + 1));
  for (EdgeId e = 0; e < m; ++e)
    for (bool fwd : {true, false})
      for (int i = 1; i < lay.path_length(); ++i) out.add_edge(lay.edge_path(e, fwd, i), lay.edge_path(e, fwd, i + 1));
  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = pr.embedding->rotation[static_cast<std::size_t>(v)];
    for (std::size_t idx = 0; idx < rot.size(); ++idx) {
      const int i = static_cast<int>(idx) + 1;
      const bool v_is_u = rot[idx].end == End::a;  // P(v x_i) is the forward path iff v is the smaller endpoint
      out.add_edge(lay.vertex_path(v, 2 * i - 1), lay.edge_path(rot[idx].edge, v_is_u, 1));
      out.add_edge(lay.vertex_path(v, 2 * i), lay.edge_path(rot[idx].edge, !v_is_u, lay.path_length()));
    }
  }

  ReductionArtifact r;
  r.name = "cfvs";
  r.from = Problem::cvc;
  r.to = Problem::cfvs;
  r.decision_only = true;
  r.budget = {8 + 8 * n, -8 * n};
  for (VertexId v = 0; v < n; ++v) {
    GadgetEntry ge{GadgetEntry::Source::vertex, v, {}};
    for (int j = 1; j <= 8; ++j) ge.spawned.push_back(lay.vertex_path(v, j));
    r.registry.push_back(std::move(ge));
  }
  for (EdgeId e = 0; e < m; ++e) {
    GadgetEntry ge{GadgetEntry::Source::edge, e, {}};
    for (bool fwd : {true, false})
      for (int i = 1; i <= lay.path_length(); ++i) ge.spawned.push_back(lay.edge_path(e, fwd, i));
    r.registry.push_back(std::move(ge));
  }

  // Lift: pad the cover to k vertices while staying connected, then take
  // P(v) for the cover and P(parent, child) along a BFS tree.
  r.lift = [g, k, lay](std::span<const int> s) {
    const int nn = g.vertex_count();
    std::vector<char> in(static_cast<std::size_t>(nn), 0);
    int size = 0;
    for (int v : s) {
      if (v < 0 || v >= nn) throw graph_error("cfvs: vertex " + std::to_string(v) + " out of range");
      if (!in[static_cast<std::size_t>(v)]) ++size;
      in[static_cast<std::size_t>(v)] = 1;
    }
    while (size < k && size < nn) {
      VertexId add = size == 0 ? 0 : -1;
      for (VertexId v = 0; v < nn && add < 0; ++v)
        if (!in[static_cast<std::size_t>(v)])
          for (const auto& [e, w] : g.out_arcs(v))
            if (in[static_cast<std::size_t>(w)]) {
              add = v;
              break;
            }
      if (add < 0) break;
      in[static_cast<std::size_t>(add)] = 1;
      ++size;
    }
    std::vector<int> res;
    std::vector<char> seen(static_cast<std::size_t>(nn), 0);
    for (VertexId root = 0; root < nn; ++root) {
      if (!in[static_cast<std::size_t>(root)] || seen[static_cast<std::size_t>(root)]) continue;
      std::queue<VertexId> q;
      q.push(root);
      seen[static_cast<std::size_t>(root)] = 1;
      while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        for (int j = 1; j <= 8; ++j) res.push_back(lay.vertex_path(u, j));
        for (const auto& [e, w] : g.out_arcs(u)) {
          if (!in[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
          const bool fwd = g.edge(e).u == u;
          for (int i = 1; i <= lay.path_length(); ++i) res.push_back(lay.edge_path(e, fwd, i));
        }
      }
    }
    return detail::sorted_unique(std::move(res));
  };

  // Project: shrink to an inclusion-minimal connected feedback vertex set,
  // then keep the vertices whose own path is touched.
  r.project = [out, n](std::span<const int> s) {
    std::vector<int> cur = detail::sorted_unique({s.begin(), s.end()});
    detail::check_ids(out, cur, false);
    if (validate(out, Problem::cfvs, std::span<const int>(cur)).feasible) {
      for (std::size_t i = cur.size(); i-- > 0;) {
        std::vector<int> trial = cur;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (validate(out, Problem::cfvs, std::span<const int>(trial)).feasible) cur = std::move(trial);
      }
    }
    std::vector<int> res;
    for (int x : cur)
      if (x < 8 * n) res.push_back(x / 8);
    return detail::sorted_unique(std::move(res));
  };
  r.output = std::move(out);
  return r;
}

}  // namespace fbs
