#pragma once

#include "fbs/reductions/reduction.hpp"

namespace fbs {

/// v becomes v- = 2v and v+ = 2v+1. Arc v is the internal arc v- -> v+;
/// original arc e becomes arc n + e from u+ to w-.
inline ReductionArtifact split_vertices(const DiGraph& d) {
  const int n = d.vertex_count();
  DiGraph s(2 * n);
  for (VertexId v = 0; v < n; ++v) s.add_edge(2 * v, 2 * v + 1);
  for (const Edge& e : d.edges()) s.add_edge(2 * e.u + 1, 2 * e.v);
  for (VertexId v = 0; v < n; ++v)
    if (!d.alive(v)) {
      s.kill(2 * v);
      s.kill(2 * v + 1);
    }

  ReductionArtifact r;
  r.name = "split";
  r.from = Problem::fvs;
  r.to = Problem::fas;
  r.output = std::move(s);
  for (VertexId v = 0; v < n; ++v) r.registry.push_back({GadgetEntry::Source::vertex, v, {2 * v, 2 * v + 1}});
  r.lift = [n](std::span<const int> sol) {
    for (int v : sol)
      if (v < 0 || v >= n) throw graph_error("split: vertex " + std::to_string(v) + " out of range");
    return detail::sorted_unique({sol.begin(), sol.end()});
  };
  std::vector<VertexId> tail;
  for (const Edge& e : d.edges()) tail.push_back(e.u);
  r.project = [n, tail](std::span<const int> arcs) {
    std::vector<int> out;
    for (int a : arcs) {
      if (a < 0 || a >= n + static_cast<int>(tail.size()))
        throw graph_error("split: arc " + std::to_string(a) + " out of range");
      out.push_back(a < n ? a : tail[static_cast<std::size_t>(a - n)]);
    }
    return detail::sorted_unique(std::move(out));
  };
  return r;
}

/// Numbered in- and out-arcs per vertex: in[v][p-1] is the arc from x_p.
struct NeighborOrdering {
  std::vector<std::vector<EdgeId>> in;
  std::vector<std::vector<EdgeId>> out;

  /// Arcs numbered by insertion order.
  static NeighborOrdering insertion_order(const DiGraph& d) {
    NeighborOrdering o;
    o.in.resize(static_cast<std::size_t>(d.vertex_count()));
    o.out.resize(static_cast<std::size_t>(d.vertex_count()));
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
      o.out[static_cast<std::size_t>(d.edge(e).u)].push_back(e);
      o.in[static_cast<std::size_t>(d.edge(e).v)].push_back(e);
    }
    return o;
  }

  void check(const DiGraph& d) const {
    const auto n = static_cast<std::size_t>(d.vertex_count());
    if (in.size() != n || out.size() != n) throw precondition_error("neighbour ordering has wrong vertex count");
    std::vector<int> seen_in(static_cast<std::size_t>(d.edge_count()), 0), seen_out(seen_in);
    for (std::size_t v = 0; v < n; ++v) {
      for (EdgeId e : in[v]) {
        if (e < 0 || e >= d.edge_count() || d.edge(e).v != static_cast<VertexId>(v) || seen_in[static_cast<std::size_t>(e)]++)
          throw precondition_error("neighbour ordering: bad in-arc " + std::to_string(e) + " at vertex " + std::to_string(v));
      }
      for (EdgeId e : out[v]) {
        if (e < 0 || e >= d.edge_count() || d.edge(e).u != static_cast<VertexId>(v) || seen_out[static_cast<std::size_t>(e)]++)
          throw precondition_error("neighbour ordering: bad out-arc " + std::to_string(e) + " at vertex " + std::to_string(v));
      }
    }
    for (EdgeId e = 0; e < d.edge_count(); ++e)
      if (!seen_in[static_cast<std::size_t>(e)] || !seen_out[static_cast<std::size_t>(e)])
        throw precondition_error("neighbour ordering misses arc " + std::to_string(e));
  }
};

/// Each vertex v becomes the directed path v-_1 .. v-_{d-} v+_1 .. v+_{d+};
/// the q-th out-arc of u to the p-th in-arc of w becomes u+_q -> w-_p.
/// Target fvs lifts v to v+_1 (v-_{d-} when d+ = 0); target fas lifts v
/// to the arc v-_{d-} -> v+_1.
inline ReductionArtifact path_split_gadget(const DiGraph& d, const NeighborOrdering& ord, Problem target = Problem::fvs) {
  detail::require_compact(d, "path-split");
  if (target != Problem::fvs && target != Problem::fas) throw precondition_error("path-split targets fvs or fas");
  ord.check(d);
  const int n = d.vertex_count();
  std::vector<int> first(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v) first[static_cast<std::size_t>(v) + 1] = first[static_cast<std::size_t>(v)] + d.degree(v);
  const auto din = [&](VertexId v) { return static_cast<int>(ord.in[static_cast<std::size_t>(v)].size()); };

  DiGraph out(first.back());
  std::vector<EdgeId> lift_arc(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> lift_vertex(static_cast<std::size_t>(n), -1);
  std::vector<VertexId> owner(static_cast<std::size_t>(first.back()), -1);
  ReductionArtifact r;
  for (VertexId v = 0; v < n; ++v) {
    const int f = first[static_cast<std::size_t>(v)], len = d.degree(v);
    GadgetEntry g{GadgetEntry::Source::vertex, v, {}};
    for (int i = 0; i < len; ++i) {
      owner[static_cast<std::size_t>(f + i)] = v;
      g.spawned.push_back(f + i);
    }
    r.registry.push_back(std::move(g));
    const int mid = din(v);  // index of v+_1 inside the path
    for (int i = 0; i + 1 < len; ++i) {
      const EdgeId a = out.add_edge(f + i, f + i + 1);
      if (i + 1 == mid || (lift_arc[static_cast<std::size_t>(v)] < 0 && (mid == 0 || mid == len))) lift_arc[static_cast<std::size_t>(v)] = a;
    }
    if (len > 0) lift_vertex[static_cast<std::size_t>(v)] = f + (mid < len ? mid : mid - 1);
  }
  std::vector<VertexId> slot_out(static_cast<std::size_t>(d.edge_count())), slot_in(slot_out);
  for (VertexId v = 0; v < n; ++v) {
    const auto& in = ord.in[static_cast<std::size_t>(v)];
    const auto& os = ord.out[static_cast<std::size_t>(v)];
    for (std::size_t p = 0; p < in.size(); ++p) slot_in[static_cast<std::size_t>(in[p])] = first[static_cast<std::size_t>(v)] + static_cast<int>(p);
    for (std::size_t q = 0; q < os.size(); ++q)
      slot_out[static_cast<std::size_t>(os[q])] = first[static_cast<std::size_t>(v)] + din(v) + static_cast<int>(q);
  }
  for (EdgeId e = 0; e < d.edge_count(); ++e)
    out.add_edge(slot_out[static_cast<std::size_t>(e)], slot_in[static_cast<std::size_t>(e)]);

  r.name = target == Problem::fvs ? "path-split" : "path-split/fas";
  r.from = Problem::fvs;
  r.to = target;
  r.output = out;
  r.lift = [n, target, lift_arc, lift_vertex](std::span<const int> s) {
    std::vector<int> res;
    for (int v : s) {
      if (v < 0 || v >= n) throw graph_error("path-split: vertex " + std::to_string(v) + " out of range");
      const int x = target == Problem::fvs ? lift_vertex[static_cast<std::size_t>(v)] : lift_arc[static_cast<std::size_t>(v)];
      if (x >= 0) res.push_back(x);
    }
    return detail::sorted_unique(std::move(res));
  };
  r.project = [target, owner, out](std::span<const int> s) {
    std::vector<int> res;
    for (int x : s) {
      if (target == Problem::fvs) {
        if (!out.contains(x)) throw graph_error("path-split: vertex " + std::to_string(x) + " out of range");
        res.push_back(owner[static_cast<std::size_t>(x)]);
      } else {
        if (x < 0 || x >= out.edge_count()) throw graph_error("path-split: arc " + std::to_string(x) + " out of range");
        res.push_back(owner[static_cast<std::size_t>(out.edge(x).u)]);
      }
    }
    return detail::sorted_unique(std::move(res));
  };
  return r;
}

inline ReductionArtifact path_split_gadget(const DiGraph& d, Problem target = Problem::fvs) {
  return path_split_gadget(d, NeighborOrdering::insertion_order(d), target);
}

}  // namespace fbs
