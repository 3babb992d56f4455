#pragma once

#include <array>
#include <map>

#include "fbs/planarity.hpp"
#include "fbs/reductions/reduction.hpp"

namespace fbs {

namespace detail {

/// One replacement of vertex `x` by a degree-reducing gadget. Vertex
/// roles index into `vs`.
struct SpeckGadget {
  enum Role { v1, v2, v3, v4, v5, va, vb, vc, e1, e2 };
  VertexId x = -1;
  bool subdivided = false;  // type (b): v3 sits between v2 and v4
  std::array<VertexId, 10> vs{};
};

/// Replaces x, whose incident ends are taken in rotation order `rot`.
/// Ends are dealt out as 1 to v1, floor((d-2)/2) to v2, ceil((d-2)/2)
/// to v4, 1 to v5; type (b) deals one end to each of v1..v5.
inline UGraph insert_speck_gadget(const UGraph& g, const std::vector<EdgeEnd>& rot, SpeckGadget& gad) {
  using R = SpeckGadget;
  const int d = static_cast<int>(rot.size());
  UGraph h = g;
  for (int i = 0; i < 10; ++i)
    gad.vs[static_cast<std::size_t>(i)] = (i == R::v3 && !gad.subdivided) ? -1 : h.add_vertex();
  auto at = [&](int role) { return gad.vs[static_cast<std::size_t>(role)]; };
  const std::pair<int, int> internal[] = {{R::v1, R::v2}, {R::v2, R::va}, {R::va, R::v1}, {R::va, R::vb},
                                          {R::va, R::e1}, {R::e1, R::vb}, {R::vb, R::vc}, {R::vc, R::e2},
                                          {R::e2, R::vb}, {R::vc, R::v5}, {R::v5, R::v4}, {R::v4, R::vc}};
  for (const auto& [p, q] : internal) h.add_edge(at(p), at(q));
  if (gad.subdivided) {
    h.add_edge(at(R::v2), at(R::v3));
    h.add_edge(at(R::v3), at(R::v4));
  } else {
    h.add_edge(at(R::v2), at(R::v4));
  }

  std::vector<int> target(static_cast<std::size_t>(d));
  if (gad.subdivided) {
    const int order[] = {R::v1, R::v2, R::v3, R::v4, R::v5};
    for (int i = 0; i < d; ++i) target[static_cast<std::size_t>(i)] = at(order[i]);
  } else {
    const int lo = (d - 2) / 2;
    for (int i = 0; i < d; ++i) {
      int role = R::v5;
      if (i == 0) role = R::v1;
      else if (i <= lo) role = R::v2;
      else if (i < d - 1) role = R::v4;
      target[static_cast<std::size_t>(i)] = at(role);
    }
  }

  // Position of each end of x in the rotation.
  std::map<std::pair<EdgeId, int>, int> pos;
  for (int i = 0; i < d; ++i) pos[{rot[static_cast<std::size_t>(i)].edge, static_cast<int>(rot[static_cast<std::size_t>(i)].end)}] = i;
  auto place = [&](EdgeId e, End end) { return target[static_cast<std::size_t>(pos.at({e, static_cast<int>(end)}))]; };

  std::vector<EdgeId> done;
  for (const EdgeEnd& ee : rot) {
    const EdgeId e = ee.edge;
    if (std::find(done.begin(), done.end(), e) != done.end()) continue;
    done.push_back(e);
    const Edge& ed = g.edge(e);
    const VertexId a = ed.u == gad.x ? place(e, End::a) : ed.u;
    const VertexId b = ed.v == gad.x ? place(e, End::b) : ed.v;
    h.add_edge(a, b);
  }
  h.kill(gad.x);
  return h;
}

}  // namespace detail

/// Reduces a planar graph to maximum degree four. Vertices of degree at
/// least six are replaced (smallest id first, repeatedly) by the wide
/// gadget; then every degree-5 vertex by the subdivided gadget. Each
/// gadget forces two extra solution vertices.
inline ReductionArtifact speckenmeyer_reduce(const UGraph& g, const Embedding& emb) {
  detail::require_compact(g, "speckenmeyer");
  if (const auto chk = check_embedding(g, emb); !chk.ok) throw precondition_error("speckenmeyer: invalid embedding: " + chk.reason);
  const int n = g.vertex_count();

  UGraph cur = g;
  Embedding rot = emb;
  std::vector<detail::SpeckGadget> gadgets;
  auto pick = [&](bool wide) {
    for (VertexId v = 0; v < cur.vertex_count(); ++v) {
      if (!cur.alive(v)) continue;
      const int dv = cur.degree(v);
      if (wide ? dv >= 6 : dv == 5) return v;
    }
    return -1;
  };
  for (bool wide : {true, false}) {
    for (VertexId x = pick(wide); x >= 0; x = pick(wide)) {
      detail::SpeckGadget gad;
      gad.x = x;
      gad.subdivided = !wide;
      std::vector<EdgeEnd> ends;
      for (const EdgeEnd& ee : rot.rotation[static_cast<std::size_t>(x)])
        if (cur.live(ee.edge)) ends.push_back(ee);
      UGraph next = detail::insert_speck_gadget(cur, ends, gad);
      auto pr = test_planarity(next);
      if (!pr.planar()) throw std::logic_error("speckenmeyer: gadget insertion lost planarity at vertex " + std::to_string(x));
      cur = std::move(next);
      rot = std::move(*pr.embedding);
      gadgets.push_back(gad);
    }
  }

  const auto c = compact(cur);
  ReductionArtifact r;
  r.name = "speckenmeyer";
  r.from = Problem::fvs;
  r.to = Problem::fvs;
  r.output = c.graph;
  if (auto pr = test_planarity(c.graph); pr.planar()) r.embedding = std::move(pr.embedding);
  r.budget = {1, 2 * static_cast<int>(gadgets.size())};

  // Trace every working vertex back to its original owner.
  std::vector<VertexId> owner(static_cast<std::size_t>(cur.vertex_count()), -1);
  for (VertexId v = 0; v < n; ++v) owner[static_cast<std::size_t>(v)] = v;
  for (const auto& gad : gadgets)
    for (VertexId w : gad.vs)
      if (w >= 0) owner[static_cast<std::size_t>(w)] = owner[static_cast<std::size_t>(gad.x)];
  for (VertexId v = 0; v < n; ++v) r.registry.push_back({GadgetEntry::Source::vertex, v, {}});
  for (VertexId w = 0; w < cur.vertex_count(); ++w)
    if (cur.alive(w))
      r.registry[static_cast<std::size_t>(owner[static_cast<std::size_t>(w)])].spawned.push_back(c.new_id[static_cast<std::size_t>(w)]);

  const int work = cur.vertex_count();
  const auto new_id = c.new_id;
  const auto old_id = c.old_id;
  r.lift = [n, work, gadgets, new_id](std::span<const int> s) {
    std::vector<char> in(static_cast<std::size_t>(work), 0);
    for (int v : s) {
      if (v < 0 || v >= n) throw graph_error("speckenmeyer: vertex " + std::to_string(v) + " out of range");
      in[static_cast<std::size_t>(v)] = 1;
    }
    using R = detail::SpeckGadget;
    for (const auto& gad : gadgets) {
      const auto pick_roles = in[static_cast<std::size_t>(gad.x)] ? std::vector<int>{R::v2, R::v4, R::vb}
                                                                   : std::vector<int>{R::va, R::vc};
      in[static_cast<std::size_t>(gad.x)] = 0;
      for (int role : pick_roles) in[static_cast<std::size_t>(gad.vs[static_cast<std::size_t>(role)])] = 1;
    }
    std::vector<int> out;
    for (int w = 0; w < work; ++w)
      if (in[static_cast<std::size_t>(w)]) out.push_back(new_id[static_cast<std::size_t>(w)]);
    return detail::sorted_unique(std::move(out));
  };
  r.project = [work, gadgets, old_id](std::span<const int> s) {
    std::vector<char> in(static_cast<std::size_t>(work), 0);
    for (int v : s) {
      if (v < 0 || v >= static_cast<int>(old_id.size()))
        throw graph_error("speckenmeyer: vertex " + std::to_string(v) + " out of range");
      in[static_cast<std::size_t>(old_id[static_cast<std::size_t>(v)])] = 1;
    }
    for (auto it = gadgets.rbegin(); it != gadgets.rend(); ++it) {
      int hit = 0;
      for (VertexId w : it->vs)
        if (w >= 0) {
          hit += in[static_cast<std::size_t>(w)];
          in[static_cast<std::size_t>(w)] = 0;
        }
      in[static_cast<std::size_t>(it->x)] = hit >= 3 ? 1 : 0;
    }
    std::vector<int> out;
    for (int w = 0; w < work; ++w)
      if (in[static_cast<std::size_t>(w)]) out.push_back(w);
    return out;
  };
  return r;
}

inline ReductionArtifact speckenmeyer_reduce(const UGraph& g) {
  auto pr = test_planarity(g);
  if (!pr.planar()) throw precondition_error("speckenmeyer requires a planar graph");
  return speckenmeyer_reduce(g, *pr.embedding);
}

}  // namespace fbs
