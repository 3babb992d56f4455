#pragma once

#include <array>

#include "fbs/linear_forest.hpp"
#include "fbs/planarity.hpp"
#include "fbs/reductions/reduction.hpp"
#include "fbs/sign_pattern.hpp"

namespace fbs {

/// Doubles a planar cubic graph into a 3-regular digraph whose embedding
/// is irregular at every vertex. Edge e gives arcs 2e (u->v) and 2e+1
/// (v->u); at each end the two arc-ends are inserted as (out, in) when e
/// lies in the first linear forest and as (in, out) otherwise.
inline ReductionArtifact irregular_doubling(const UGraph& g) {
  detail::require_compact(g, "irregular-double");
  if (!structural_predicates(g).is_cubic) throw precondition_error("irregular-double requires a simple cubic graph");
  auto pr = test_planarity(g);
  if (!pr.planar()) throw precondition_error("irregular-double requires a planar graph");
  const LinearForestCover cover = linear_forest_cover(g);

  DiGraph d(g.vertex_count());
  for (const Edge& e : g.edges()) {
    d.add_edge(e.u, e.v);
    d.add_edge(e.v, e.u);
  }
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const EdgeEnd& ee : pr.embedding->rotation[static_cast<std::size_t>(v)]) {
      const EdgeId fwd = 2 * ee.edge, bwd = 2 * ee.edge + 1;  // fwd leaves the smaller endpoint
      const EdgeEnd out_end = ee.end == End::a ? EdgeEnd{fwd, End::a} : EdgeEnd{bwd, End::a};
      const EdgeEnd in_end = ee.end == End::a ? EdgeEnd{bwd, End::b} : EdgeEnd{fwd, End::b};
      const bool f1 = cover.label[static_cast<std::size_t>(ee.edge)] == ForestLabel::f1;
      auto& rot = emb.rotation[static_cast<std::size_t>(v)];
      rot.push_back(f1 ? out_end : in_end);
      rot.push_back(f1 ? in_end : out_end);
    }

  ReductionArtifact r;
  r.name = "irregular-double";
  r.from = Problem::vc;
  r.to = Problem::fvs;
  r.output = std::move(d);
  r.embedding = std::move(emb);
  const int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) r.registry.push_back({GadgetEntry::Source::vertex, v, {v}});
  auto same = [n](std::span<const int> s) {
    for (int v : s)
      if (v < 0 || v >= n) throw graph_error("irregular-double: vertex " + std::to_string(v) + " out of range");
    return detail::sorted_unique({s.begin(), s.end()});
  };
  r.lift = same;
  r.project = same;
  return r;
}

namespace detail {

/// Vertex slots of H(v), in the listed order.
enum HRole { h12m, h12p, h3m, h3p, ham, hap, hb, hb2, hc, hd, hd2, h_count };

inline constexpr std::array<std::pair<HRole, HRole>, 16> h_arcs{{
    {h3m, h3p},  {h12m, ham}, {ham, hap}, {hap, h12p},  // arc and path
    {hb, hc},    {hc, hb2},   {hb2, hb},                 // triangle vb vc v'b
    {hc, hd},    {hd, hd2},   {hd2, hc},                 // triangle vc vd v'd
    {ham, h3p},  {h3p, hb},   {hb, ham},                 // triangle v-a v+3 vb
    {h3m, hap},  {hap, hd},   {hd, h3m},                 // triangle v-3 v+a vd
}};

}  // namespace detail

/// Replaces every vertex of a 3-regular digraph with an irregular
/// embedding by the 11-vertex gadget H(v) at ids 11v..11v+10. In the
/// pattern (-,-,+,+,-,+) read as x1 x2 y1 y2 x3 y3, arcs from x1, x2 enter
/// v-12, arcs to y1, y2 leave v+12, x3 enters v-3 and y3 leaves v+3. The
/// opposite pattern uses the same slots with every gadget arc reversed.
inline ReductionArtifact planar_dfvs_gadget(const DiGraph& d, const Embedding& emb) {
  using namespace detail;
  detail::require_compact(d, "planar-dfvs");
  if (!structural_predicates(d).is_3_regular_digraph) throw precondition_error("planar-dfvs requires a 3-regular digraph");
  if (const auto chk = check_embedding(d, emb); !chk.ok) throw precondition_error("planar-dfvs: invalid embedding: " + chk.reason);
  const int n = d.vertex_count();

  // slot[end] = gadget vertex receiving that arc-end; arcs are indexed by (edge, end).
  std::vector<std::array<VertexId, 2>> slot(static_cast<std::size_t>(d.edge_count()), {-1, -1});
  std::vector<char> mirrored(static_cast<std::size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
    const SignPattern p = sign_pattern(d, emb, v);
    int k = rotation_offset(p, irregular_in_pair());
    if (k < 0) {
      k = rotation_offset(p, irregular_out_pair());
      mirrored[static_cast<std::size_t>(v)] = 1;
    }
    if (k < 0)
      throw precondition_error("planar-dfvs: vertex " + std::to_string(v) + " has pattern " + to_string(p) +
                               ", which is not irregular");
    constexpr std::array<HRole, 6> attach{h12m, h12m, h12p, h12p, h3m, h3p};
    for (std::size_t i = 0; i < 6; ++i) {
      const EdgeEnd ee = rot[(static_cast<std::size_t>(k) + i) % 6];
      slot[static_cast<std::size_t>(ee.edge)][static_cast<std::size_t>(ee.end)] = 11 * v + attach[i];
    }
  }

  DiGraph out(11 * n);
  for (VertexId v = 0; v < n; ++v)
    for (const auto& [p, q] : h_arcs) {
      if (mirrored[static_cast<std::size_t>(v)]) out.add_edge(11 * v + q, 11 * v + p);
      else out.add_edge(11 * v + p, 11 * v + q);
    }
  for (EdgeId e = 0; e < d.edge_count(); ++e) out.add_edge(slot[static_cast<std::size_t>(e)][0], slot[static_cast<std::size_t>(e)][1]);

  ReductionArtifact r;
  r.name = "planar-dfvs";
  r.from = Problem::fvs;
  r.to = Problem::fvs;
  r.budget = {1, 2 * n};
  if (auto pr = digraph_embedding(out); pr.planar()) r.embedding = std::move(pr.embedding);
  r.output = std::move(out);
  for (VertexId v = 0; v < n; ++v) {
    GadgetEntry g{GadgetEntry::Source::vertex, v, {}};
    for (int j = 0; j < h_count; ++j) g.spawned.push_back(11 * v + j);
    r.registry.push_back(std::move(g));
  }
  r.lift = [n](std::span<const int> s) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : s) {
      if (v < 0 || v >= n) throw graph_error("planar-dfvs: vertex " + std::to_string(v) + " out of range");
      in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> res;
    for (VertexId v = 0; v < n; ++v) {
      const auto roles = in[static_cast<std::size_t>(v)] ? std::vector<int>{ham, hc, h3m} : std::vector<int>{hb, hd};
      for (int j : roles) res.push_back(11 * v + j);
    }
    return detail::sorted_unique(std::move(res));
  };
  r.project = [n](std::span<const int> s) {
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (int x : detail::sorted_unique({s.begin(), s.end()})) {
      if (x < 0 || x >= 11 * n) throw graph_error("planar-dfvs: vertex " + std::to_string(x) + " out of range");
      ++hits[static_cast<std::size_t>(x / 11)];
    }
    std::vector<int> res;
    for (VertexId v = 0; v < n; ++v)
      if (hits[static_cast<std::size_t>(v)] >= 3) res.push_back(v);
    return res;
  };
  return r;
}

}  // namespace fbs
