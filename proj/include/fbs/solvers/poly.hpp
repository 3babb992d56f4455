#pragma once

#include "fbs/planarity.hpp"
#include "fbs/reductions/splitting.hpp"
#include "fbs/solvers/exact.hpp"

namespace fbs {

/// Feedback vertex or arc set on a digraph of maximum degree two. After
/// trimming, what is left is a union of disjoint directed cycles, and one
/// element per cycle is both necessary and sufficient.
inline SolveResult solve_deg2(const DiGraph& d, Problem p = Problem::fvs) {
  if (p != Problem::fvs && p != Problem::fas) throw precondition_error("solve_deg2 handles fvs and fas only");
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    if (d.degree(v) > 2)
      throw precondition_error("solve_deg2 requires max degree <= 2, found " + std::to_string(d.degree(v)) + " at vertex " +
                               std::to_string(v));
  const DiGraph core = trim_non_cyclic(d);
  SolveResult res;
  std::vector<char> seen(static_cast<std::size_t>(d.vertex_count()), 0);
  for (VertexId s = 0; s < core.vertex_count(); ++s) {
    if (!core.alive(s) || seen[static_cast<std::size_t>(s)]) continue;
    // Walk the cycle through s; every live vertex has exactly one out-arc.
    VertexId v = s;
    EdgeId least_arc = -1;
    do {
      seen[static_cast<std::size_t>(v)] = 1;
      const auto [e, w] = core.out_arcs(v).front();
      least_arc = least_arc < 0 ? e : std::min(least_arc, e);
      v = w;
    } while (v != s);
    ++res.value;
    res.certificate.push_back(p == Problem::fvs ? s : least_arc);
  }
  std::sort(res.certificate.begin(), res.certificate.end());
  return res;
}

struct PipelineResult {
  bool applicable = false;
  std::string reason;  // why not, when not applicable
  SolveResult result;  // feedback vertex set of the input
  int split_faces = 0;
};

/// Split, embed the split digraph, solve feedback arc set on it and read
/// the vertex set back off the internal arcs.
inline PipelineResult solve_bipolar_pipeline(const DiGraph& d, const SolveOptions& opts = {}) {
  PipelineResult out;
  const auto r = split_vertices(d);
  const DiGraph& s = r.out<DiGraph>();
  const auto emb = digraph_embedding(s);
  if (!emb.planar()) {
    out.reason = "split digraph is not planar";
    return out;
  }
  out.applicable = true;
  out.split_faces = check_embedding(s, *emb.embedding).faces;
  SolveResult fas = solve_exact(Instance{s, Problem::fas, std::nullopt}, opts);
  out.result.value = fas.value;
  out.result.explored = fas.explored;
  out.result.certificate = r.project(fas.certificate);
  return out;
}

struct CubicIdentityReport {
  int n = 0;
  int fvs = 0;
  int cvc = 0;
  bool holds = false;  // fvs == cvc - n/2 + 1
};

inline CubicIdentityReport check_cubic_identity(const UGraph& g, const SolveOptions& opts = {}) {
  const auto pred = structural_predicates(g);
  if (!pred.is_cubic || !pred.is_connected) throw precondition_error("cubic identity requires a connected cubic graph");
  CubicIdentityReport rep;
  rep.n = g.live_vertex_count();
  rep.fvs = solve_exact(Instance{g, Problem::fvs, std::nullopt}, opts).value;
  rep.cvc = solve_exact(Instance{g, Problem::cvc, std::nullopt}, opts).value;
  rep.holds = rep.fvs == rep.cvc - rep.n / 2 + 1;
  return rep;
}

}  // namespace fbs
