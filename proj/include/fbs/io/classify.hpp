#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbs/graph.hpp"
#include "fbs/planarity.hpp"
#include "fbs/solvers/problem.hpp"

namespace fbs {

enum class Complexity { p, npc, p_by_structure };

inline const char* to_string(Complexity c) {
  switch (c) {
    case Complexity::p: return "P";
    case Complexity::npc: return "NP-complete";
    case Complexity::p_by_structure: return "P-by-structure";
  }
  return "?";
}

/// Rows of the complexity landscape, indexed by (kind, problem, planarity).
enum class LandscapeRow {
  undirected_vertex,
  planar_undirected_vertex,
  directed_vertex,
  directed_arc,
  planar_directed_vertex,
  planar_directed_arc,
  undirected_connected_vertex,
  planar_undirected_connected_vertex,
};

inline constexpr int landscape_row_count = 8;

inline const char* to_string(LandscapeRow r) {
  switch (r) {
    case LandscapeRow::undirected_vertex: return "undirected, vertex";
    case LandscapeRow::planar_undirected_vertex: return "planar undirected, vertex";
    case LandscapeRow::directed_vertex: return "directed, vertex";
    case LandscapeRow::directed_arc: return "directed, arc";
    case LandscapeRow::planar_directed_vertex: return "planar directed, vertex";
    case LandscapeRow::planar_directed_arc: return "planar directed, arc";
    case LandscapeRow::undirected_connected_vertex: return "undirected, connected vertex";
    case LandscapeRow::planar_undirected_connected_vertex: return "planar undirected, connected vertex";
  }
  return "?";
}

struct Measured {
  bool directed = false;
  bool planar = false;
  int max_degree = 0;
  int sigma = 0;
};

/// Where an instance falls. `core` is measured on the part of the graph that
/// lies on cycles (trimmed digraph, or 2-core of an undirected graph).
struct ClassificationVerdict {
  Problem problem = Problem::fvs;
  LandscapeRow row = LandscapeRow::undirected_vertex;
  Measured measured;
  std::optional<Measured> core;
  Complexity verdict = Complexity::p;
  std::string threshold;  // the bound that decided the verdict
  std::string tag;

  std::string line() const {
    std::string s = std::string(to_string(row)) + ": " + to_string(verdict) + " (" + threshold + ") [" + tag + "]";
    s += " delta=" + std::to_string(measured.max_degree);
    if (measured.directed) s += " sigma=" + std::to_string(measured.sigma);
    s += measured.planar ? " planar" : " nonplanar";
    return s;
  }
};

struct RowRule {
  const char* parameter;  // "delta", "sigma" or "none"
  int p_upto;             // P when parameter <= p_upto; -1 for "always"
  const char* p_tag;
  const char* npc_tag;
};

inline RowRule row_rule(LandscapeRow r) {
  switch (r) {
    case LandscapeRow::undirected_vertex:
    case LandscapeRow::planar_undirected_vertex:
      return {"delta", 3, "subcubic: Speckenmeyer; Ueno et al.; Furst et al.", "Speckenmeyer gadget"};
    case LandscapeRow::directed_vertex:
    case LandscapeRow::directed_arc: return {"delta", 2, "disjoint cycles", "path-split gadget"};
    case LandscapeRow::planar_directed_vertex: return {"sigma", 1, "split + planar arc set", "H(v) gadget"};
    case LandscapeRow::planar_directed_arc: return {"none", -1, "Lucchesi-Younger", ""};
    case LandscapeRow::undirected_connected_vertex:
    case LandscapeRow::planar_undirected_connected_vertex: return {"delta", 2, "cycles and paths", "8-path gadget"};
  }
  return {"none", -1, "", ""};
}

inline std::optional<LandscapeRow> select_row(bool directed, Problem p, bool planar) {
  if (directed) {
    if (p == Problem::fvs) return planar ? LandscapeRow::planar_directed_vertex : LandscapeRow::directed_vertex;
    if (p == Problem::fas) return planar ? LandscapeRow::planar_directed_arc : LandscapeRow::directed_arc;
    return std::nullopt;
  }
  if (p == Problem::fvs) return planar ? LandscapeRow::planar_undirected_vertex : LandscapeRow::undirected_vertex;
  if (p == Problem::cfvs)
    return planar ? LandscapeRow::planar_undirected_connected_vertex : LandscapeRow::undirected_connected_vertex;
  return std::nullopt;
}

namespace detail {

inline bool in_p_column(const RowRule& rule, const Measured& m) {
  if (rule.p_upto < 0) return true;
  const int x = std::string(rule.parameter) == "sigma" ? m.sigma : m.max_degree;
  return x <= rule.p_upto;
}

}  // namespace detail

/// Pure verdict from measured parameters. Returns nullopt for combinations
/// the landscape does not cover (vertex cover, arc sets on undirected graphs).
inline std::optional<ClassificationVerdict> classify(Problem p, const Measured& m,
                                                     const std::optional<Measured>& core = std::nullopt) {
  const auto row = select_row(m.directed, p, m.planar);
  if (!row) return std::nullopt;
  const RowRule rule = row_rule(*row);
  ClassificationVerdict v;
  v.problem = p;
  v.row = *row;
  v.measured = m;
  v.core = core;
  const std::string bound = rule.p_upto < 0 ? "always" : std::string(rule.parameter) + " <= " + std::to_string(rule.p_upto);
  if (detail::in_p_column(rule, m)) {
    v.verdict = Complexity::p;
    v.threshold = bound;
    v.tag = rule.p_tag;
  } else if (core && detail::in_p_column(rule, *core)) {
    v.verdict = Complexity::p_by_structure;
    v.threshold = "core " + bound;
    v.tag = rule.p_tag;
  } else {
    v.verdict = Complexity::npc;
    v.threshold = std::string(rule.parameter) + " >= " + std::to_string(rule.p_upto + 1);
    v.tag = rule.npc_tag;
  }
  return v;
}

template <Graph G>
Measured measure(const G& g) {
  const auto prof = degree_profile(g);
  Measured m;
  m.directed = G::directed;
  m.max_degree = prof.max_degree;
  m.sigma = prof.sigma;
  if constexpr (G::directed) m.planar = test_planarity(underlying(g)).planar();
  else m.planar = test_planarity(g).planar();
  return m;
}

/// Masks vertices of degree at most one until none remain.
inline UGraph two_core(const UGraph& g) {
  UGraph out = g;
  auto deg = degree_profile(out).total;
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < out.vertex_count(); ++v)
    if (out.alive(v) && deg[static_cast<std::size_t>(v)] <= 1) stack.push_back(v);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (!out.alive(v)) continue;
    for (const auto& [e, w] : out.out_arcs(v))
      if (w != v && --deg[static_cast<std::size_t>(w)] == 1) stack.push_back(w);
    out.kill(v);
  }
  return out;
}

inline std::optional<ClassificationVerdict> classify_graph(const AnyGraph& graph, Problem p) {
  return std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        const Measured m = measure(g);
        Measured c;
        if constexpr (G::directed) c = measure(trim_non_cyclic(g));
        else c = measure(two_core(g));
        return classify(p, m, c);
      },
      graph);
}

/// Problems the landscape covers for a graph kind, in display order.
inline std::vector<Problem> landscape_problems(bool directed) {
  if (directed) return {Problem::fvs, Problem::fas};
  return {Problem::fvs, Problem::cfvs};
}

}  // namespace fbs
