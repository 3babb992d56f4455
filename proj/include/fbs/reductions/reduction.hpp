#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fbs/embedding.hpp"
#include "fbs/graph.hpp"
#include "fbs/solvers/problem.hpp"

namespace fbs {

/// k' = a * k + b.
struct BudgetMap {
  int a = 1;
  int b = 0;

  int apply(int k) const noexcept { return a * k + b; }
  friend bool operator==(const BudgetMap&, const BudgetMap&) = default;
};

using SolutionMap = std::function<std::vector<int>(std::span<const int>)>;

/// Output vertices spawned by one input vertex or edge.
struct GadgetEntry {
  enum class Source { vertex, edge } source = Source::vertex;
  int id = 0;
  std::vector<VertexId> spawned;

  /// Manifest key: "<v>" for vertices, "e<id>" for edges.
  std::string key() const { return (source == Source::edge ? "e" : "") + std::to_string(id); }
};

struct ReductionArtifact {
  std::string name;
  Problem from = Problem::fvs;
  Problem to = Problem::fvs;
  AnyGraph output;
  std::optional<Embedding> embedding;
  BudgetMap budget;
  SolutionMap lift;     // input solution -> output solution
  SolutionMap project;  // output solution -> input solution
  std::vector<GadgetEntry> registry;
  bool decision_only = false;

  template <Graph G>
  const G& out() const {
    return std::get<G>(output);
  }
  int output_vertex_count() const {
    return std::visit([](const auto& g) { return g.vertex_count(); }, output);
  }

  /// Every output vertex is listed by exactly one registry entry.
  bool registry_is_partition() const {
    std::vector<int> hits(static_cast<std::size_t>(output_vertex_count()), 0);
    for (const auto& g : registry)
      for (VertexId v : g.spawned) {
        if (v < 0 || v >= output_vertex_count()) return false;
        ++hits[static_cast<std::size_t>(v)];
      }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  }
};

namespace detail {

inline std::vector<int> sorted_unique(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

template <Graph G>
void require_compact(const G& g, const std::string& who) {
  if (g.has_dead_vertices()) throw precondition_error(who + " requires a graph without masked vertices");
}

template <Graph G>
void require_ids(const G& g, std::span<const int> s, const std::string& who) {
  for (int v : s)
    if (!g.contains(v)) throw graph_error(who + ": vertex " + std::to_string(v) + " out of range");
}

}  // namespace detail

}  // namespace fbs
