#include <gtest/gtest.h>

#include <set>

#include "fbs/graph.hpp"
#include "fbs/io/generators.hpp"
#include "oracle.hpp"

using namespace fbs;

namespace {

// Directed cycles as sorted vertex sets, by brute-force DFS over simple paths.
std::set<std::vector<int>> cycle_sets(const DiGraph& d) {
  std::set<std::vector<int>> out;
  const int n = d.vertex_count();
  std::vector<int> path;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (const auto& [e, w] : d.out_arcs(v)) {
      if (w == start) {
        auto c = path;
        std::sort(c.begin(), c.end());
        out.insert(c);
      } else if (w > start && !on[static_cast<std::size_t>(w)]) {
        on[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        on[static_cast<std::size_t>(w)] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    if (!d.alive(s)) continue;
    path = {s};
    on[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s, s);
    on[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

bool two_colourable(const UGraph& g) {
  std::vector<int> col(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (col[static_cast<std::size_t>(s)] >= 0) continue;
    col[static_cast<std::size_t>(s)] = 0;
    std::vector<int> st{s};
    while (!st.empty()) {
      const int v = st.back();
      st.pop_back();
      for (const auto& [e, w] : g.out_arcs(v)) {
        if (col[static_cast<std::size_t>(w)] < 0) {
          col[static_cast<std::size_t>(w)] = 1 - col[static_cast<std::size_t>(v)];
          st.push_back(w);
        } else if (col[static_cast<std::size_t>(w)] == col[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST(Graph, UndirectedEdgesAreCanonical) {
  UGraph g(3);
  const EdgeId e = g.add_edge(2, 0);
  EXPECT_EQ(g.edge(e).u, 0);
  EXPECT_EQ(g.edge(e).v, 2);
  EXPECT_THROW(g.add_edge(0, 3), graph_error);
}

TEST(Graph, SelfLoopCountsTwice) {
  UGraph g(1);
  g.add_edge(0, 0);
  EXPECT_EQ(g.degree(0), 2);
  DiGraph d(1);
  d.add_edge(0, 0);
  EXPECT_EQ(d.in_degree(0), 1);
  EXPECT_EQ(d.out_degree(0), 1);
  EXPECT_EQ(d.degree(0), 2);
}

TEST(Graph, MaskingKeepsIds) {
  UGraph g = named::cycle(4);
  const std::vector<VertexId> gone{1};
  const UGraph h = g.without(gone);
  EXPECT_EQ(h.vertex_count(), 4);
  EXPECT_EQ(h.live_vertex_count(), 3);
  EXPECT_EQ(h.live_edge_count(), 2);
  EXPECT_FALSE(h.live(0));
  EXPECT_EQ(h.degree(1), 0);
  const auto c = compact(h);
  EXPECT_EQ(c.graph.vertex_count(), 3);
  EXPECT_EQ(c.old_id, (std::vector<VertexId>{0, 2, 3}));
}

TEST(DegreeProfile, Examples) {
  const auto empty = degree_profile(UGraph(0));
  EXPECT_EQ(empty.max_degree, 0);
  EXPECT_EQ(empty.sigma, 0);

  DiGraph two(2);
  two.add_edge(0, 1);
  two.add_edge(1, 0);
  const auto p = degree_profile(two);
  EXPECT_EQ(p.sigma, 1);
  EXPECT_EQ(p.max_degree, 2);
  EXPECT_EQ(p.in, (std::vector<int>{1, 1}));

  // Doubled K4: count by hand, three in- and three out-arcs per vertex.
  const auto k4 = degree_profile(named::doubled(named::complete(4)));
  EXPECT_EQ(k4.sigma, 3);
  EXPECT_EQ(k4.max_degree, 6);
  for (int v = 0; v < 4; ++v) {
    EXPECT_EQ(k4.in[static_cast<std::size_t>(v)], 3);
    EXPECT_EQ(k4.out[static_cast<std::size_t>(v)], 3);
  }
}

TEST(DegreeProfile, HandshakeAndImplications) {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    DiGraph d = gen::random_digraph(rng.uniform(0, 9), rng.uniform(1, 5), 10, rng);
    if (d.vertex_count() > 0 && rng.chance(1, 3)) d.add_edge(0, 0);
    const auto p = degree_profile(d);
    int sin = 0, sout = 0, stot = 0;
    for (std::size_t v = 0; v < p.total.size(); ++v) {
      sin += p.in[v];
      sout += p.out[v];
      stot += p.total[v];
      EXPECT_EQ(p.total[v], p.in[v] + p.out[v]);
    }
    EXPECT_EQ(sin, d.edge_count());
    EXPECT_EQ(sout, d.edge_count());
    EXPECT_EQ(stot, 2 * d.edge_count());
    if (p.max_degree <= 3) EXPECT_LE(p.sigma, 1);
    if (p.sigma >= 2) EXPECT_GE(p.max_degree, 4);
  }
}

TEST(SubdivideAll, Examples) {
  const UGraph c6 = subdivide_all(named::cycle(3));
  EXPECT_EQ(c6.vertex_count(), 6);
  EXPECT_EQ(c6.edge_count(), 6);
  EXPECT_EQ(oracle::fvs(c6), 1);
  EXPECT_EQ(subdivide_all(UGraph(0)).vertex_count(), 0);

  DiGraph arc(2);
  arc.add_edge(0, 1);
  const DiGraph s = subdivide_all(arc);
  ASSERT_EQ(s.edge_count(), 2);
  EXPECT_EQ(s.edge(0), (Edge{0, 2}));
  EXPECT_EQ(s.edge(1), (Edge{2, 1}));
}

TEST(SubdivideAll, BipartiteAndFvsPreserved) {
  Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    UGraph g = gen::random_graph(rng.uniform(1, 6), 3, 8, rng);
    if (rng.chance(1, 3)) g.add_edge(0, 0);
    const UGraph s = subdivide_all(g);
    EXPECT_TRUE(two_colourable(s));
    if (s.vertex_count() <= 20) EXPECT_EQ(oracle::fvs(s), oracle::fvs(g));
    const DiGraph d = gen::random_digraph(rng.uniform(1, 5), 3, 8, rng);
    const DiGraph sd = subdivide_all(d);
    if (sd.vertex_count() <= 20) EXPECT_EQ(oracle::fvs(sd), oracle::fvs(d));
  }
}

TEST(TrimNonCyclic, Examples) {
  DiGraph dag(4);
  dag.add_edge(0, 1);
  dag.add_edge(1, 2);
  dag.add_edge(0, 3);
  EXPECT_EQ(trim_non_cyclic(dag).live_vertex_count(), 0);

  const DiGraph c5 = named::directed_cycle(5);
  EXPECT_EQ(trim_non_cyclic(c5), c5);

  DiGraph pendant = named::directed_cycle(3);
  pendant.add_vertex();
  pendant.add_edge(1, 3);
  const DiGraph t = trim_non_cyclic(pendant);
  EXPECT_FALSE(t.alive(3));
  EXPECT_EQ(t.live_vertex_count(), 3);
}

TEST(TrimNonCyclic, IdempotentAndCyclePreserving) {
  Rng rng(7);
  for (int t = 0; t < 150; ++t) {
    const DiGraph d = gen::random_digraph(rng.uniform(1, 9), rng.uniform(1, 3), 10, rng);
    const DiGraph once = trim_non_cyclic(d);
    EXPECT_EQ(trim_non_cyclic(once), once);
    EXPECT_EQ(cycle_sets(once), cycle_sets(d));
    for (VertexId v = 0; v < once.vertex_count(); ++v)
      if (once.alive(v)) EXPECT_GE(std::min(once.in_degree(v), once.out_degree(v)), 1);
  }
}

TEST(StructuralPredicates, Examples) {
  EXPECT_TRUE(structural_predicates(named::complete(4)).is_cubic);
  EXPECT_TRUE(structural_predicates(named::prism()).is_cubic);
  EXPECT_TRUE(structural_predicates(named::doubled(named::complete(4))).is_3_regular_digraph);
  EXPECT_FALSE(structural_predicates(named::cycle(4)).is_cubic);
  UGraph two(2);
  two.add_edge(0, 1);
  const auto p = structural_predicates(two);
  EXPECT_TRUE(p.is_connected);
  EXPECT_FALSE(p.has_min_edges);
  two.add_edge(0, 1);
  EXPECT_FALSE(structural_predicates(two).is_simple);
}
