#include <gtest/gtest.h>

#include "fbs/io/generators.hpp"
#include "fbs/solvers/cycles.hpp"
#include "fbs/solvers/exact.hpp"
#include "fbs/solvers/validate.hpp"
#include "oracle.hpp"

using namespace fbs;

namespace {

void expect_certified(const Instance& inst, const SolveResult& r) {
  ASSERT_TRUE(r.yes());
  EXPECT_TRUE(validate(inst, r.certificate).feasible);
  EXPECT_TRUE(std::is_sorted(r.certificate.begin(), r.certificate.end()));
  if (r.verdict == Verdict::optimal) EXPECT_EQ(static_cast<int>(r.certificate.size()), r.value);
}

}  // namespace

TEST(Validate, TriangleFvsSingleVertex) {
  const std::vector<int> s{1};
  EXPECT_TRUE(validate(named::cycle(3), Problem::fvs, std::span<const int>(s)).feasible);
}

TEST(Validate, TriangleVcWitnessIsOppositeEdge) {
  const UGraph g = named::cycle(3);  // edges 0-1, 1-2, 0-2
  const std::vector<int> s{0};
  const auto r = validate(g, Problem::vc, std::span<const int>(s));
  ASSERT_FALSE(r.feasible);
  ASSERT_TRUE(r.uncovered.has_value());
  EXPECT_EQ(g.edge(*r.uncovered), (Edge{1, 2}));
}

TEST(Validate, DisjointCyclesNeedConnection) {
  UGraph g(6);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(3 + i, 3 + (i + 1) % 3);
  }
  const std::vector<int> s{0, 3};
  const auto r = validate(g, Problem::cfvs, std::span<const int>(s));
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(r.disconnected.has_value());
  g.add_edge(0, 3);
  EXPECT_TRUE(validate(g, Problem::cfvs, std::span<const int>(s)).feasible);
}

TEST(Validate, RejectsOutOfRangeAndKindMismatch) {
  const std::vector<int> s{7};
  EXPECT_THROW(validate(named::cycle(3), Problem::fvs, std::span<const int>(s)), graph_error);
  EXPECT_THROW(validate(Instance{named::cycle(3), Problem::fas, {}}, {}), kind_error);
}

TEST(ShortestCycle, Basics) {
  DiGraph dag(4);
  dag.add_edge(0, 1);
  dag.add_edge(1, 2);
  dag.add_edge(0, 2);
  EXPECT_FALSE(shortest_cycle(dag).has_value());

  DiGraph d = named::directed_cycle(5);
  d.add_edge(2, 1);
  const auto c = shortest_cycle(d);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->length(), 2);
  EXPECT_TRUE(is_valid_cycle(d, *c));

  UGraph g = named::cycle(6);
  g.add_edge(4, 4);
  const auto l = shortest_cycle(g);
  ASSERT_TRUE(l);
  EXPECT_EQ(l->length(), 1);
}

TEST(ShortestCycle, UndirectedGirthMatchesKnownGraphs) {
  EXPECT_EQ(shortest_cycle(named::cube())->length(), 4);
  EXPECT_EQ(shortest_cycle(named::complete_bipartite(3, 3))->length(), 4);
  EXPECT_EQ(shortest_cycle(named::prism())->length(), 3);
  EXPECT_FALSE(shortest_cycle(named::path(5)).has_value());
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const UGraph g = gen::random_graph(8, 1, 3, rng);
    if (auto c = shortest_cycle(g)) EXPECT_TRUE(is_valid_cycle(g, *c));
  }
}

TEST(SolveExact, SmallExamples) {
  DiGraph two(2);
  two.add_edge(0, 1);
  two.add_edge(1, 0);
  EXPECT_EQ(solve_exact(two, Problem::fvs).value, 1);
  EXPECT_EQ(solve_exact(named::complete(4), Problem::vc).value, 3);
  EXPECT_EQ(solve_exact(named::complete(4), Problem::fvs).value, 2);
  EXPECT_EQ(solve_exact(named::complete(4), Problem::fvs).certificate, (std::vector<int>{0, 1}));
}

TEST(SolveExact, DecisionMode) {
  const auto yes = solve_exact(named::complete(5), Problem::fvs, 3);
  EXPECT_EQ(yes.verdict, Verdict::yes);
  EXPECT_TRUE(validate(named::complete(5), Problem::fvs, std::span<const int>(yes.certificate)).feasible);
  EXPECT_EQ(solve_exact(named::complete(5), Problem::fvs, 2).verdict, Verdict::no);
}

TEST(SolveExact, EnvelopeRefuses) {
  SolveOptions o;
  o.envelope.optimum_vertices = 4;
  EXPECT_THROW(solve_exact(Instance{named::cycle(5), Problem::fvs, {}}, o), envelope_error);
  EXPECT_THROW(solve_exact(Instance{named::cycle(5), Problem::fvs, 17}, {}), envelope_error);
  EXPECT_EQ(Envelope::parse("1,2,3,4").decision_vertices, 4);
}

TEST(SolveExact, ConnectedInfeasible) {
  UGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  EXPECT_EQ(solve_exact(g, Problem::cvc).verdict, Verdict::infeasible);
  EXPECT_EQ(solve_exact(g, Problem::vc).value, 2);
}

TEST(SolveExact, AgreesWithOracleDirected) {
  Rng rng(1);
  for (int t = 0; t < 120; ++t) {
    const int n = rng.uniform(1, 8);
    DiGraph d = gen::random_digraph(n, rng.uniform(1, 4), 8, rng);
    if (rng.chance(1, 5)) d.add_edge(0, 0);
    const auto fvs = solve_exact(d, Problem::fvs);
    EXPECT_EQ(fvs.value, oracle::fvs(d)) << "trial " << t;
    expect_certified(Instance{d, Problem::fvs, {}}, fvs);
    const auto vc = solve_exact(d, Problem::vc);
    EXPECT_EQ(vc.value, oracle::vc(d));
    if (d.edge_count() <= 18) {
      const auto fas = solve_exact(d, Problem::fas);
      EXPECT_EQ(fas.value, oracle::fas(d)) << "trial " << t;
      expect_certified(Instance{d, Problem::fas, {}}, fas);
    }
  }
}

TEST(SolveExact, AgreesWithOracleUndirected) {
  Rng rng(2);
  for (int t = 0; t < 150; ++t) {
    const int n = rng.uniform(1, 9);
    UGraph g = gen::random_graph(n, rng.uniform(1, 6), 8, rng);
    if (n >= 2 && rng.chance(1, 4)) g.add_edge(0, 1);
    for (Problem p : {Problem::fvs, Problem::vc, Problem::cvc, Problem::cfvs}) {
      const Instance inst{g, p, {}};
      const auto r = solve_exact(inst);
      std::optional<int> want;
      switch (p) {
        case Problem::fvs: want = oracle::fvs(g); break;
        case Problem::vc: want = oracle::vc(g); break;
        case Problem::cvc: want = oracle::cvc(g); break;
        default: want = oracle::cfvs(g); break;
      }
      if (!want) {
        EXPECT_EQ(r.verdict, Verdict::infeasible) << to_string(p) << " trial " << t;
        continue;
      }
      EXPECT_EQ(r.value, *want) << to_string(p) << " trial " << t;
      expect_certified(inst, r);
    }
  }
}

TEST(SolveExact, CanonicalCertificateIsLexMin) {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const UGraph g = gen::random_graph(7, 3, 8, rng);
    const auto r = solve_exact(g, Problem::fvs);
    // Lexicographically smallest sorted set of the optimal size, by enumeration.
    std::vector<int> best;
    const int n = g.vertex_count();
    std::vector<char> sel(static_cast<std::size_t>(n), 0);
    std::fill(sel.begin(), sel.begin() + r.value, 1);
    do {
      std::uint64_t m = 0;
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (sel[static_cast<std::size_t>(i)]) {
          m |= std::uint64_t{1} << i;
          s.push_back(i);
        }
      if (oracle::forest_without(g, m) && (best.empty() || s < best)) best = s;
    } while (std::prev_permutation(sel.begin(), sel.end()));
    EXPECT_EQ(r.certificate, best) << "trial " << t;
  }
}

TEST(SolveExact, MonotoneUnderArcAddition) {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    DiGraph d = gen::random_digraph(7, 2, 8, rng);
    const int before = solve_exact(d, Problem::fvs).value;
    const int fas_before = solve_exact(d, Problem::fas).value;
    d.add_edge(rng.uniform(0, 6), rng.uniform(0, 6));
    EXPECT_GE(solve_exact(d, Problem::fvs).value, before);
    EXPECT_GE(solve_exact(d, Problem::fas).value, fas_before);
  }
}

TEST(Generators, CubicCatalogCounts) {
  EXPECT_EQ(gen::cubic_catalog(4).size(), 1U);
  EXPECT_EQ(gen::cubic_catalog(6).size(), 2U);
  EXPECT_EQ(gen::cubic_catalog(8).size(), 5U);
  EXPECT_EQ(gen::cubic_catalog(10).size(), 19U);
}
