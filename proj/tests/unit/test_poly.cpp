#include <gtest/gtest.h>

#include "fbs/io/generators.hpp"
#include "fbs/reductions/planar_dfvs.hpp"
#include "fbs/solvers/poly.hpp"
#include "fbs/solvers/validate.hpp"
#include "oracle.hpp"

using namespace fbs;

TEST(Deg2, Examples) {
  EXPECT_EQ(solve_deg2(named::directed_cycle(6)).value, 1);
  DiGraph two(6);
  for (int i = 0; i < 3; ++i) {
    two.add_edge(i, (i + 1) % 3);
    two.add_edge(3 + i, 3 + (i + 1) % 3);
  }
  const auto r = solve_deg2(two);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.certificate, (std::vector<int>{0, 3}));
  DiGraph path(4);
  for (int i = 0; i < 3; ++i) path.add_edge(i, i + 1);
  EXPECT_EQ(solve_deg2(path).value, 0);
  EXPECT_THROW(solve_deg2(named::doubled(named::cycle(3))), precondition_error);
}

TEST(Deg2, AgreesWithOracleOnRandomDigraphs) {
  Rng rng(4);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng.uniform(0, 29));
    const DiGraph d = gen::random_deg2_digraph(n, rng);
    for (Problem p : {Problem::fvs, Problem::fas}) {
      const auto fast = solve_deg2(d, p);
      const auto slow = solve_exact(Instance{d, p, std::nullopt});
      ASSERT_EQ(fast.value, slow.value) << "trial " << t;
      EXPECT_TRUE(validate(d, p, std::span<const int>(fast.certificate)).feasible);
      EXPECT_EQ(static_cast<int>(fast.certificate.size()), fast.value);
    }
  }
}

TEST(Pipeline, MatchesOracleWhenApplicable) {
  Rng rng(8);
  int applicable = 0;
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 5));
    const DiGraph d = gen::random_digraph(n, 1, 3, rng);
    const auto r = solve_bipolar_pipeline(d);
    if (!r.applicable) {
      EXPECT_EQ(r.reason, "split digraph is not planar");
      continue;
    }
    ++applicable;
    EXPECT_EQ(r.result.value, oracle::fvs(d)) << "trial " << t;
    EXPECT_TRUE(validate(d, Problem::fvs, std::span<const int>(r.result.certificate)).feasible);
  }
  EXPECT_GT(applicable, 50);
}

TEST(Pipeline, PlanarSigmaOneIsAlwaysApplicable) {
  Rng rng(15);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 60; ++t) {
    const UGraph g = gen::random_planar(3 + static_cast<int>(rng.uniform(0, 5)), 2, 3, rng);
    DiGraph d(g.vertex_count());
    for (const Edge& e : g.edges()) rng.chance(1, 2) ? d.add_edge(e.u, e.v) : d.add_edge(e.v, e.u);
    if (degree_profile(d).sigma > 1) continue;
    ++seen;
    const auto r = solve_bipolar_pipeline(d);
    ASSERT_TRUE(r.applicable) << "trial " << t;
    EXPECT_EQ(r.result.value, oracle::fvs(d));
  }
  EXPECT_GE(seen, 30);
  const auto c4 = solve_bipolar_pipeline(named::doubled(named::cycle(4)));
  ASSERT_TRUE(c4.applicable);
  EXPECT_EQ(c4.result.value, 2);
  // the doubled 5-cycle splits into a Moebius ladder
  EXPECT_FALSE(solve_bipolar_pipeline(named::doubled(named::cycle(5))).applicable);
}

TEST(CubicIdentity, CatalogUpToTen) {
  int graphs = 0;
  for (int n = 4; n <= 10; n += 2)
    for (const UGraph& g : gen::cubic_catalog(n)) {
      if (!structural_predicates(g).is_connected) continue;
      const auto rep = check_cubic_identity(g);
      EXPECT_TRUE(rep.holds) << "n=" << n << " fvs=" << rep.fvs << " cvc=" << rep.cvc;
      EXPECT_EQ(rep.fvs, oracle::fvs(g));
      EXPECT_EQ(rep.cvc, *oracle::cvc(g));
      ++graphs;
    }
  EXPECT_EQ(graphs, 1 + 2 + 5 + 19);
}

TEST(CubicIdentity, NamedGraphs) {
  const auto k4 = check_cubic_identity(named::complete(4));
  EXPECT_EQ(k4.fvs, 2);
  EXPECT_EQ(k4.cvc, 3);
  EXPECT_TRUE(check_cubic_identity(named::complete_bipartite(3, 3)).holds);
  EXPECT_TRUE(check_cubic_identity(named::prism()).holds);
  EXPECT_THROW(check_cubic_identity(named::cycle(4)), precondition_error);
}

TEST(Composition, PrismThroughPlanarDfvs) {
  const UGraph prism = named::prism();
  const auto doubled = irregular_doubling(prism);
  const auto r = planar_dfvs_gadget(doubled.out<DiGraph>(), *doubled.embedding);
  const DiGraph& out = r.out<DiGraph>();
  EXPECT_EQ(out.vertex_count(), 66);
  const int vc = oracle::vc(prism);
  const int k = 2 * prism.vertex_count() + vc;
  EXPECT_TRUE(solve_exact(Instance{out, Problem::fvs, k}).yes());
  EXPECT_FALSE(solve_exact(Instance{out, Problem::fvs, k - 1}).yes());
}
