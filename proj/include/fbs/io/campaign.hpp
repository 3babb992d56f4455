#pragma once

#include <bit>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fbs/io/format.hpp"
#include "fbs/io/generators.hpp"
#include "fbs/reductions/cfvs.hpp"
#include "fbs/reductions/doubling.hpp"
#include "fbs/reductions/planar_dfvs.hpp"
#include "fbs/reductions/speckenmeyer.hpp"
#include "fbs/reductions/splitting.hpp"
#include "fbs/reductions/verify.hpp"
#include "fbs/sign_pattern.hpp"

namespace fbs {

/// Seeded verification runs over instance families matched to each
/// reduction's precondition. With max_n <= exhaustive_max_n the family is
/// enumerated; otherwise `trials` instances are drawn from Rng(seed).
struct CampaignConfig {
  std::string reduction;
  int trials = 100;
  int max_n = 8;
  std::uint64_t seed = 1;
  SolveOptions solve{};
};

struct CampaignResult {
  int instances = 0;
  int failures = 0;
  int refused = 0;  // checks skipped by the solver envelope
  bool passed() const noexcept { return failures == 0; }
};

inline constexpr int exhaustive_max_n = 6;
inline constexpr int exhaustive_digraph_max_n = 3;

inline const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"double",           "split",       "path-split", "speckenmeyer",
                                              "irregular-double", "planar-dfvs", "cfvs"};
  return names;
}

namespace detail {

struct Case {
  std::string label;
  AnyGraph graph;
};

inline std::vector<DiGraph> all_labelled_digraphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<DiGraph> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    DiGraph d(n);
    std::uint64_t c = code;
    for (const auto& [u, v] : pairs) {
      const auto s = c % 4;
      c /= 4;
      if (s & 1U) d.add_edge(u, v);
      if (s & 2U) d.add_edge(v, u);
    }
    out.push_back(std::move(d));
  }
  return out;
}

inline bool connected_small_planar(const UGraph& g, int max_degree) {
  const auto p = structural_predicates(g);
  return p.is_connected && p.has_min_edges && degree_profile(g).max_degree <= max_degree && is_planar(g);
}

inline std::vector<UGraph> planar_cubic_upto(int max_n) {
  std::vector<UGraph> out;
  for (int n = 4; n <= std::min(max_n, 12); n += 2)
    for (UGraph& g : gen::cubic_catalog(n))
      if (is_planar(g)) out.push_back(std::move(g));
  return out;
}

inline std::vector<Case> campaign_cases(const CampaignConfig& c) {
  std::vector<Case> cases;
  const bool exhaustive = c.max_n <= exhaustive_max_n;
  Rng rng(c.seed);
  auto tag = [](const std::string& fam, int n, std::size_t i) {
    return fam + std::to_string(n) + "#" + std::to_string(i);
  };
  const std::string& r = c.reduction;

  if (r == "double") {
    if (exhaustive) {
      for (int n = 1; n <= c.max_n; ++n) {
        auto gs = gen::all_graphs(n);
        for (std::size_t i = 0; i < gs.size(); ++i) cases.push_back({tag("g", n, i), std::move(gs[i])});
      }
    } else {
      for (int t = 0; t < c.trials; ++t) {
        const int n = rng.uniform(1, c.max_n);
        cases.push_back({tag("rg", n, static_cast<std::size_t>(t)), gen::random_graph(n, 1, 3, rng)});
      }
    }
  } else if (r == "split" || r == "path-split") {
    const int lim = exhaustive ? std::min(c.max_n, exhaustive_digraph_max_n) : 0;
    for (int n = 1; n <= lim; ++n) {
      auto ds = all_labelled_digraphs(n);
      for (std::size_t i = 0; i < ds.size(); ++i) cases.push_back({tag("d", n, i), std::move(ds[i])});
    }
    if (c.max_n > lim)
      for (int t = 0; t < c.trials; ++t) {
        const int n = rng.uniform(lim + 1, c.max_n);
        cases.push_back({tag("rd", n, static_cast<std::size_t>(t)), gen::random_digraph(n, 1, 3, rng)});
      }
  } else if (r == "speckenmeyer") {
    for (int k = 5; k + 1 <= c.max_n; ++k) cases.push_back({"wheel" + std::to_string(k), named::wheel(k)});
    if (exhaustive) {
      for (int n = 6; n <= c.max_n; ++n) {
        const auto gs = gen::all_graphs(n);
        for (std::size_t i = 0; i < gs.size(); ++i)
          if (degree_profile(gs[i]).max_degree >= 5 && is_planar(gs[i])) cases.push_back({tag("g", n, i), gs[i]});
      }
    } else {
      for (int t = 0, drawn = 0; drawn < c.trials && t < 100 * c.trials; ++t) {
        const int n = rng.uniform(6, c.max_n);
        UGraph g = gen::random_planar(n, 1, 5, rng);
        if (degree_profile(g).max_degree < 5) continue;
        cases.push_back({tag("rp", n, static_cast<std::size_t>(drawn++)), std::move(g)});
      }
    }
  } else if (r == "irregular-double" || r == "planar-dfvs") {
    auto gs = planar_cubic_upto(c.max_n);
    if (exhaustive || static_cast<int>(gs.size()) <= c.trials) {
      for (std::size_t i = 0; i < gs.size(); ++i)
        cases.push_back({tag("c", gs[i].vertex_count(), i), std::move(gs[i])});
    } else {
      for (int t = 0; t < c.trials; ++t) {
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(gs.size()) - 1));
        cases.push_back({tag("c", gs[i].vertex_count(), i), gs[i]});
      }
    }
  } else if (r == "cfvs") {
    if (exhaustive) {
      for (int n = 2; n <= c.max_n; ++n) {
        const auto gs = gen::all_graphs(n);
        for (std::size_t i = 0; i < gs.size(); ++i)
          if (connected_small_planar(gs[i], 4)) cases.push_back({tag("g", n, i), gs[i]});
      }
    } else {
      for (int t = 0, drawn = 0; drawn < c.trials && t < 100 * c.trials; ++t) {
        const int n = rng.uniform(3, c.max_n);
        UGraph g = gen::random_planar(n, 1, 2, rng);
        if (!connected_small_planar(g, 4)) continue;
        cases.push_back({tag("rp", n, static_cast<std::size_t>(drawn++)), std::move(g)});
      }
    }
  } else {
    throw precondition_error("unknown reduction '" + r + "'");
  }
  return cases;
}

inline std::vector<std::vector<int>> connected_covers_of_size(const UGraph& g, int k) {
  std::vector<std::vector<int>> out;
  const int n = g.vertex_count();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) != k) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1U) s.push_back(v);
    if (validate(g, Problem::cvc, std::span<const int>(s)).feasible) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

/// Runs the campaign, writing one line per check to `log`. Output depends on
/// the configuration only.
inline CampaignResult run_campaign(const CampaignConfig& c, std::ostream& log) {
  CampaignResult res;
  const auto cases = detail::campaign_cases(c);
  const std::string& r = c.reduction;
  auto record = [&](const std::string& label, const VerificationReport& rep, const AnyGraph& input) {
    log << label << ": " << rep.summary() << '\n';
    if (!rep.passed) {
      ++res.failures;
      log << "counterexample:\n" << serialize_graph(input);
    }
  };
  auto guarded = [&](const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const envelope_error& e) {
      ++res.refused;
      log << label << ": refused: " << e.what() << '\n';
    }
  };

  for (const auto& cs : cases) {
    ++res.instances;
    const std::string& L = cs.label;
    if (r == "double") {
      const auto& g = std::get<UGraph>(cs.graph);
      for (DoubleMode m : {DoubleMode::arcs, DoubleMode::parallel_edges, DoubleMode::subdivided})
        guarded(L, [&] {
          record(L + " " + to_string(m),
                 verify_reduction(double_edges(g, m), Instance{g, Problem::vc, {}}, VerifyMode::optimum_equality, c.solve),
                 cs.graph);
        });
    } else if (r == "split") {
      const auto& d = std::get<DiGraph>(cs.graph);
      guarded(L, [&] {
        const auto art = split_vertices(d);
        auto rep = verify_reduction(art, Instance{d, Problem::fvs, {}}, VerifyMode::optimum_equality, c.solve);
        if (degree_profile(art.out<DiGraph>()).sigma > 1) rep.fail("split output has sigma > 1");
        record(L, rep, cs.graph);
      });
    } else if (r == "path-split") {
      const auto& d = std::get<DiGraph>(cs.graph);
      for (Problem target : {Problem::fvs, Problem::fas})
        guarded(L, [&] {
          const auto art = path_split_gadget(d, target);
          auto rep = verify_reduction(art, Instance{d, Problem::fvs, {}}, VerifyMode::optimum_equality, c.solve);
          if (degree_profile(art.out<DiGraph>()).max_degree > 3) rep.fail("path-split output has max degree > 3");
          record(L + " " + to_string(target), rep, cs.graph);
        });
    } else if (r == "speckenmeyer") {
      const auto& g = std::get<UGraph>(cs.graph);
      guarded(L, [&] {
        const auto art = speckenmeyer_reduce(g);
        auto rep = verify_reduction(art, Instance{g, Problem::fvs, {}}, VerifyMode::optimum_equality, c.solve);
        const UGraph& out = art.out<UGraph>();
        if (degree_profile(out).max_degree > 4) rep.fail("output has max degree > 4");
        if (!is_planar(out)) rep.fail("output is not planar");
        record(L + " gadgets=" + std::to_string(art.budget.b / 2), rep, cs.graph);
      });
    } else if (r == "irregular-double") {
      const auto& g = std::get<UGraph>(cs.graph);
      guarded(L, [&] {
        const auto art = irregular_doubling(g);
        auto rep = verify_reduction(art, Instance{g, Problem::vc, {}}, VerifyMode::optimum_equality, c.solve);
        const DiGraph& d = art.out<DiGraph>();
        for (VertexId v = 0; v < d.vertex_count(); ++v)
          if (classify_pattern(sign_pattern(d, *art.embedding, v)) != PatternClass::irregular)
            rep.fail("vertex " + std::to_string(v) + " is not irregular");
        record(L, rep, cs.graph);
      });
    } else if (r == "planar-dfvs") {
      const auto& g = std::get<UGraph>(cs.graph);
      guarded(L, [&] {
        const auto doubled = irregular_doubling(g);
        const DiGraph& d = doubled.out<DiGraph>();
        const auto art = planar_dfvs_gadget(d, *doubled.embedding);
        const int opt = solve_exact(Instance{g, Problem::vc, {}}, c.solve).value;
        for (int k : {opt - 1, opt}) {
          if (k < 0) continue;
          guarded(L, [&] {
            record(L + " k=" + std::to_string(k),
                   verify_reduction(art, Instance{d, Problem::fvs, k}, VerifyMode::decision_equivalence, c.solve),
                   AnyGraph{d});
          });
        }
      });
    } else if (r == "cfvs") {
      const auto& g = std::get<UGraph>(cs.graph);
      const int n = g.vertex_count();
      guarded(L, [&] {
        const auto a1 = cfvs_gadget(g, 1);
        guarded(L + " k=1", [&] {
          record(L + " k=1", verify_reduction(a1, Instance{g, Problem::cvc, 1}, VerifyMode::decision_equivalence, c.solve),
                 cs.graph);
        });
      });
      for (int k = 1; k < n; ++k) {
        const auto covers = detail::connected_covers_of_size(g, k);
        if (covers.empty()) continue;
        const auto art = cfvs_gadget(g, k);
        const Instance out_base{art.output, Problem::cfvs, std::nullopt};
        VerificationReport rep;
        rep.input_value = k;
        rep.output_value = art.budget.apply(k);
        for (const auto& s : covers) {
          const auto lifted = art.lift(s);
          if (!validate(out_base, lifted).feasible) rep.fail("lift of " + detail::show(s) + " is infeasible");
          if (static_cast<int>(lifted.size()) != art.budget.apply(k))
            rep.fail("lift of " + detail::show(s) + " has size " + std::to_string(lifted.size()));
          const auto back = art.project(lifted);
          if (!validate(g, Problem::cvc, std::span<const int>(back)).feasible || static_cast<int>(back.size()) > k)
            rep.fail("projection of the lift of " + detail::show(s) + " is not a cover of size <= k");
        }
        record(L + " lift k=" + std::to_string(k) + " covers=" + std::to_string(covers.size()), rep, cs.graph);
      }
    }
  }
  log << "verify " << r << ": " << res.instances << " instances, " << res.failures << " failures, " << res.refused
      << " refused\n";
  return res;
}

}  // namespace fbs
