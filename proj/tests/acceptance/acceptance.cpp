// Acceptance suite: one PASS/FAIL line per criterion. Expected values come
// from the brute-force checks in oracle.hpp and the local helpers below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "fbs/fbs.hpp"
#include "oracle.hpp"

using namespace fbs;

namespace {

// Tolerances. Every criterion is an exact equality; only runtimes have slack.
constexpr double kDeg2BudgetSeconds = 10.0;
constexpr int kSplitTrials = 200, kSplitMaxN = 8;
constexpr int kDoubleTrials = 200, kDoubleMaxN = 8;
constexpr int kPathSplitTrials = 200, kPathSplitMaxN = 7;
constexpr int kDeg2Trials = 500, kDeg2MaxN = 30;
constexpr int kSpeckRandom = 20;
constexpr int kCfvsPairs = 20;
constexpr int kCubicMaxN = 10;
constexpr int kRoundTrips = 200;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// --- independent helpers -----------------------------------------------------

struct Deg {
  std::vector<int> in, out, total;
};

template <Graph G>
Deg degrees(const G& g) {
  Deg d;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  d.in.assign(n, 0);
  d.out.assign(n, 0);
  d.total.assign(n, 0);
  for (const Edge& e : g.edges()) {
    ++d.out[static_cast<std::size_t>(e.u)];
    ++d.in[static_cast<std::size_t>(e.v)];
    ++d.total[static_cast<std::size_t>(e.u)];
    ++d.total[static_cast<std::size_t>(e.v)];
  }
  return d;
}

int max_of(const std::vector<int>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

int sigma_of(const DiGraph& g) {
  const Deg d = degrees(g);
  int s = 0;
  for (std::size_t v = 0; v < d.in.size(); ++v) s = std::max(s, std::min(d.in[v], d.out[v]));
  return s;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

/// Face tracing on a rotation system; genus zero iff V - E + F = 2 on every
/// component that has an edge.
template <Graph G>
bool genus_zero(const G& g, const Embedding& emb) {
  const int n = g.vertex_count(), m = g.edge_count();
  if (static_cast<int>(emb.rotation.size()) != n) return false;
  std::vector<std::array<int, 2>> pos(static_cast<std::size_t>(m), {-1, -1});
  for (int v = 0; v < n; ++v) {
    const auto& r = emb.rotation[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < r.size(); ++i) {
      const int side = r[i].end == End::a ? 0 : 1;
      if (g.edge(r[i].edge).at(r[i].end) != v) return false;
      auto& slot = pos[static_cast<std::size_t>(r[i].edge)][static_cast<std::size_t>(side)];
      if (slot != -1) return false;
      slot = static_cast<int>(i);
    }
  }
  for (const auto& p : pos)
    if (p[0] < 0 || p[1] < 0) return false;
  // dart 2e+s leaves endpoint s of edge e
  std::vector<char> seen(static_cast<std::size_t>(2 * m), 0);
  Dsu comp(n);
  for (const Edge& e : g.edges()) comp.unite(e.u, e.v);
  std::map<int, std::array<int, 3>> vef;  // root -> V, E, F
  const Deg deg = degrees(g);
  for (int v = 0; v < n; ++v)
    if (deg.total[static_cast<std::size_t>(v)] > 0) ++vef[comp.find(v)][0];
  for (const Edge& e : g.edges()) ++vef[comp.find(e.u)][1];
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    ++vef[comp.find(g.edge(d0 / 2).u)][2];
    for (int d = d0; !seen[static_cast<std::size_t>(d)];) {
      seen[static_cast<std::size_t>(d)] = 1;
      const int e = d / 2, s = d % 2, t = 1 - s;
      const VertexId w = t == 0 ? g.edge(e).u : g.edge(e).v;
      const auto& r = emb.rotation[static_cast<std::size_t>(w)];
      const EdgeEnd nx = r[(static_cast<std::size_t>(pos[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)]) + 1) % r.size()];
      d = 2 * nx.edge + (nx.end == End::a ? 0 : 1);
    }
  }
  for (const auto& [root, c] : vef)
    if (c[0] - c[1] + c[2] != 2) return false;
  return true;
}

std::optional<Embedding> certified_embedding(const UGraph& g) {
  auto r = test_planarity(g);
  if (!r.planar() || !genus_zero(g, *r.embedding)) return std::nullopt;
  return r.embedding;
}

DiGraph trim(const DiGraph& d) {
  DiGraph out = d;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> in(static_cast<std::size_t>(d.vertex_count()), 0), outd(in);
    for (EdgeId e = 0; e < d.edge_count(); ++e)
      if (out.live(e)) {
        ++outd[static_cast<std::size_t>(d.edge(e).u)];
        ++in[static_cast<std::size_t>(d.edge(e).v)];
      }
    for (VertexId v = 0; v < d.vertex_count(); ++v)
      if (out.alive(v) && (in[static_cast<std::size_t>(v)] == 0 || outd[static_cast<std::size_t>(v)] == 0)) {
        out.kill(v);
        changed = true;
      }
  }
  return out;
}

/// Connected feedback vertex set check on graphs of any size.
bool is_cfvs(const UGraph& g, const std::vector<int>& s) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  Dsu rest(g.vertex_count()), sel(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const bool iu = in[static_cast<std::size_t>(e.u)], iv = in[static_cast<std::size_t>(e.v)];
    if (!iu && !iv && !rest.unite(e.u, e.v)) return false;
    if (iu && iv) sel.unite(e.u, e.v);
  }
  for (int v : s)
    if (sel.find(v) != sel.find(s.front())) return false;
  return true;
}

bool is_dag_without(const DiGraph& d, const std::vector<int>& s) {
  std::vector<char> gone(static_cast<std::size_t>(d.vertex_count()), 0);
  for (int v : s) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<int> indeg(static_cast<std::size_t>(d.vertex_count()), 0);
  for (const Edge& e : d.edges())
    if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)]) ++indeg[static_cast<std::size_t>(e.v)];
  std::vector<int> stack;
  int alive = 0, popped = 0;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) {
      ++alive;
      if (!indeg[static_cast<std::size_t>(v)]) stack.push_back(v);
    }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++popped;
    for (const Edge& e : d.edges())
      if (e.u == v && !gone[static_cast<std::size_t>(e.v)] && --indeg[static_cast<std::size_t>(e.v)] == 0) stack.push_back(e.v);
  }
  return popped == alive;
}

/// '+' for an arc leaving v (tail end), '-' for one entering it.
std::string pattern_at(const Embedding& emb, VertexId v) {
  std::string p;
  for (const EdgeEnd& ee : emb.rotation[static_cast<std::size_t>(v)]) p += ee.end == End::a ? '+' : '-';
  return p;
}

bool cyclic_match(const std::string& p, const std::string& target) {
  if (p.size() != target.size()) return false;
  return (target + target).find(p) != std::string::npos;
}

std::string run_capture(const std::string& cmd, int& rc) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    rc = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

SolveOptions wide() {
  SolveOptions o;
  o.envelope.optimum_vertices = 200;
  return o;
}

// --- criteria ----------------------------------------------------------------

Outcome splitting() {
  Outcome o;
  Rng rng(101);
  for (int t = 0; t < kSplitTrials; ++t) {
    const DiGraph d = gen::random_digraph(rng.uniform(1, kSplitMaxN), 1, 3, rng);
    const auto r = split_vertices(d);
    const DiGraph& s = r.out<DiGraph>();
    const int want = oracle::fvs(d);
    const int got = solve_exact(Instance{s, Problem::fas, {}}).value;
    if (got != want) o.fail("trial " + std::to_string(t) + ": fas(split) " + std::to_string(got) + " vs fvs " + std::to_string(want));
    if (sigma_of(s) > 1) o.fail("trial " + std::to_string(t) + ": sigma(split) > 1");
    const auto rep = verify_reduction(r, Instance{d, Problem::fvs, {}}, VerifyMode::optimum_equality);
    if (!rep.passed) o.fail("trial " + std::to_string(t) + ": " + rep.summary());
  }
  if (o.ok) o.detail = std::to_string(kSplitTrials) + " digraphs, n <= " + std::to_string(kSplitMaxN);
  return o;
}

Outcome doubling() {
  Outcome o;
  Rng rng(202);
  int planar_in = 0;
  for (int t = 0; t < kDoubleTrials; ++t) {
    const int n = rng.uniform(1, kDoubleMaxN);
    const UGraph g = t % 2 ? gen::random_graph(n, 2, 3, rng) : gen::random_planar(n, 1, 3, rng);
    const int want = oracle::vc(g);
    const bool planar = oracle::planar(g);
    planar_in += planar;
    for (DoubleMode m : {DoubleMode::arcs, DoubleMode::parallel_edges, DoubleMode::subdivided}) {
      const auto r = double_edges(g, m);
      const int got = solve_exact(Instance{r.output, Problem::fvs, {}}).value;
      if (got != want)
        o.fail("trial " + std::to_string(t) + " " + to_string(m) + ": fvs " + std::to_string(got) + " vs vc " + std::to_string(want));
      if (planar) {
        const UGraph u = std::visit(
            [](const auto& x) {
              if constexpr (std::decay_t<decltype(x)>::directed) return underlying(x);
              else return x;
            },
            r.output);
        if (!certified_embedding(u)) o.fail("trial " + std::to_string(t) + " " + to_string(m) + ": planarity lost");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(kDoubleTrials) + " graphs x 3 modes, " + std::to_string(planar_in) + " planar";
  return o;
}

Outcome path_split() {
  Outcome o;
  Rng rng(303);
  for (int t = 0; t < kPathSplitTrials; ++t) {
    const DiGraph d = gen::random_digraph(rng.uniform(1, kPathSplitMaxN), 1, 3, rng);
    const auto r = path_split_gadget(d);
    const DiGraph& p = r.out<DiGraph>();
    const int want = oracle::fvs(d);
    const int fv = solve_exact(Instance{p, Problem::fvs, {}}).value;
    const int fa = solve_exact(Instance{p, Problem::fas, {}}).value;
    if (fv != want || fa != want)
      o.fail("trial " + std::to_string(t) + ": " + std::to_string(want) + " / " + std::to_string(fv) + " / " + std::to_string(fa));
    if (max_of(degrees(p).total) > 3) o.fail("trial " + std::to_string(t) + ": max degree > 3");
    const DiGraph core = trim(p);
    Deg cd;
    cd.in.assign(static_cast<std::size_t>(p.vertex_count()), 0);
    cd.out = cd.in;
    for (EdgeId e = 0; e < p.edge_count(); ++e)
      if (core.live(e)) {
        ++cd.out[static_cast<std::size_t>(p.edge(e).u)];
        ++cd.in[static_cast<std::size_t>(p.edge(e).v)];
      }
    if (max_of(cd.in) > 2 || max_of(cd.out) > 2) o.fail("trial " + std::to_string(t) + ": trimmed core has a degree-3 side");
  }
  if (o.ok) o.detail = std::to_string(kPathSplitTrials) + " digraphs, n <= " + std::to_string(kPathSplitMaxN);
  return o;
}

Outcome max_degree_two() {
  Outcome o;
  Rng rng(404);
  const auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < kDeg2Trials; ++t) {
    const DiGraph d = gen::random_deg2_digraph(rng.uniform(1, kDeg2MaxN), rng);
    for (Problem p : {Problem::fvs, Problem::fas}) {
      const int fast = solve_deg2(d, p).value;
      const int slow = solve_exact(Instance{d, p, {}}).value;
      if (fast != slow)
        o.fail("trial " + std::to_string(t) + " " + to_string(p) + ": " + std::to_string(fast) + " vs " + std::to_string(slow));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= kDeg2BudgetSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << kDeg2Trials << " digraphs in " << secs << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome irregular() {
  Outcome o;
  const std::pair<const char*, UGraph> inputs[] = {{"K4", named::complete(4)}, {"prism", named::prism()}, {"cube", named::cube()}};
  for (const auto& [name, g] : inputs) {
    const auto cover = linear_forest_cover(g);
    for (ForestLabel l : {ForestLabel::f1, ForestLabel::f2}) {
      std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
      Dsu dsu(g.vertex_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (cover.label[static_cast<std::size_t>(e)] != l) continue;
        const Edge& ed = g.edge(e);
        if (++deg[static_cast<std::size_t>(ed.u)] > 2 || ++deg[static_cast<std::size_t>(ed.v)] > 2)
          o.fail(std::string(name) + ": forest vertex of degree 3");
        if (!dsu.unite(ed.u, ed.v)) o.fail(std::string(name) + ": forest has a cycle");
      }
    }
    const auto r = irregular_doubling(g);
    const DiGraph& d = r.out<DiGraph>();
    if (!r.embedding || !genus_zero(d, *r.embedding)) {
      o.fail(std::string(name) + ": embedding is not planar");
      continue;
    }
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      const std::string p = pattern_at(*r.embedding, v);
      if (!cyclic_match(p, "--++-+") && !cyclic_match(p, "++--+-"))
        o.fail(std::string(name) + ": vertex " + std::to_string(v) + " has pattern " + p);
    }
  }
  if (o.ok) o.detail = "K4, prism, cube: every vertex irregular, genus 0";
  return o;
}

Outcome planar_dfvs() {
  Outcome o;
  const UGraph k4 = named::complete(4);
  const auto doubled = irregular_doubling(k4);
  const auto r = planar_dfvs_gadget(doubled.out<DiGraph>(), *doubled.embedding);
  const DiGraph& out = r.out<DiGraph>();
  const int want = 2 * k4.vertex_count() + oracle::vc(k4);
  if (out.vertex_count() != 11 * k4.vertex_count()) o.fail("output has " + std::to_string(out.vertex_count()) + " vertices");
  const auto yes = solve_exact(Instance{out, Problem::fvs, want});
  const auto no = solve_exact(Instance{out, Problem::fvs, want - 1});
  if (!yes.yes()) o.fail("no solution of size " + std::to_string(want));
  else if (!is_dag_without(out, yes.certificate) || static_cast<int>(yes.certificate.size()) > want)
    o.fail("certificate at " + std::to_string(want) + " does not check");
  if (no.yes()) o.fail("solution of size " + std::to_string(want - 1) + " found");
  const Deg dg = degrees(out);
  if (max_of(dg.in) > 2 || max_of(dg.out) > 2) o.fail("a vertex has in- or out-degree 3");
  if (!r.embedding || !genus_zero(out, *r.embedding)) o.fail("output embedding is not planar");
  if (o.ok)
    o.detail = "fvs = " + std::to_string(want) + " (yes at " + std::to_string(want) + ", no at " + std::to_string(want - 1) +
               "), 44 vertices";
  return o;
}

Outcome speckenmeyer() {
  Outcome o;
  std::vector<std::pair<std::string, UGraph>> inputs{{"W5", named::wheel(5)}, {"W6", named::wheel(6)}};
  Rng rng(707);
  for (int t = 0; static_cast<int>(inputs.size()) < 2 + kSpeckRandom && t < 10000; ++t) {
    UGraph g = gen::random_planar(rng.uniform(6, 8), 1, 5, rng);
    const int delta = max_of(degrees(g).total);
    if (delta < 5 || delta > 7) continue;
    inputs.emplace_back("random#" + std::to_string(t) + " delta=" + std::to_string(delta), std::move(g));
  }
  if (static_cast<int>(inputs.size()) != 2 + kSpeckRandom) o.fail("could not draw the random planar inputs");
  int gadgets = 0;
  for (const auto& [name, g] : inputs) {
    const auto r = speckenmeyer_reduce(g);
    const UGraph& out = r.out<UGraph>();
    if (r.budget.a != 1 || r.budget.b % 2 != 0 || r.budget.b <= 0) o.fail(name + ": budget map " + std::to_string(r.budget.a) + "k+" + std::to_string(r.budget.b));
    const int count = r.budget.b / 2;
    gadgets += count;
    const int want = oracle::fvs(g) + 2 * count;
    const int got = solve_exact(Instance{out, Problem::fvs, {}}, wide()).value;
    if (got != want) o.fail(name + ": fvs(G') " + std::to_string(got) + " vs " + std::to_string(want));
    if (max_of(degrees(out).total) > 4) o.fail(name + ": max degree > 4");
    if (!certified_embedding(out)) o.fail(name + ": output not planar");
  }
  if (o.ok) o.detail = std::to_string(inputs.size()) + " graphs, " + std::to_string(gadgets) + " gadgets";
  return o;
}

Outcome cfvs() {
  Outcome o;
  const UGraph p3 = named::path(3), tri = named::cycle(3);
  auto decide = [&](const UGraph& g, int k, const std::string& name, bool expect) {
    const auto r = cfvs_gadget(g, k);
    const bool in_yes = *oracle::cvc(g) <= k;
    const bool out_yes = solve_exact(Instance{r.output, Problem::cfvs, r.budget.apply(k)}).yes();
    if (in_yes != expect || out_yes != expect)
      o.fail(name + ": expected " + (expect ? "yes/yes" : "no/no") + ", got " + (in_yes ? "yes/" : "no/") + (out_yes ? "yes" : "no"));
    if (r.budget.apply(k) != 8) o.fail(name + ": k' = " + std::to_string(r.budget.apply(k)));
  };
  decide(p3, 1, "P3", true);
  decide(tri, 1, "triangle", false);

  auto lift_check = [&](const UGraph& g, int k, const std::vector<int>& s, const std::string& name) {
    const auto r = cfvs_gadget(g, k);
    const int kk = 8 * k + 8 * g.vertex_count() * (k - 1);
    const auto lifted = r.lift(s);
    if (static_cast<int>(lifted.size()) != kk) o.fail(name + ": lift size " + std::to_string(lifted.size()) + " != " + std::to_string(kk));
    if (!is_cfvs(std::get<UGraph>(r.output), lifted)) o.fail(name + ": lift is not a connected fvs");
  };
  lift_check(tri, 2, {0, 1}, "triangle k=2");

  // seeded (G, connected vertex cover) pairs
  Rng rng(808);
  std::vector<UGraph> pool{p3, tri, named::path(4), named::cycle(4), named::complete(4), named::wheel(4), named::cycle(5)};
  int pairs = 0;
  for (int t = 0; pairs < kCfvsPairs && t < 1000; ++t) {
    const UGraph& g = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))];
    const int n = g.vertex_count();
    std::vector<std::vector<int>> covers;
    for (std::uint32_t m = 1; m < (1U << n); ++m)
      if (std::popcount(m) < n && oracle::covers(g, m) && oracle::induces_connected(g, m)) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
          if ((m >> v) & 1U) s.push_back(v);
        covers.push_back(std::move(s));
      }
    if (covers.empty()) continue;
    const auto& s = covers[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(covers.size()) - 1))];
    const int k = rng.uniform(static_cast<int>(s.size()), n - 1);
    lift_check(g, k, s, "pair " + std::to_string(pairs));
    ++pairs;
  }
  if (pairs != kCfvsPairs) o.fail("drew " + std::to_string(pairs) + " pairs");
  if (o.ok) o.detail = "P3 yes/yes, triangle no/no, triangle k=2 lift of size 40, " + std::to_string(pairs) + " lifts";
  return o;
}

Outcome cubic_identity() {
  Outcome o;
  int count = 0;
  for (int n = 4; n <= kCubicMaxN; n += 2)
    for (const UGraph& g : gen::cubic_catalog(n)) {
      if (!oracle::induces_connected(g, (std::uint64_t{1} << n) - 1)) continue;
      ++count;
      const int f = oracle::fvs(g), c = *oracle::cvc(g);
      if (f != c - n / 2 + 1) o.fail("n=" + std::to_string(n) + ": fvs " + std::to_string(f) + ", cvc " + std::to_string(c));
      if (!check_cubic_identity(g).holds) o.fail("n=" + std::to_string(n) + ": library disagrees");
    }
  if (count != 1 + 2 + 5 + 19) o.fail("catalog has " + std::to_string(count) + " graphs");
  if (o.ok) o.detail = std::to_string(count) + " connected cubic graphs, n <= " + std::to_string(kCubicMaxN);
  return o;
}

Outcome classifier() {
  Outcome o;
  std::ifstream in(std::string(FBS_SOURCE_DIR) + "/tests/golden/classify.golden");
  if (!in) {
    o.fail("golden file missing");
    return o;
  }
  std::set<std::string> rows;
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    ++lines;
    std::istringstream is(line);
    std::string kind, prob, plan;
    Measured m;
    is >> kind >> prob >> plan >> m.max_degree >> m.sigma;
    m.directed = kind == "directed";
    m.planar = plan == "planar";
    const auto bar1 = line.find(" | "), bar2 = line.find(" | ", bar1 + 3);
    const std::string want_row = line.substr(bar1 + 3, bar2 - bar1 - 3), want = line.substr(bar2 + 3);
    const auto v = classify(*parse_problem(prob), m);
    const std::string got_row = v ? to_string(v->row) : "-", got = v ? to_string(v->verdict) : "-";
    if (got_row != want_row || got != want) o.fail(line + " -> " + got_row + " | " + got);
    if (v) rows.insert(got_row);
  }
  if (static_cast<int>(rows.size()) != landscape_row_count) o.fail(std::to_string(rows.size()) + " rows seen");
  if (o.ok) o.detail = std::to_string(lines) + " golden lines over " + std::to_string(rows.size()) + " rows";
  return o;
}

Outcome round_trip(const std::string& cli) {
  Outcome o;
  Rng rng(1111);
  for (int t = 0; t < kRoundTrips; ++t) {
    const int n = rng.uniform(1, 10);
    GraphFile f;
    if (t % 2) {
      DiGraph d = gen::random_digraph(n, 1, 3, rng);
      if (n > 1 && t % 3 == 0) d.add_edge(1, 1);
      const auto e = digraph_embedding(d);
      if (e.planar()) f.embedding = e.embedding;
      f.graph = std::move(d);
    } else {
      UGraph g = gen::random_planar(n, 1, 2, rng);
      if (n > 1 && t % 4 == 0) g.add_edge(0, 1);
      f.embedding = test_planarity(g).embedding;
      f.graph = std::move(g);
    }
    const std::string text = serialize_graph(f);
    const GraphFile back = parse_graph(text);
    const bool same_graph = back.graph == f.graph;
    bool same_emb = back.embedding.has_value() == f.embedding.has_value();
    if (same_emb && f.embedding)
      for (std::size_t v = 0; v < f.embedding->rotation.size(); ++v)
        same_emb = same_emb && std::ranges::equal(f.embedding->rotation[v], back.embedding->rotation[v]);
    if (!same_graph || !same_emb || serialize_graph(back) != text) o.fail("round trip " + std::to_string(t));
  }
  if (cli.empty()) {
    o.fail("no CLI path given");
    return o;
  }
  const std::string cmd = "'" + cli + "' verify --reduction split --trials 60 --max-n 7 --seed 42";
  int rc1 = 0, rc2 = 0;
  const std::string a = run_capture(cmd, rc1), b = run_capture(cmd, rc2);
  if (rc1 != 0 || rc2 != 0) o.fail("verify exited " + std::to_string(rc1) + "/" + std::to_string(rc2));
  if (a.empty() || a != b) o.fail("verify reports differ between runs");
  const std::string cmd2 = "'" + cli + "' verify --reduction speckenmeyer --trials 10 --max-n 8 --seed 9";
  const std::string c = run_capture(cmd2, rc1), d = run_capture(cmd2, rc2);
  if (rc1 != 0 || rc2 != 0 || c.empty() || c != d) o.fail("speckenmeyer verify not reproducible");

  // a file written by the CLI reads back to its own text
  const auto dir = std::filesystem::temp_directory_path() / ("fbs_acc_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string src = (dir / "w6.txt").string(), dst = (dir / "w6s.txt").string();
  {
    std::ofstream os(src);
    os << serialize_graph(AnyGraph{named::wheel(6)});
  }
  run_capture("'" + cli + "' transform --op speckenmeyer '" + src + "' --out '" + dst + "'", rc1);
  std::ifstream is(dst);
  std::stringstream ss;
  ss << is.rdbuf();
  try {
    if (rc1 != 0 || serialize_graph(parse_graph(ss.str())) != ss.str()) o.fail("CLI output does not round trip");
  } catch (const std::exception& e) {
    o.fail(std::string("CLI output unreadable: ") + e.what());
  }
  std::filesystem::remove_all(dir);
  if (o.ok) o.detail = std::to_string(kRoundTrips) + " round trips; two verify campaigns bit-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"splitting: fvs(D) = fas(split(D)), sigma <= 1", splitting},
      {"doubling: vc(G) = fvs(double(G)) in all modes, planarity kept", doubling},
      {"path-split gadget: fvs = fvs' = fas', degree <= 3, trimmed sides <= 2", path_split},
      {"max degree two: polynomial solver = exact", max_degree_two},
      {"irregular doubling: all vertices irregular, planar, linear forests", irregular},
      {"planar dfvs gadget on K4: fvs = 2n + vc", planar_dfvs},
      {"speckenmeyer gadget: fvs(G') = fvs(G) + 2 per gadget, degree <= 4, planar", speckenmeyer},
      {"connected fvs gadget: decision equivalence and lifts", cfvs},
      {"cubic identity: fvs = cvc - n/2 + 1", cubic_identity},
      {"classifier golden table", classifier},
      {"format round trip and reproducible verify", [&] { return round_trip(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.ok;
    std::printf("%s %2zu %s (%s) [%.1fs]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
