#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fbs/graph.hpp"
#include "fbs/solvers/problem.hpp"

namespace fbs {

namespace detail {

constexpr int kHopeless = std::numeric_limits<int>::max() / 4;

template <class T>
bool holds(const std::vector<T>& xs, const T& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

/// Decision procedure over a fixed graph. Items are vertex ids, or arc ids
/// of the original digraph for fas.
class Engine {
 public:
  virtual ~Engine() = default;
  virtual int items() const = 0;
  /// False only for items that belong to no minimum solution.
  virtual bool relevant(int item) const = 0;
  virtual int lower_bound() = 0;
  /// A solution of size <= k that contains `forced` and avoids `forbidden`.
  virtual std::optional<std::vector<int>> decide(int k, const std::vector<int>& forced,
                                                 const std::vector<char>& forbidden) = 0;

  std::uint64_t nodes = 0;
};

// ---------------------------------------------------------------------------
// Directed feedback vertex set

class DirectedFvs final : public Engine {
 public:
  explicit DirectedFvs(const DiGraph& d) : n_(d.vertex_count()) {
    const auto n = static_cast<std::size_t>(n_);
    base_.alive.assign(n, 0);
    base_.forb.assign(n, 0);
    base_.out.resize(n);
    base_.in.resize(n);
    for (VertexId v = 0; v < n_; ++v) base_.alive[static_cast<std::size_t>(v)] = d.alive(v) ? 1 : 0;
    for (EdgeId e = 0; e < d.edge_count(); ++e)
      if (d.live(e)) add_arc(base_, d.edge(e).u, d.edge(e).v);
    relevant_.assign(n, 0);
    for (VertexId v = 0; v < n_; ++v) relevant_[static_cast<std::size_t>(v)] = base_.alive[static_cast<std::size_t>(v)] && reaches_itself(v);
  }

  int items() const override { return n_; }
  bool relevant(int v) const override { return relevant_[static_cast<std::size_t>(v)] != 0; }

  int lower_bound() override {
    State s = base_;
    if (!reduce(s, kHopeless)) return kHopeless;
    const int p = packing(s);
    return p >= kHopeless ? kHopeless : static_cast<int>(s.taken.size()) + p;
  }

  std::optional<std::vector<int>> decide(int k, const std::vector<int>& forced,
                                         const std::vector<char>& forbidden) override {
    State s = base_;
    for (std::size_t v = 0; v < forbidden.size(); ++v) s.forb[v] = forbidden[v];
    for (int f : forced) take(s, f);
    if (static_cast<int>(s.taken.size()) > k) return std::nullopt;
    auto r = search(std::move(s), k);
    if (r) std::sort(r->begin(), r->end());
    return r;
  }

 private:
  struct State {
    std::vector<char> alive, forb;
    std::vector<std::vector<int>> out, in;
    std::vector<int> taken;
  };

  static void add_arc(State& s, int u, int v) {
    auto& o = s.out[static_cast<std::size_t>(u)];
    if (holds(o, v)) return;
    o.push_back(v);
    s.in[static_cast<std::size_t>(v)].push_back(u);
  }

  static void remove(State& s, int v) {
    const auto i = static_cast<std::size_t>(v);
    for (int w : s.out[i])
      if (w != v) std::erase(s.in[static_cast<std::size_t>(w)], v);
    for (int w : s.in[i])
      if (w != v) std::erase(s.out[static_cast<std::size_t>(w)], v);
    s.out[i].clear();
    s.in[i].clear();
    s.alive[i] = 0;
  }

  static void take(State& s, int v) {
    s.taken.push_back(v);
    if (s.alive[static_cast<std::size_t>(v)]) remove(s, v);
  }

  bool reaches_itself(int v) const {
    if (holds(base_.out[static_cast<std::size_t>(v)], v)) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack(base_.out[static_cast<std::size_t>(v)]);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == v) return true;
      if (seen[static_cast<std::size_t>(x)]) continue;
      seen[static_cast<std::size_t>(x)] = 1;
      for (int y : base_.out[static_cast<std::size_t>(x)]) stack.push_back(y);
    }
    return false;
  }

  // Loops are forced; sources and sinks vanish; a vertex with a single
  // in- or out-neighbour is merged into it whenever that neighbour may
  // stand in for it.
  bool reduce(State& s, int k) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        const auto i = static_cast<std::size_t>(v);
        if (!s.alive[i]) continue;
        if (holds(s.out[i], v)) {
          if (s.forb[i]) return false;
          take(s, v);
          changed = true;
        } else if (s.out[i].empty() || s.in[i].empty()) {
          remove(s, v);
          changed = true;
        } else if (s.in[i].size() == 1 && (s.forb[i] || !s.forb[static_cast<std::size_t>(s.in[i][0])])) {
          const int u = s.in[i][0];
          const auto outs = s.out[i];
          for (int w : outs) add_arc(s, u, w);
          remove(s, v);
          changed = true;
        } else if (s.out[i].size() == 1 && (s.forb[i] || !s.forb[static_cast<std::size_t>(s.out[i][0])])) {
          const int w = s.out[i][0];
          const auto ins = s.in[i];
          for (int x : ins) add_arc(s, x, w);
          remove(s, v);
          changed = true;
        }
      }
      if (static_cast<int>(s.taken.size()) > k) return false;
    }
    return true;
  }

  std::vector<int> short_cycle(const State& s, const std::vector<char>& mask) const {
    std::vector<int> best;
    std::vector<int> par(static_cast<std::size_t>(n_)), dist(static_cast<std::size_t>(n_));
    for (int src = 0; src < n_; ++src) {
      if (!mask[static_cast<std::size_t>(src)]) continue;
      std::fill(dist.begin(), dist.end(), -1);
      dist[static_cast<std::size_t>(src)] = 0;
      std::deque<int> q{src};
      int closer = -1;
      while (!q.empty() && closer < 0) {
        const int x = q.front();
        q.pop_front();
        if (!best.empty() && dist[static_cast<std::size_t>(x)] + 1 >= static_cast<int>(best.size())) break;
        for (int y : s.out[static_cast<std::size_t>(x)]) {
          if (!mask[static_cast<std::size_t>(y)]) continue;
          if (y == src) {
            closer = x;
            break;
          }
          if (dist[static_cast<std::size_t>(y)] < 0) {
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            par[static_cast<std::size_t>(y)] = x;
            q.push_back(y);
          }
        }
      }
      if (closer < 0) continue;
      std::vector<int> c;
      for (int x = closer; x != src; x = par[static_cast<std::size_t>(x)]) c.push_back(x);
      c.push_back(src);
      std::reverse(c.begin(), c.end());
      if (best.empty() || c.size() < best.size()) best = std::move(c);
      if (best.size() <= 2) break;
    }
    return best;
  }

  // Greedy vertex-disjoint cycle packing.
  int packing(const State& s) const {
    std::vector<char> mask = s.alive;
    int count = 0;
    for (;;) {
      const auto c = short_cycle(s, mask);
      if (c.empty()) return count;
      if (std::all_of(c.begin(), c.end(), [&](int v) { return s.forb[static_cast<std::size_t>(v)] != 0; }))
        return kHopeless;
      ++count;
      for (int v : c) mask[static_cast<std::size_t>(v)] = 0;
    }
  }

  std::optional<std::vector<int>> search(State s, int k) {
    ++nodes;
    if (!reduce(s, k)) return std::nullopt;
    const auto c = short_cycle(s, s.alive);
    if (c.empty()) return s.taken;
    std::vector<int> cand;
    for (int v : c)
      if (!s.forb[static_cast<std::size_t>(v)]) cand.push_back(v);
    const int used = static_cast<int>(s.taken.size());
    if (cand.empty() || used >= k) return std::nullopt;
    const int p = packing(s);
    if (p >= kHopeless || used + p > k) return std::nullopt;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      State child = s;
      for (std::size_t j = 0; j < i; ++j) child.forb[static_cast<std::size_t>(cand[j])] = 1;
      take(child, cand[i]);
      if (auto r = search(std::move(child), k)) return r;
    }
    return std::nullopt;
  }

  int n_;
  State base_;
  std::vector<char> relevant_;
};

/// Arc a -> arc b whenever head(a) = tail(b). Arc ids become vertex ids, so
/// a feedback arc set of d is a feedback vertex set of the result.
inline DiGraph line_digraph(const DiGraph& d) {
  DiGraph l(d.edge_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v)
    for (const auto& [a, _] : d.in_arcs(v))
      for (const auto& [b, __] : d.out_arcs(v)) l.add_edge(a, b);
  for (EdgeId e = 0; e < d.edge_count(); ++e)
    if (!d.live(e)) l.kill(e);
  return l;
}

// ---------------------------------------------------------------------------
// Undirected feedback vertex set

class UndirectedFvs final : public Engine {
 public:
  explicit UndirectedFvs(const UGraph& g) : n_(g.vertex_count()) {
    const auto n = static_cast<std::size_t>(n_);
    base_.alive.assign(n, 0);
    base_.forb.assign(n, 0);
    base_.loop.assign(n, 0);
    base_.adj.resize(n);
    for (VertexId v = 0; v < n_; ++v) base_.alive[static_cast<std::size_t>(v)] = g.alive(v) ? 1 : 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.live(e)) add_edge(base_, g.edge(e).u, g.edge(e).v);
    relevant_.assign(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!g.live(e)) continue;
      if (on_cycle(g, e)) {
        relevant_[static_cast<std::size_t>(g.edge(e).u)] = 1;
        relevant_[static_cast<std::size_t>(g.edge(e).v)] = 1;
      }
    }
  }

  int items() const override { return n_; }
  bool relevant(int v) const override { return relevant_[static_cast<std::size_t>(v)] != 0; }

  int lower_bound() override {
    State s = base_;
    if (!reduce(s, kHopeless)) return kHopeless;
    const int b = bound(s);
    return b >= kHopeless ? kHopeless : static_cast<int>(s.taken.size()) + b;
  }

  std::optional<std::vector<int>> decide(int k, const std::vector<int>& forced,
                                         const std::vector<char>& forbidden) override {
    State s = base_;
    for (std::size_t v = 0; v < forbidden.size(); ++v) s.forb[v] = forbidden[v];
    for (int f : forced) take(s, f);
    if (static_cast<int>(s.taken.size()) > k) return std::nullopt;
    auto r = search(std::move(s), k);
    if (r) std::sort(r->begin(), r->end());
    return r;
  }

 private:
  // Neighbour multisets with multiplicity capped at two; loops kept apart.
  struct State {
    std::vector<char> alive, forb, loop;
    std::vector<std::vector<int>> adj;
    std::vector<int> taken;
  };

  static bool on_cycle(const UGraph& g, EdgeId skip) {
    const Edge& ed = g.edge(skip);
    if (ed.is_loop()) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<VertexId> stack{ed.u};
    seen[static_cast<std::size_t>(ed.u)] = 1;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (const auto& [e, y] : g.out_arcs(x)) {
        if (e == skip || seen[static_cast<std::size_t>(y)]) continue;
        if (y == ed.v) return true;
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
    return false;
  }

  static void add_edge(State& s, int a, int b) {
    if (a == b) {
      s.loop[static_cast<std::size_t>(a)] = 1;
      return;
    }
    auto& la = s.adj[static_cast<std::size_t>(a)];
    if (std::count(la.begin(), la.end(), b) >= 2) return;
    la.push_back(b);
    s.adj[static_cast<std::size_t>(b)].push_back(a);
  }

  static void remove(State& s, int v) {
    const auto i = static_cast<std::size_t>(v);
    for (int w : s.adj[i]) std::erase(s.adj[static_cast<std::size_t>(w)], v);
    s.adj[i].clear();
    s.alive[i] = 0;
  }

  static void take(State& s, int v) {
    s.taken.push_back(v);
    if (s.alive[static_cast<std::size_t>(v)]) remove(s, v);
  }

  bool reduce(State& s, int k) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        const auto i = static_cast<std::size_t>(v);
        if (!s.alive[i]) continue;
        const auto& a = s.adj[i];
        if (s.loop[i]) {
          if (s.forb[i]) return false;
          take(s, v);
          changed = true;
        } else if (a.size() <= 1) {
          remove(s, v);
          changed = true;
        } else if (a.size() == 2) {
          const int x = a[0], y = a[1];
          if (x == y) {
            if (!s.forb[static_cast<std::size_t>(x)]) take(s, x);
            else if (!s.forb[i]) take(s, v);
            else return false;
            changed = true;
          } else if (s.forb[i] || !s.forb[static_cast<std::size_t>(x)] || !s.forb[static_cast<std::size_t>(y)]) {
            remove(s, v);
            add_edge(s, x, y);
            changed = true;
          }
        }
      }
      if (static_cast<int>(s.taken.size()) > k) return false;
    }
    return true;
  }

  std::vector<int> short_cycle(const State& s, const std::vector<char>& mask) const {
    for (int v = 0; v < n_; ++v) {
      if (!mask[static_cast<std::size_t>(v)]) continue;
      const auto& a = s.adj[static_cast<std::size_t>(v)];
      for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = p + 1; q < a.size(); ++q)
          if (a[p] == a[q] && mask[static_cast<std::size_t>(a[p])]) return {v, a[p]};
    }
    std::vector<int> best;
    std::vector<int> par(static_cast<std::size_t>(n_)), dist(static_cast<std::size_t>(n_));
    for (int src = 0; src < n_; ++src) {
      if (!mask[static_cast<std::size_t>(src)]) continue;
      std::fill(dist.begin(), dist.end(), -1);
      dist[static_cast<std::size_t>(src)] = 0;
      par[static_cast<std::size_t>(src)] = -1;
      std::deque<int> q{src};
      while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        if (!best.empty() && 2 * dist[static_cast<std::size_t>(x)] + 1 >= static_cast<int>(best.size())) break;
        for (int y : s.adj[static_cast<std::size_t>(x)]) {
          if (!mask[static_cast<std::size_t>(y)] || y == par[static_cast<std::size_t>(x)]) continue;
          if (dist[static_cast<std::size_t>(y)] < 0) {
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            par[static_cast<std::size_t>(y)] = x;
            q.push_back(y);
            continue;
          }
          const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
          if (!best.empty() && len >= static_cast<int>(best.size())) continue;
          std::vector<int> left{x}, right{y};
          int a = x, b = y;
          while (a != b) {
            if (dist[static_cast<std::size_t>(a)] >= dist[static_cast<std::size_t>(b)]) {
              a = par[static_cast<std::size_t>(a)];
              left.push_back(a);
            } else {
              b = par[static_cast<std::size_t>(b)];
              right.push_back(b);
            }
          }
          right.pop_back();  // lca already in left
          std::vector<int> c(left.rbegin(), left.rend());
          c.insert(c.end(), right.begin(), right.end());
          best = std::move(c);
        }
      }
      if (best.size() == 3) break;
    }
    return best;
  }

  int packing(const State& s) const {
    std::vector<char> mask = s.alive;
    int count = 0;
    for (;;) {
      const auto c = short_cycle(s, mask);
      if (c.empty()) return count;
      if (std::all_of(c.begin(), c.end(), [&](int v) { return s.forb[static_cast<std::size_t>(v)] != 0; }))
        return kHopeless;
      ++count;
      for (int v : c) mask[static_cast<std::size_t>(v)] = 0;
    }
  }

  // Deleting S leaves a forest: sum over S of (d(v) - 1) >= m - n.
  int degree_bound(const State& s) const {
    int n = 0, ends = 0;
    std::vector<int> d;
    for (int v = 0; v < n_; ++v) {
      const auto i = static_cast<std::size_t>(v);
      if (!s.alive[i]) continue;
      ++n;
      const int deg = static_cast<int>(s.adj[i].size());
      ends += deg;
      if (!s.forb[i]) d.push_back(deg);
    }
    int need = ends / 2 - n;
    if (need <= 0) return 0;
    std::sort(d.rbegin(), d.rend());
    int t = 0;
    for (int deg : d) {
      ++t;
      need -= deg - 1;
      if (need <= 0) return t;
    }
    return kHopeless;
  }

  int bound(const State& s) const { return std::max(packing(s), degree_bound(s)); }

  std::optional<std::vector<int>> search(State s, int k) {
    ++nodes;
    if (!reduce(s, k)) return std::nullopt;
    const auto c = short_cycle(s, s.alive);
    if (c.empty()) return s.taken;
    std::vector<int> cand;
    for (int v : c)
      if (!s.forb[static_cast<std::size_t>(v)]) cand.push_back(v);
    const int used = static_cast<int>(s.taken.size());
    if (cand.empty() || used >= k) return std::nullopt;
    const int b = bound(s);
    if (b >= kHopeless || used + b > k) return std::nullopt;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      State child = s;
      for (std::size_t j = 0; j < i; ++j) child.forb[static_cast<std::size_t>(cand[j])] = 1;
      take(child, cand[i]);
      if (auto r = search(std::move(child), k)) return r;
    }
    return std::nullopt;
  }

  int n_;
  State base_;
  std::vector<char> relevant_;
};

// ---------------------------------------------------------------------------
// Vertex cover

class VertexCover final : public Engine {
 public:
  explicit VertexCover(const UGraph& g) : n_(g.vertex_count()) {
    const auto n = static_cast<std::size_t>(n_);
    base_.alive.assign(n, 0);
    base_.forb.assign(n, 0);
    base_.loop.assign(n, 0);
    base_.adj.resize(n);
    for (VertexId v = 0; v < n_; ++v) base_.alive[static_cast<std::size_t>(v)] = g.alive(v) ? 1 : 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!g.live(e)) continue;
      const auto [u, v] = g.edge(e);
      if (u == v) {
        base_.loop[static_cast<std::size_t>(u)] = 1;
      } else if (!holds(base_.adj[static_cast<std::size_t>(u)], v)) {
        base_.adj[static_cast<std::size_t>(u)].push_back(v);
        base_.adj[static_cast<std::size_t>(v)].push_back(u);
      }
    }
  }

  int items() const override { return n_; }
  bool relevant(int v) const override {
    const auto i = static_cast<std::size_t>(v);
    return base_.alive[i] && (base_.loop[i] || !base_.adj[i].empty());
  }

  int lower_bound() override {
    State s = base_;
    if (!reduce(s, kHopeless)) return kHopeless;
    return static_cast<int>(s.taken.size()) + matching(s);
  }

  std::optional<std::vector<int>> decide(int k, const std::vector<int>& forced,
                                         const std::vector<char>& forbidden) override {
    State s = base_;
    for (std::size_t v = 0; v < forbidden.size(); ++v) s.forb[v] = forbidden[v];
    for (int f : forced) take(s, f);
    if (static_cast<int>(s.taken.size()) > k) return std::nullopt;
    auto r = search(std::move(s), k);
    if (r) std::sort(r->begin(), r->end());
    return r;
  }

 private:
  struct State {
    std::vector<char> alive, forb, loop;
    std::vector<std::vector<int>> adj;
    std::vector<int> taken;
  };

  static void remove(State& s, int v) {
    const auto i = static_cast<std::size_t>(v);
    for (int w : s.adj[i]) std::erase(s.adj[static_cast<std::size_t>(w)], v);
    s.adj[i].clear();
    s.alive[i] = 0;
  }

  static void take(State& s, int v) {
    s.taken.push_back(v);
    if (s.alive[static_cast<std::size_t>(v)]) remove(s, v);
  }

  bool reduce(State& s, int k) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n_; ++v) {
        const auto i = static_cast<std::size_t>(v);
        if (!s.alive[i]) continue;
        if (s.loop[i]) {
          if (s.forb[i]) return false;
          take(s, v);
          changed = true;
        } else if (s.adj[i].empty()) {
          remove(s, v);
          changed = true;
        } else if (s.forb[i]) {
          const auto nb = s.adj[i];
          for (int w : nb) {
            if (s.forb[static_cast<std::size_t>(w)]) return false;
            take(s, w);
          }
          changed = true;
        } else if (s.adj[i].size() == 1) {
          const int u = s.adj[i][0];
          take(s, s.forb[static_cast<std::size_t>(u)] ? v : u);
          changed = true;
        }
      }
      if (static_cast<int>(s.taken.size()) > k) return false;
    }
    return true;
  }

  int matching(const State& s) const {
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    int m = 0;
    for (int v = 0; v < n_; ++v) {
      if (!s.alive[static_cast<std::size_t>(v)] || used[static_cast<std::size_t>(v)]) continue;
      for (int w : s.adj[static_cast<std::size_t>(v)])
        if (!used[static_cast<std::size_t>(w)]) {
          used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = 1;
          ++m;
          break;
        }
    }
    return m;
  }

  std::optional<std::vector<int>> search(State s, int k) {
    ++nodes;
    if (!reduce(s, k)) return std::nullopt;
    int pick = -1;
    std::size_t best = 0;
    for (int v = 0; v < n_; ++v) {
      const auto i = static_cast<std::size_t>(v);
      if (s.alive[i] && s.adj[i].size() > best) {
        best = s.adj[i].size();
        pick = v;
      }
    }
    if (pick < 0) return s.taken;
    const int used = static_cast<int>(s.taken.size());
    if (used >= k || used + matching(s) > k) return std::nullopt;
    {
      State child = s;
      take(child, pick);
      if (auto r = search(std::move(child), k)) return r;
    }
    s.forb[static_cast<std::size_t>(pick)] = 1;
    return search(std::move(s), k);
  }

  int n_;
  State base_;
};

// ---------------------------------------------------------------------------
// Connected variants: grow a connected set from a root.

class ConnectedEngine final : public Engine {
 public:
  ConnectedEngine(const UGraph& g, bool fvs) : g_(g), fvs_(fvs), n_(g.vertex_count()) {
    nb_.resize(static_cast<std::size_t>(n_));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!g.live(e)) continue;
      const auto [u, v] = g.edge(e);
      if (u == v || holds(nb_[static_cast<std::size_t>(u)], v)) continue;
      nb_[static_cast<std::size_t>(u)].push_back(v);
      nb_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& l : nb_) std::sort(l.begin(), l.end());
  }

  int items() const override { return n_; }
  bool relevant(int v) const override { return g_.alive(v); }
  int lower_bound() override { return feasible(std::vector<char>(static_cast<std::size_t>(n_), 0)) ? 0 : 1; }

  /// True iff some connected solution exists: every obstacle lies in one component.
  bool solvable() const {
    std::vector<char> none(static_cast<std::size_t>(n_), 0);
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    int c = 0;
    for (int v = 0; v < n_; ++v) {
      if (!g_.alive(v) || comp[static_cast<std::size_t>(v)] >= 0) continue;
      std::vector<int> stack{v};
      comp[static_cast<std::size_t>(v)] = c;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : nb_[static_cast<std::size_t>(x)])
          if (comp[static_cast<std::size_t>(y)] < 0) {
            comp[static_cast<std::size_t>(y)] = c;
            stack.push_back(y);
          }
      }
      ++c;
    }
    int owner = -1;
    for (int k = 0; k < c; ++k) {
      std::vector<char> outside(static_cast<std::size_t>(n_), 0);
      for (int v = 0; v < n_; ++v) outside[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(v)] != k;
      if (!feasible_without(outside, none)) {
        if (owner >= 0) return false;
        owner = k;
      }
    }
    return true;
  }

  std::optional<std::vector<int>> decide(int k, const std::vector<int>& forced,
                                         const std::vector<char>& forbidden) override {
    const auto n = static_cast<std::size_t>(n_);
    forced_ = forced;
    std::vector<char> in(n, 0);
    if (forced.empty() && feasible(in)) return std::vector<int>{};
    if (k <= 0) return std::nullopt;
    excl_.assign(n, 0);
    for (std::size_t v = 0; v < forbidden.size() && v < n; ++v) excl_[v] = forbidden[v];
    std::vector<int> roots;
    if (!forced.empty()) roots.push_back(*std::min_element(forced.begin(), forced.end()));
    else
      for (int v = 0; v < n_; ++v) roots.push_back(v);
    for (int r : roots) {
      if (!g_.alive(r) || excl_[static_cast<std::size_t>(r)]) {
        if (forced.empty()) continue;
        return std::nullopt;
      }
      std::vector<char> saved = excl_;
      if (forced.empty())
        for (int v = 0; v < r; ++v) excl_[static_cast<std::size_t>(v)] = 1;
      in.assign(n, 0);
      in[static_cast<std::size_t>(r)] = 1;
      std::vector<int> set{r};
      if (grow(set, in, k)) {
        std::sort(set.begin(), set.end());
        return set;
      }
      excl_ = std::move(saved);
    }
    return std::nullopt;
  }

 private:
  // Every edge covered (vc) or no cycle left (fvs) once `gone` is deleted.
  bool feasible_without(const std::vector<char>& gone, const std::vector<char>& extra) const {
    auto out = [&](int v) { return gone[static_cast<std::size_t>(v)] || extra[static_cast<std::size_t>(v)]; };
    if (!fvs_) {
      for (EdgeId e = 0; e < g_.edge_count(); ++e)
        if (g_.live(e) && !out(g_.edge(e).u) && !out(g_.edge(e).v)) return false;
      return true;
    }
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (!g_.live(e)) continue;
      const auto [u, v] = g_.edge(e);
      if (out(u) || out(v)) continue;
      const int a = find(u), b = find(v);
      if (a == b) return false;
      parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
  }

  bool feasible(const std::vector<char>& in) const {
    return feasible_without(in, std::vector<char>(static_cast<std::size_t>(n_), 0));
  }

  bool grow(std::vector<int>& set, std::vector<char>& in, int k) {
    ++nodes;
    const bool all_forced =
        std::all_of(forced_.begin(), forced_.end(), [&](int f) { return in[static_cast<std::size_t>(f)] != 0; });
    if (all_forced && feasible(in)) return true;
    const int rem = k - static_cast<int>(set.size());
    if (rem <= 0) return false;

    // Vertices a connected extension of at most `rem` vertices can reach.
    const auto n = static_cast<std::size_t>(n_);
    std::vector<int> dist(n, -1);
    std::deque<int> q;
    for (int v : set) {
      dist[static_cast<std::size_t>(v)] = 0;
      q.push_back(v);
    }
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      if (dist[static_cast<std::size_t>(x)] == rem) continue;
      for (int y : nb_[static_cast<std::size_t>(x)]) {
        const auto j = static_cast<std::size_t>(y);
        if (dist[j] >= 0 || excl_[j] || !g_.alive(y)) continue;
        dist[j] = dist[static_cast<std::size_t>(x)] + 1;
        q.push_back(y);
      }
    }
    for (int f : forced_)
      if (dist[static_cast<std::size_t>(f)] < 0) return false;
    std::vector<char> reach(n, 0);
    for (std::size_t v = 0; v < n; ++v) reach[v] = dist[v] >= 0;
    if (!feasible(reach)) return false;

    int pick = -1;
    for (int v = 0; v < n_ && pick < 0; ++v)
      if (dist[static_cast<std::size_t>(v)] == 1) pick = v;
    if (pick < 0) return false;
    const auto p = static_cast<std::size_t>(pick);

    in[p] = 1;
    set.push_back(pick);
    if (grow(set, in, k)) return true;
    set.pop_back();
    in[p] = 0;

    excl_[p] = 1;
    const bool ok = grow(set, in, k);
    excl_[p] = 0;
    return ok;
  }

  UGraph g_;
  bool fvs_;
  int n_;
  std::vector<std::vector<int>> nb_;
  std::vector<int> forced_;
  std::vector<char> excl_;
};

inline void check_envelope(const Instance& inst, int live_vertices, const Envelope& env) {
  if (inst.budget) {
    if (*inst.budget > env.decision_budget || live_vertices > env.decision_vertices)
      throw envelope_error("instance outside the solver envelope (" + env.describe() + "): budget " +
                           std::to_string(*inst.budget) + " on " + std::to_string(live_vertices) + " vertices");
    return;
  }
  const int limit = is_connected_variant(inst.problem) ? env.connected_optimum_vertices : env.optimum_vertices;
  if (live_vertices > limit)
    throw envelope_error("instance outside the solver envelope (" + env.describe() + "): " +
                         std::to_string(live_vertices) + " vertices");
}

/// Smallest id set in lexicographic order among optimal solutions, built one
/// id at a time from a known optimal witness.
inline std::vector<int> canonical_certificate(Engine& eng, int opt, std::vector<int> witness) {
  const auto n = static_cast<std::size_t>(eng.items());
  std::vector<int> chosen;
  std::vector<char> banned(n, 0);
  for (int v = 0; v < eng.items() && static_cast<int>(chosen.size()) < opt; ++v) {
    if (!eng.relevant(v)) {
      banned[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    if (std::binary_search(witness.begin(), witness.end(), v)) {
      chosen.push_back(v);
      continue;
    }
    std::vector<int> trial = chosen;
    trial.push_back(v);
    if (auto r = eng.decide(opt, trial, banned)) {
      chosen = std::move(trial);
      witness = std::move(*r);
    } else {
      banned[static_cast<std::size_t>(v)] = 1;
    }
  }
  return chosen;
}

inline std::unique_ptr<Engine> make_engine(const Instance& inst) {
  if (const auto* d = std::get_if<DiGraph>(&inst.graph)) {
    switch (inst.problem) {
      case Problem::fvs: return std::make_unique<DirectedFvs>(*d);
      case Problem::fas: return std::make_unique<DirectedFvs>(line_digraph(*d));
      case Problem::vc: return std::make_unique<VertexCover>(underlying(*d));
      default: break;
    }
    throw kind_error(std::string(to_string(inst.problem)) + " requires an undirected graph");
  }
  const auto& g = std::get<UGraph>(inst.graph);
  switch (inst.problem) {
    case Problem::fvs: return std::make_unique<UndirectedFvs>(g);
    case Problem::vc: return std::make_unique<VertexCover>(g);
    case Problem::cvc: return std::make_unique<ConnectedEngine>(g, false);
    case Problem::cfvs: return std::make_unique<ConnectedEngine>(g, true);
    case Problem::fas: break;
  }
  throw kind_error("fas requires a directed graph");
}

}  // namespace detail

/// Exact optimum (or decision at `inst.budget`) by branch and bound.
/// Throws envelope_error instead of attempting an instance beyond the limits.
inline SolveResult solve_exact(const Instance& inst, const SolveOptions& opts = {}) {
  check_kind(inst);
  if (inst.budget && *inst.budget < 0) throw std::invalid_argument("budget must be non-negative");
  const int live = std::visit([](const auto& g) { return g.live_vertex_count(); }, inst.graph);
  detail::check_envelope(inst, live, opts.envelope);

  auto eng = detail::make_engine(inst);
  SolveResult res;
  if (is_connected_variant(inst.problem) && !static_cast<detail::ConnectedEngine&>(*eng).solvable()) {
    res.verdict = Verdict::infeasible;
    res.value = inst.budget.value_or(0);
    return res;
  }
  const std::vector<char> none(static_cast<std::size_t>(eng->items()), 0);

  if (inst.budget) {
    res.value = *inst.budget;
    if (auto r = eng->decide(*inst.budget, {}, none)) {
      res.verdict = Verdict::yes;
      res.certificate = std::move(*r);
    } else {
      res.verdict = Verdict::no;
    }
    res.explored = eng->nodes;
    return res;
  }

  const int lb = std::max(0, std::min(eng->lower_bound(), eng->items()));
  for (int k = lb; k <= eng->items(); ++k) {
    if (auto r = eng->decide(k, {}, none)) {
      res.value = k;
      res.certificate = opts.canonical ? detail::canonical_certificate(*eng, k, std::move(*r)) : std::move(*r);
      res.explored = eng->nodes;
      return res;
    }
  }
  res.verdict = Verdict::infeasible;
  res.explored = eng->nodes;
  return res;
}

template <Graph G>
SolveResult solve_exact(const G& g, Problem p, std::optional<int> budget = std::nullopt, const SolveOptions& opts = {}) {
  return solve_exact(Instance{g, p, budget}, opts);
}

}  // namespace fbs
