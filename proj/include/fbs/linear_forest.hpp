#pragma once

#include <string>
#include <vector>

#include "fbs/graph.hpp"

namespace fbs {

enum class ForestLabel : std::uint8_t { f1 = 1, f2 = 2 };

/// Partition of the edge set into two linear forests.
struct LinearForestCover {
  std::vector<ForestLabel> label;  // per edge id; dead edges keep f1

  std::vector<EdgeId> edges_of(ForestLabel l) const {
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < label.size(); ++e)
      if (label[e] == l) out.push_back(static_cast<EdgeId>(e));
    return out;
  }
};

/// True iff each label class has maximum degree two and no cycle.
inline bool is_valid_cover(const UGraph& g, const LinearForestCover& c, std::string* why = nullptr) {
  if (static_cast<int>(c.label.size()) != g.edge_count()) {
    if (why) *why = "label count differs from edge count";
    return false;
  }
  for (ForestLabel l : {ForestLabel::f1, ForestLabel::f2}) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!g.live(e) || c.label[static_cast<std::size_t>(e)] != l) continue;
      const Edge& ed = g.edge(e);
      if (++deg[static_cast<std::size_t>(ed.u)] > 2 || ++deg[static_cast<std::size_t>(ed.v)] > 2) {
        if (why) *why = "a vertex has three edges in one class";
        return false;
      }
      const int a = find(ed.u), b = find(ed.v);
      if (a == b) {
        if (why) *why = "a class contains a cycle";
        return false;
      }
      parent[static_cast<std::size_t>(a)] = b;
    }
  }
  return true;
}

namespace detail {

class ForestSearch {
 public:
  explicit ForestSearch(const UGraph& g) : g_(g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    for (int l = 0; l < 2; ++l) {
      deg_[l].assign(n, 0);
      partner_[l].resize(n);
      for (std::size_t v = 0; v < n; ++v) partner_[l][v] = static_cast<int>(v);
    }
    label_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.live(e)) order_.push_back(e);
  }

  bool run() { return assign(0); }

  LinearForestCover result() const {
    LinearForestCover c;
    c.label.resize(label_.size(), ForestLabel::f1);
    for (std::size_t e = 0; e < label_.size(); ++e)
      if (label_[e] == 2) c.label[e] = ForestLabel::f2;
    return c;
  }

 private:
  // partner_[l][v] is the other end of the class-l path that ends at v.
  bool can_place(int l, const Edge& ed) const {
    const auto u = static_cast<std::size_t>(ed.u), v = static_cast<std::size_t>(ed.v);
    if (deg_[l][u] >= 2 || deg_[l][v] >= 2) return false;
    return partner_[l][u] != ed.v;
  }

  struct Undo {
    int l, u, v, pu, pv;
  };

  Undo place(int l, EdgeId e) {
    const Edge& ed = g_.edge(e);
    auto& p = partner_[l];
    const int pu = p[static_cast<std::size_t>(ed.u)], pv = p[static_cast<std::size_t>(ed.v)];
    ++deg_[l][static_cast<std::size_t>(ed.u)];
    ++deg_[l][static_cast<std::size_t>(ed.v)];
    p[static_cast<std::size_t>(pu)] = pv;
    p[static_cast<std::size_t>(pv)] = pu;
    label_[static_cast<std::size_t>(e)] = l + 1;
    return {l, ed.u, ed.v, pu, pv};
  }

  void unplace(const Undo& x, EdgeId e) {
    auto& p = partner_[x.l];
    p[static_cast<std::size_t>(x.pu)] = x.u;
    p[static_cast<std::size_t>(x.pv)] = x.v;
    --deg_[x.l][static_cast<std::size_t>(x.u)];
    --deg_[x.l][static_cast<std::size_t>(x.v)];
    label_[static_cast<std::size_t>(e)] = 0;
  }

  // Remaining capacity check: a vertex with r unlabelled edges needs
  // r <= (2 - deg_f1) + (2 - deg_f2).
  bool capacity_ok(const Edge& ed) const {
    for (VertexId x : {ed.u, ed.v}) {
      const auto k = static_cast<std::size_t>(x);
      int free_edges = 0;
      for (const EdgeEnd& ee : g_.incidence(x))
        if (g_.live(ee.edge) && label_[static_cast<std::size_t>(ee.edge)] == 0) ++free_edges;
      if (free_edges > 4 - deg_[0][k] - deg_[1][k]) return false;
    }
    return true;
  }

  bool assign(std::size_t i) {
    if (i == order_.size()) return true;
    const EdgeId e = order_[i];
    const Edge& ed = g_.edge(e);
    if (ed.is_loop()) return false;
    for (int l = 0; l < 2; ++l) {
      if (!can_place(l, ed)) continue;
      const Undo u = place(l, e);
      if (capacity_ok(ed) && assign(i + 1)) return true;
      unplace(u, e);
    }
    return false;
  }

  const UGraph& g_;
  std::vector<int> deg_[2];
  std::vector<int> partner_[2];
  std::vector<int> label_;
  std::vector<EdgeId> order_;
};

}  // namespace detail

/// Two-linear-forest cover of a graph with maximum degree three, found by
/// backtracking over edge labels in id order (f1 tried first).
inline LinearForestCover linear_forest_cover(const UGraph& g) {
  if (degree_profile(g).max_degree > 3)
    throw graph_error("linear_forest_cover requires maximum degree at most 3");
  detail::ForestSearch search(g);
  if (!search.run()) throw graph_error("linear_forest_cover: no cover exists (self-loop present?)");
  return search.result();
}

}  // namespace fbs
