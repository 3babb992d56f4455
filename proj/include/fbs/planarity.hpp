#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "fbs/embedding.hpp"
#include "fbs/graph.hpp"

namespace fbs {

struct NonPlanar {};

/// Either a certified plane rotation system or a non-planar verdict.
struct PlanarityResult {
  std::optional<Embedding> embedding;

  bool planar() const noexcept { return embedding.has_value(); }
  explicit operator bool() const noexcept { return planar(); }
};

namespace detail {

/// Simple graph on adjacency lists; each neighbour entry remembers the
/// multigraph edge-end it stands for when seen from an original vertex.
struct SimpleGraph {
  std::vector<std::vector<int>> adj;
};

/// Path-addition embedder for one biconnected simple block with at least
/// three vertices. Returns faces as cyclic vertex sequences with consistent
/// orientation, or nothing when the block is non-planar.
inline std::optional<std::vector<std::vector<int>>> embed_block(const std::vector<int>& verts,
                                                                const std::vector<std::pair<int, int>>& edges,
                                                                int universe) {
  const auto U = static_cast<std::size_t>(universe);
  const int nv = static_cast<int>(verts.size());
  const int ne = static_cast<int>(edges.size());
  if (nv >= 3 && ne > 3 * nv - 6) return std::nullopt;

  std::vector<std::vector<std::pair<int, int>>> adj(U);  // (neighbour, block edge index)
  for (int i = 0; i < ne; ++i) {
    adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].first)].emplace_back(edges[static_cast<std::size_t>(i)].second, i);
    adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].second)].emplace_back(edges[static_cast<std::size_t>(i)].first, i);
  }

  // Initial cycle by DFS until the first back edge.
  std::vector<int> parent(U, -2), depth(U, -1);
  std::vector<int> cycle;
  {
    const int root = verts.front();
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    parent[static_cast<std::size_t>(root)] = -1;
    depth[static_cast<std::size_t>(root)] = 0;
    while (!stack.empty() && cycle.empty()) {
      auto& [v, it] = stack.back();
      const auto& nb = adj[static_cast<std::size_t>(v)];
      if (it == nb.size()) {
        stack.pop_back();
        continue;
      }
      const int w = nb[it++].first;
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      if (depth[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = v;
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        stack.emplace_back(w, 0);
      } else if (depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(v)]) {
        for (int x = v; x != w; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
      }
    }
  }
  if (cycle.empty()) return std::nullopt;  // not a biconnected block

  std::vector<char> in_h(U, 0), edge_in(static_cast<std::size_t>(ne), 0);
  auto edge_index = [&](int a, int b) {
    for (const auto& [w, i] : adj[static_cast<std::size_t>(a)])
      if (w == b) return i;
    return -1;
  };
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    in_h[static_cast<std::size_t>(cycle[i])] = 1;
    edge_in[static_cast<std::size_t>(edge_index(cycle[i], cycle[(i + 1) % cycle.size()]))] = 1;
  }
  std::vector<std::vector<int>> faces{cycle, std::vector<int>(cycle.rbegin(), cycle.rend())};
  int embedded_edges = static_cast<int>(cycle.size());

  struct Fragment {
    std::vector<int> attachments;  // sorted, unique
    int edge = -1;                 // single-edge fragment
    int comp = -1;                 // component label otherwise
  };

  std::vector<int> comp(U, -1);
  while (embedded_edges < ne) {
    // Fragments relative to the embedded subgraph.
    std::vector<Fragment> frags;
    for (int i = 0; i < ne; ++i) {
      const auto& [a, b] = edges[static_cast<std::size_t>(i)];
      if (!edge_in[static_cast<std::size_t>(i)] && in_h[static_cast<std::size_t>(a)] && in_h[static_cast<std::size_t>(b)])
        frags.push_back({{std::min(a, b), std::max(a, b)}, i, -1});
    }
    for (int v : verts) comp[static_cast<std::size_t>(v)] = -1;
    int ncomp = 0;
    for (int s : verts) {
      if (in_h[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
      Fragment f;
      f.comp = ncomp;
      std::vector<int> stack{s};
      comp[static_cast<std::size_t>(s)] = ncomp;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [w, i] : adj[static_cast<std::size_t>(v)]) {
          if (in_h[static_cast<std::size_t>(w)]) {
            f.attachments.push_back(w);
          } else if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = ncomp;
            stack.push_back(w);
          }
        }
      }
      std::sort(f.attachments.begin(), f.attachments.end());
      f.attachments.erase(std::unique(f.attachments.begin(), f.attachments.end()), f.attachments.end());
      frags.push_back(std::move(f));
      ++ncomp;
    }

    // Admissible faces.
    std::vector<char> on_face(U, 0);
    int chosen = -1, chosen_face = -1;
    int first_face_of_first = -1;
    for (std::size_t fi = 0; fi < frags.size(); ++fi) {
      int count = 0, any = -1;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        for (int v : faces[k]) on_face[static_cast<std::size_t>(v)] = 1;
        bool ok = true;
        for (int a : frags[fi].attachments)
          if (!on_face[static_cast<std::size_t>(a)]) {
            ok = false;
            break;
          }
        for (int v : faces[k]) on_face[static_cast<std::size_t>(v)] = 0;
        if (ok) {
          ++count;
          if (any < 0) any = static_cast<int>(k);
        }
      }
      if (count == 0) return std::nullopt;
      if (count == 1 && chosen < 0) {
        chosen = static_cast<int>(fi);
        chosen_face = any;
      }
      if (fi == 0) first_face_of_first = any;
    }
    if (chosen < 0) {
      chosen = 0;
      chosen_face = first_face_of_first;
    }

    // A path through the fragment between two distinct attachments.
    const Fragment& fr = frags[static_cast<std::size_t>(chosen)];
    std::vector<int> path;
    if (fr.edge >= 0) {
      path = {edges[static_cast<std::size_t>(fr.edge)].first, edges[static_cast<std::size_t>(fr.edge)].second};
    } else {
      const int a = fr.attachments.front();
      int start = -1;
      for (const auto& [w, i] : adj[static_cast<std::size_t>(a)])
        if (!in_h[static_cast<std::size_t>(w)] && comp[static_cast<std::size_t>(w)] == fr.comp) {
          start = w;
          break;
        }
      std::vector<int> prev(U, -2);
      std::vector<int> queue{start};
      prev[static_cast<std::size_t>(start)] = -1;
      int end_inner = -1, end_att = -1;
      for (std::size_t qi = 0; qi < queue.size() && end_inner < 0; ++qi) {
        const int v = queue[qi];
        for (const auto& [w, i] : adj[static_cast<std::size_t>(v)]) {
          if (in_h[static_cast<std::size_t>(w)]) {
            if (w != a) {
              end_inner = v;
              end_att = w;
              break;
            }
          } else if (prev[static_cast<std::size_t>(w)] == -2) {
            prev[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
          }
        }
      }
      if (end_inner < 0) return std::nullopt;  // block not biconnected
      std::vector<int> inner;
      for (int x = end_inner; x != -1; x = prev[static_cast<std::size_t>(x)]) inner.push_back(x);
      std::reverse(inner.begin(), inner.end());
      path.push_back(a);
      path.insert(path.end(), inner.begin(), inner.end());
      path.push_back(end_att);
    }

    // Split the face along the path.
    auto& face = faces[static_cast<std::size_t>(chosen_face)];
    const int a = path.front(), b = path.back();
    const auto L = face.size();
    const auto ia = static_cast<std::size_t>(std::find(face.begin(), face.end(), a) - face.begin());
    const auto ib = static_cast<std::size_t>(std::find(face.begin(), face.end(), b) - face.begin());
    std::vector<int> f1, f2;
    for (std::size_t k = ia;; k = (k + 1) % L) {
      f1.push_back(face[k]);
      if (k == ib) break;
    }
    for (std::size_t k = path.size() - 2; k >= 1; --k) f1.push_back(path[k]);
    for (std::size_t k = ib;; k = (k + 1) % L) {
      f2.push_back(face[k]);
      if (k == ia) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);
    face = std::move(f1);
    faces.push_back(std::move(f2));

    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      in_h[static_cast<std::size_t>(path[k])] = 1;
      edge_in[static_cast<std::size_t>(edge_index(path[k], path[k + 1]))] = 1;
      ++embedded_edges;
    }
    in_h[static_cast<std::size_t>(path.back())] = 1;
  }
  return faces;
}

/// Biconnected blocks of a simple graph, as edge lists (Hopcroft-Tarjan).
inline std::vector<std::vector<std::pair<int, int>>> blocks(const std::vector<std::vector<int>>& adj) {
  const auto n = adj.size();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> out;
  int timer = 0;
  struct Frame {
    int v, parent;
    std::size_t it;
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack{{static_cast<int>(s), -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto v = static_cast<std::size_t>(f.v);
      if (f.it < adj[v].size()) {
        const int w = adj[v][f.it++];
        const auto wu = static_cast<std::size_t>(w);
        if (w == f.parent) continue;
        if (disc[wu] < 0) {
          estack.emplace_back(f.v, w);
          disc[wu] = low[wu] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (disc[wu] < disc[v]) {
          estack.emplace_back(f.v, w);
          low[v] = std::min(low[v], disc[wu]);
        }
      } else {
        const int child = f.v;
        stack.pop_back();
        if (stack.empty()) break;
        const int par = stack.back().v;
        const auto pu = static_cast<std::size_t>(par);
        low[pu] = std::min(low[pu], low[static_cast<std::size_t>(child)]);
        if (low[static_cast<std::size_t>(child)] >= disc[pu]) {
          std::vector<std::pair<int, int>> blk;
          while (true) {
            auto e = estack.back();
            estack.pop_back();
            blk.push_back(e);
            if (e.first == par && e.second == child) break;
          }
          out.push_back(std::move(blk));
        }
      }
    }
  }
  return out;
}

/// Rotation (cyclic neighbour order) of every vertex of a simple graph, or
/// nothing if it is non-planar.
inline std::optional<std::vector<std::vector<int>>> simple_rotation(const std::vector<std::vector<int>>& adj) {
  const auto n = adj.size();
  std::vector<std::vector<int>> rot(n);
  for (const auto& blk : blocks(adj)) {
    if (blk.size() == 1) {
      rot[static_cast<std::size_t>(blk[0].first)].push_back(blk[0].second);
      rot[static_cast<std::size_t>(blk[0].second)].push_back(blk[0].first);
      continue;
    }
    std::vector<int> verts;
    for (const auto& [a, b] : blk) {
      verts.push_back(a);
      verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto faces = embed_block(verts, blk, static_cast<int>(n));
    if (!faces) return std::nullopt;
    // succ_v(u) = w for consecutive (u, v, w) on a face.
    std::vector<std::vector<std::pair<int, int>>> succ(n);
    for (const auto& f : *faces) {
      const auto L = f.size();
      for (std::size_t i = 0; i < L; ++i)
        succ[static_cast<std::size_t>(f[(i + 1) % L])].emplace_back(f[i], f[(i + 2) % L]);
    }
    for (int v : verts) {
      auto& s = succ[static_cast<std::size_t>(v)];
      std::sort(s.begin(), s.end());
      auto next = [&](int u) { return std::lower_bound(s.begin(), s.end(), std::make_pair(u, -1))->second; };
      const int first = s.front().first;
      int u = first;
      do {
        rot[static_cast<std::size_t>(v)].push_back(u);
        u = next(u);
      } while (u != first);
    }
  }
  return rot;
}

}  // namespace detail

/// Planarity test with embedding output. Parallel edges and self-loops are
/// handled by subdividing them internally; the rotation is reported in terms
/// of the original edge-ends.
inline PlanarityResult test_planarity(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  // For each (original vertex, simple neighbour) pair: the edge-end it stands for.
  std::vector<std::vector<std::pair<int, EdgeEnd>>> label(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> seen_pairs;
  auto add = [&](int x, int y) {
    const auto need = static_cast<std::size_t>(std::max(x, y)) + 1;
    if (adj.size() < need) adj.resize(need);
    adj[static_cast<std::size_t>(x)].push_back(y);
    adj[static_cast<std::size_t>(y)].push_back(x);
  };
  int next = n;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.live(e)) continue;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      const int s1 = next++, s2 = next++;
      add(ed.u, s1);
      add(s1, s2);
      add(s2, ed.u);
      label[static_cast<std::size_t>(ed.u)].emplace_back(s1, EdgeEnd{e, End::a});
      label[static_cast<std::size_t>(ed.u)].emplace_back(s2, EdgeEnd{e, End::b});
      continue;
    }
    const auto key = std::make_pair(ed.u, ed.v);
    if (std::find(seen_pairs.begin(), seen_pairs.end(), key) == seen_pairs.end()) {
      seen_pairs.push_back(key);
      add(ed.u, ed.v);
      label[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, EdgeEnd{e, End::a});
      label[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, EdgeEnd{e, End::b});
    } else {
      const int s = next++;
      add(ed.u, s);
      add(s, ed.v);
      label[static_cast<std::size_t>(ed.u)].emplace_back(s, EdgeEnd{e, End::a});
      label[static_cast<std::size_t>(ed.v)].emplace_back(s, EdgeEnd{e, End::b});
    }
  }
  if (adj.size() < static_cast<std::size_t>(next)) adj.resize(static_cast<std::size_t>(next));
  auto rot = detail::simple_rotation(adj);
  if (!rot) return {};
  Embedding emb;
  emb.rotation.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    const auto& lab = label[static_cast<std::size_t>(v)];
    for (int w : (*rot)[static_cast<std::size_t>(v)]) {
      auto it = std::find_if(lab.begin(), lab.end(), [&](const auto& p) { return p.first == w; });
      emb.rotation[static_cast<std::size_t>(v)].push_back(it->second);
    }
  }
  return {std::move(emb)};
}

/// Embedding of the underlying multigraph; arc ids and tail/head ends carry
/// over unchanged, so sign patterns can be read off directly.
inline PlanarityResult digraph_embedding(const DiGraph& d) {
  const UGraph u = underlying(d);
  auto r = test_planarity(u);
  if (!r.embedding) return r;
  // The undirected copy stores the smaller endpoint in slot a; restore tail/head.
  for (auto& rot : r.embedding->rotation)
    for (EdgeEnd& ee : rot)
      if (u.edge(ee.edge).u != d.edge(ee.edge).u) ee.end = other(ee.end);
  return r;
}

inline bool is_planar(const UGraph& g) { return test_planarity(g).planar(); }
inline bool is_planar(const DiGraph& d) { return digraph_embedding(d).planar(); }

}  // namespace fbs
