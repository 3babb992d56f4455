#pragma once

#include <map>
#include <string>
#include <vector>

#include "fbs/graph.hpp"

namespace fbs {

/// Rotation system: for each vertex the cyclic order of its incident
/// edge-ends. Face traversal follows the rule
///   next(dart) = rotational successor of the reversed dart,
/// so a rotation read in one direction determines every face.
struct Embedding {
  std::vector<std::vector<EdgeEnd>> rotation;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Position of every edge-end inside its vertex rotation.
class RotationIndex {
 public:
  RotationIndex() = default;
  RotationIndex(const Embedding& emb, int edge_count) : emb_(&emb) {
    pos_.assign(static_cast<std::size_t>(edge_count) * 2, -1);
    for (const auto& rot : emb.rotation)
      for (std::size_t i = 0; i < rot.size(); ++i) pos_[slot(rot[i])] = static_cast<int>(i);
  }

  /// Successor of ee in the rotation of vertex v (where ee sits).
  EdgeEnd successor(VertexId v, EdgeEnd ee) const {
    const auto& rot = emb_->rotation[static_cast<std::size_t>(v)];
    const int i = pos_[slot(ee)];
    return rot[static_cast<std::size_t>(i + 1) % rot.size()];
  }

  int position(EdgeEnd ee) const { return pos_[slot(ee)]; }

 private:
  static std::size_t slot(EdgeEnd ee) { return static_cast<std::size_t>(ee.edge) * 2 + static_cast<std::size_t>(ee.end); }

  const Embedding* emb_ = nullptr;
  std::vector<int> pos_;
};

/// Faces as sequences of darts; a dart is an edge-end read as "leave the
/// vertex holding this end along its edge".
template <Graph G>
std::vector<std::vector<EdgeEnd>> trace_faces(const G& g, const Embedding& emb) {
  RotationIndex idx(emb, g.edge_count());
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()) * 2, 0);
  std::vector<std::vector<EdgeEnd>> faces;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const EdgeEnd& start : emb.rotation[static_cast<std::size_t>(v)]) {
      const auto s = static_cast<std::size_t>(start.edge) * 2 + static_cast<std::size_t>(start.end);
      if (used[s]) continue;
      std::vector<EdgeEnd> face;
      EdgeEnd d = start;
      while (true) {
        const auto k = static_cast<std::size_t>(d.edge) * 2 + static_cast<std::size_t>(d.end);
        if (used[k]) break;
        used[k] = 1;
        face.push_back(d);
        const EdgeEnd rev{d.edge, other(d.end)};
        d = idx.successor(g.endpoint(rev), rev);
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

struct EmbeddingCheck {
  bool ok = false;
  std::string reason;
  int faces = 0;       // faces of the plane drawing, V - E + F = 1 + C
  int components = 0;  // connected components over live vertices
};

/// Verifies the rotation system: every live edge-end exactly once at its own
/// vertex, rotation length = degree, and genus zero on every component.
template <Graph G>
EmbeddingCheck check_embedding(const G& g, const Embedding& emb) {
  EmbeddingCheck r;
  if (static_cast<int>(emb.rotation.size()) != g.vertex_count()) {
    r.reason = "rotation count differs from vertex count";
    return r;
  }
  std::vector<int> seen(static_cast<std::size_t>(g.edge_count()) * 2, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
    if (static_cast<int>(rot.size()) != g.degree(v)) {
      r.reason = "rotation length at vertex " + std::to_string(v) + " differs from its degree";
      return r;
    }
    for (const EdgeEnd& ee : rot) {
      if (ee.edge < 0 || ee.edge >= g.edge_count() || !g.live(ee.edge) || g.endpoint(ee) != v) {
        r.reason = "edge-end does not belong to vertex " + std::to_string(v);
        return r;
      }
      if (++seen[static_cast<std::size_t>(ee.edge) * 2 + static_cast<std::size_t>(ee.end)] > 1) {
        r.reason = "edge-end repeated at vertex " + std::to_string(v);
        return r;
      }
    }
  }

  // Component labels over live vertices.
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int c = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!g.alive(s) || comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<VertexId> stack{s};
    comp[static_cast<std::size_t>(s)] = c;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const EdgeEnd& ee : g.live_ends(v)) {
        const VertexId w = g.edge(ee.edge).at(other(ee.end));
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  std::vector<int> verts(static_cast<std::size_t>(c), 0), edges(static_cast<std::size_t>(c), 0),
      orbits(static_cast<std::size_t>(c), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.alive(v)) ++verts[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.live(e)) ++edges[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.edge(e).u)])];
  for (const auto& face : trace_faces(g, emb))
    ++orbits[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.endpoint(face.front()))])];
  int total_faces = 0;
  for (int i = 0; i < c; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const int f = edges[k] == 0 ? 1 : orbits[k];
    if (verts[k] - edges[k] + f != 2) {
      r.reason = "Euler characteristic fails on a component (genus > 0)";
      return r;
    }
    total_faces += f;
  }
  r.components = c;
  r.faces = c == 0 ? 1 : total_faces - (c - 1);
  r.ok = true;
  return r;
}

}  // namespace fbs
