#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "fbs/embedding.hpp"
#include "fbs/reductions/reduction.hpp"

namespace fbs {

struct DotOptions {
  std::optional<Embedding> embedding;   // adds tailport/headport hints
  std::vector<GadgetEntry> registry;    // colours vertices by owner
};

namespace detail {

/// Compass point for slot i of d around a vertex, counter-clockwise from north.
inline const char* compass(std::size_t i, std::size_t d) {
  static const char* pts[] = {"n", "nw", "w", "sw", "s", "se", "e", "ne"};
  return pts[d == 0 ? 0 : (i * 8) / d];
}

inline std::string owner_colour(const GadgetEntry& g) {
  if (g.source == GadgetEntry::Source::edge) return "\"#d9d9d9\"";
  const double hue = std::fmod(0.618033988749895 * (g.id + 1), 1.0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "\"%.3f 0.45 0.95\"", hue);
  return buf;
}

}  // namespace detail

inline std::string export_dot(const AnyGraph& graph, const DotOptions& opt = {}) {
  std::ostringstream os;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        const char* arrow = G::directed ? " -> " : " -- ";
        os << (G::directed ? "digraph" : "graph") << " G {\n";
        std::vector<std::string> fill(static_cast<std::size_t>(g.vertex_count()));
        std::vector<std::string> label(static_cast<std::size_t>(g.vertex_count()));
        for (const GadgetEntry& e : opt.registry)
          for (VertexId v : e.spawned)
            if (g.contains(v)) {
              fill[static_cast<std::size_t>(v)] = detail::owner_colour(e);
              label[static_cast<std::size_t>(v)] = e.key();
            }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (!g.alive(v)) continue;
          os << "  " << v;
          const auto& f = fill[static_cast<std::size_t>(v)];
          if (!f.empty())
            os << " [style=filled, fillcolor=" << f << ", tooltip=\"" << label[static_cast<std::size_t>(v)] << "\"]";
          os << ";\n";
        }
        // slot[e][end] = (index, degree) of that edge-end in its rotation
        std::vector<std::array<std::pair<std::size_t, std::size_t>, 2>> slot;
        if (opt.embedding) {
          slot.assign(static_cast<std::size_t>(g.edge_count()), {});
          for (std::size_t v = 0; v < opt.embedding->rotation.size(); ++v) {
            const auto& r = opt.embedding->rotation[v];
            for (std::size_t i = 0; i < r.size(); ++i)
              if (r[i].edge >= 0 && r[i].edge < g.edge_count())
                slot[static_cast<std::size_t>(r[i].edge)][r[i].end == End::a ? 0 : 1] = {i, r.size()};
          }
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          if (!g.live(e)) continue;
          const Edge& ed = g.edge(e);
          os << "  " << ed.u << arrow << ed.v << " [id=\"e" << e << "\"";
          if (opt.embedding) {
            const auto& s = slot[static_cast<std::size_t>(e)];
            os << ", tailport=" << detail::compass(s[0].first, s[0].second)
               << ", headport=" << detail::compass(s[1].first, s[1].second);
          }
          os << "];\n";
        }
        os << "}\n";
      },
      graph);
  return os.str();
}

}  // namespace fbs
