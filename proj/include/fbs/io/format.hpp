#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fbs/embedding.hpp"
#include "fbs/solvers/problem.hpp"

namespace fbs {

/// Line-oriented text format:
///
///   # comment
///   graph <directed|undirected> <n> <m>
///   e <u> <v>                     (m lines; edge ids follow line order)
///   rot <v> <id>{a|b} ...         (optional, at most one per vertex; a
///                                 missing line means an empty rotation)
///
/// Every line, the last included, ends with a newline.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct GraphFile {
  AnyGraph graph;
  std::optional<Embedding> embedding;

  bool directed() const noexcept { return std::holds_alternative<DiGraph>(graph); }
};

namespace detail {

struct Token {
  std::string_view text;
  int column = 1;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

inline int to_int(const Token& t, int line, const char* what) {
  int v = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || ptr != end || v < 0)
    throw parse_error(line, t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
  return v;
}

}  // namespace detail

inline GraphFile parse_graph(std::string_view text) {
  if (!text.empty() && text.back() != '\n') {
    const auto last = text.rfind('\n');
    const int line = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
    throw parse_error(line, static_cast<int>(text.size() - (last == std::string_view::npos ? 0 : last + 1)) + 1,
                      "missing trailing newline");
  }
  GraphFile f;
  bool have_header = false, directed = false;
  int n = 0, m = 0, edges = 0, line_no = 0;
  UGraph ug;
  DiGraph dg;
  std::vector<std::optional<std::vector<EdgeEnd>>> rot;
  std::vector<std::pair<int, int>> rot_pos;  // where each rot line began
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    const std::string_view kw = toks[0].text;
    if (!have_header) {
      if (kw != "graph") throw parse_error(line_no, toks[0].column, "expected 'graph' header");
      if (toks.size() != 4) throw parse_error(line_no, 1, "header takes: graph <directed|undirected> <n> <m>");
      if (toks[1].text == "directed") directed = true;
      else if (toks[1].text != "undirected")
        throw parse_error(line_no, toks[1].column, "expected 'directed' or 'undirected'");
      n = detail::to_int(toks[2], line_no, "vertex count");
      m = detail::to_int(toks[3], line_no, "edge count");
      if (directed) dg = DiGraph(n);
      else ug = UGraph(n);
      rot.assign(static_cast<std::size_t>(n), std::nullopt);
      have_header = true;
      continue;
    }
    if (kw == "e") {
      if (toks.size() != 3) throw parse_error(line_no, 1, "edge line takes: e <u> <v>");
      if (edges == m) throw parse_error(line_no, 1, "more edge lines than the header's " + std::to_string(m));
      const int u = detail::to_int(toks[1], line_no, "vertex id");
      const int v = detail::to_int(toks[2], line_no, "vertex id");
      if (u >= n) throw parse_error(line_no, toks[1].column, "vertex " + std::to_string(u) + " out of range");
      if (v >= n) throw parse_error(line_no, toks[2].column, "vertex " + std::to_string(v) + " out of range");
      if (directed) dg.add_edge(u, v);
      else ug.add_edge(u, v);
      ++edges;
    } else if (kw == "rot") {
      if (toks.size() < 2) throw parse_error(line_no, 1, "rot line takes: rot <v> <end>...");
      const int v = detail::to_int(toks[1], line_no, "vertex id");
      if (v >= n) throw parse_error(line_no, toks[1].column, "vertex " + std::to_string(v) + " out of range");
      if (rot[static_cast<std::size_t>(v)]) throw parse_error(line_no, toks[1].column, "second rot line for vertex " + std::to_string(v));
      std::vector<EdgeEnd> ends;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const detail::Token& t = toks[i];
        const char side = t.text.empty() ? '?' : t.text.back();
        if (side != 'a' && side != 'b') throw parse_error(line_no, t.column, "edge-end must end in 'a' or 'b'");
        const detail::Token id{t.text.substr(0, t.text.size() - 1), t.column};
        const int e = detail::to_int(id, line_no, "edge id");
        if (e >= edges) throw parse_error(line_no, t.column, "unknown edge-end '" + std::string(t.text) + "'");
        const EdgeEnd ee{e, side == 'a' ? End::a : End::b};
        const Edge ed = directed ? dg.edge(e) : ug.edge(e);
        if (ed.at(ee.end) != v)
          throw parse_error(line_no, t.column, "edge-end '" + std::string(t.text) + "' is not at vertex " + std::to_string(v));
        ends.push_back(ee);
      }
      rot[static_cast<std::size_t>(v)] = std::move(ends);
      rot_pos.emplace_back(v, line_no);
    } else {
      throw parse_error(line_no, toks[0].column, "unknown record '" + std::string(kw) + "'");
    }
  }
  if (!have_header) throw parse_error(line_no + 1, 1, "missing 'graph' header");
  if (edges != m) throw parse_error(line_no + 1, 1, "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges));

  if (!rot_pos.empty()) {
    Embedding emb;
    emb.rotation.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (rot[static_cast<std::size_t>(v)]) emb.rotation[static_cast<std::size_t>(v)] = *rot[static_cast<std::size_t>(v)];
      auto have = emb.rotation[static_cast<std::size_t>(v)];
      std::vector<EdgeEnd> want(directed ? dg.incidence(v).begin() : ug.incidence(v).begin(),
                                directed ? dg.incidence(v).end() : ug.incidence(v).end());
      std::sort(have.begin(), have.end());
      std::sort(want.begin(), want.end());
      if (have != want) {
        int at = line_no + 1;
        for (const auto& [w, l] : rot_pos)
          if (w == v) at = l;
        throw parse_error(at, 1, "rotation at vertex " + std::to_string(v) + " does not list exactly its incident edge-ends");
      }
    }
    f.embedding = std::move(emb);
  }
  if (directed) f.graph = std::move(dg);
  else f.graph = std::move(ug);
  return f;
}

inline GraphFile parse_graph(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

/// Canonical text. Vertex masks are not part of the format.
inline std::string serialize_graph(const AnyGraph& graph, const std::optional<Embedding>& emb = std::nullopt) {
  std::ostringstream os;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        os << "graph " << (G::directed ? "directed" : "undirected") << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const Edge& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
        if (emb)
          for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto& r = emb->rotation.at(static_cast<std::size_t>(v));
            os << "rot " << v;
            for (const EdgeEnd& ee : r) os << ' ' << ee.edge << (ee.end == End::a ? 'a' : 'b');
            os << '\n';
          }
      },
      graph);
  return os.str();
}

inline std::string serialize_graph(const GraphFile& f) { return serialize_graph(f.graph, f.embedding); }

}  // namespace fbs
