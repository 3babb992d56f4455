#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "fbs/io/format.hpp"
#include "fbs/reductions/reduction.hpp"

namespace fbs {

/// Provenance of a transform:
///
///   # <name> <from> -> <to>
///   map <a> <b>
///   gadget <v> <out>...
///   gadget e<id> <out>...
struct Manifest {
  BudgetMap budget;
  std::vector<GadgetEntry> registry;

  friend bool operator==(const Manifest& x, const Manifest& y) {
    if (!(x.budget == y.budget) || x.registry.size() != y.registry.size()) return false;
    for (std::size_t i = 0; i < x.registry.size(); ++i) {
      const auto &a = x.registry[i], &b = y.registry[i];
      if (a.source != b.source || a.id != b.id || a.spawned != b.spawned) return false;
    }
    return true;
  }

  /// Index of the registry entry listing each output vertex, -1 if none.
  std::vector<int> owners(int output_vertices) const {
    std::vector<int> own(static_cast<std::size_t>(output_vertices), -1);
    for (std::size_t i = 0; i < registry.size(); ++i)
      for (VertexId v : registry[i].spawned)
        if (v >= 0 && v < output_vertices) own[static_cast<std::size_t>(v)] = static_cast<int>(i);
    return own;
  }
};

inline std::string serialize_manifest(const ReductionArtifact& r) {
  std::ostringstream os;
  os << "# " << r.name << ' ' << to_string(r.from) << " -> " << to_string(r.to) << '\n';
  os << "map " << r.budget.a << ' ' << r.budget.b << '\n';
  for (const GadgetEntry& g : r.registry) {
    os << "gadget " << g.key();
    for (VertexId v : g.spawned) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

inline Manifest parse_manifest(std::string_view text) {
  Manifest m;
  bool have_map = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto toks = detail::tokenize(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (toks.empty()) continue;
    if (toks[0].text == "map") {
      if (have_map || toks.size() != 3) throw parse_error(line_no, 1, "expected a single 'map <a> <b>' line");
      auto signed_int = [&](const detail::Token& t) {
        if (!t.text.empty() && t.text[0] == '-') return -detail::to_int({t.text.substr(1), t.column + 1}, line_no, "integer");
        return detail::to_int(t, line_no, "integer");
      };
      m.budget = {signed_int(toks[1]), signed_int(toks[2])};
      have_map = true;
    } else if (toks[0].text == "gadget") {
      if (!have_map) throw parse_error(line_no, 1, "'gadget' before 'map'");
      if (toks.size() < 2) throw parse_error(line_no, 1, "gadget line takes: gadget <key> <out>...");
      GadgetEntry g;
      detail::Token key = toks[1];
      if (!key.text.empty() && key.text[0] == 'e') {
        g.source = GadgetEntry::Source::edge;
        key = {key.text.substr(1), key.column + 1};
      }
      g.id = detail::to_int(key, line_no, "gadget key");
      for (std::size_t i = 2; i < toks.size(); ++i) g.spawned.push_back(detail::to_int(toks[i], line_no, "vertex id"));
      m.registry.push_back(std::move(g));
    } else {
      throw parse_error(line_no, toks[0].column, "unknown record '" + std::string(toks[0].text) + "'");
    }
  }
  if (!have_map) throw parse_error(line_no + 1, 1, "missing 'map' line");
  return m;
}

}  // namespace fbs
