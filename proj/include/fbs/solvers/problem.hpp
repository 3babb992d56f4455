#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fbs/graph.hpp"

namespace fbs {

enum class Problem { fvs, fas, vc, cvc, cfvs };

inline const char* to_string(Problem p) {
  switch (p) {
    case Problem::fvs: return "fvs";
    case Problem::fas: return "fas";
    case Problem::vc: return "vc";
    case Problem::cvc: return "cvc";
    case Problem::cfvs: return "cfvs";
  }
  return "?";
}

inline std::optional<Problem> parse_problem(const std::string& s) {
  for (Problem p : {Problem::fvs, Problem::fas, Problem::vc, Problem::cvc, Problem::cfvs})
    if (s == to_string(p)) return p;
  return std::nullopt;
}

/// FAS certificates are arc ids; all other problems use vertex ids.
constexpr bool selects_arcs(Problem p) noexcept { return p == Problem::fas; }
constexpr bool is_connected_variant(Problem p) noexcept { return p == Problem::cvc || p == Problem::cfvs; }

using AnyGraph = std::variant<UGraph, DiGraph>;

struct Instance {
  AnyGraph graph;
  Problem problem = Problem::fvs;
  std::optional<int> budget;  // decision mode when set

  bool directed() const noexcept { return std::holds_alternative<DiGraph>(graph); }
  int vertex_count() const {
    return std::visit([](const auto& g) { return g.vertex_count(); }, graph);
  }
};

class kind_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void check_kind(const Instance& inst) {
  if (inst.problem == Problem::fas && !inst.directed())
    throw kind_error("fas requires a directed graph");
  if (is_connected_variant(inst.problem) && inst.directed())
    throw kind_error(std::string(to_string(inst.problem)) + " requires an undirected graph");
}

enum class Verdict { optimal, yes, no, infeasible };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::optimal: return "optimal";
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::infeasible: return "infeasible";
  }
  return "?";
}

struct SolveResult {
  Verdict verdict = Verdict::optimal;
  int value = 0;                 // optimum, or the budget in decision mode
  std::vector<int> certificate;  // sorted vertex or arc ids
  std::uint64_t explored = 0;    // search nodes

  bool yes() const noexcept { return verdict == Verdict::optimal || verdict == Verdict::yes; }
};

/// Refusal limits. The solver refuses rather than running unbounded.
struct Envelope {
  int optimum_vertices = 64;
  int connected_optimum_vertices = 48;
  int decision_budget = 16;
  int decision_vertices = 200;

  /// Format: "<optimum>,<connected optimum>,<decision budget>,<decision vertices>".
  static Envelope parse(const std::string& text) {
    Envelope e;
    std::istringstream in(text);
    std::string tok;
    int* fields[] = {&e.optimum_vertices, &e.connected_optimum_vertices, &e.decision_budget, &e.decision_vertices};
    for (int* f : fields) {
      if (!std::getline(in, tok, ',')) break;
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument("bad envelope field '" + tok + "'");
      *f = v;
    }
    return e;
  }

  static Envelope from_env() {
    if (const char* s = std::getenv("FBA_SIZE_ENVELOPE")) return parse(s);
    return {};
  }

  std::string describe() const {
    std::ostringstream os;
    os << "optimum mode <= " << optimum_vertices << " vertices (" << connected_optimum_vertices
       << " for connected variants); decision mode <= budget " << decision_budget << " on <= "
       << decision_vertices << " vertices";
    return os.str();
  }
};

/// An operation was applied outside its stated domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class envelope_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  Envelope envelope{};
  bool canonical = true;  // lexicographically smallest optimal certificate
};

}  // namespace fbs
