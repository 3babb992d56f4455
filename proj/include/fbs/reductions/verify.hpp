#pragma once

#include <sstream>

#include "fbs/reductions/reduction.hpp"
#include "fbs/solvers/exact.hpp"
#include "fbs/solvers/validate.hpp"

namespace fbs {

enum class VerifyMode { optimum_equality, decision_equivalence };

using Oracle = std::function<SolveResult(const Instance&)>;

inline Oracle exact_oracle(SolveOptions opts = {}) {
  return [opts](const Instance& inst) { return solve_exact(inst, opts); };
}

struct VerificationReport {
  bool passed = true;
  std::vector<std::string> failures;
  std::optional<int> input_value;   // optimum, or the budget k
  std::optional<int> output_value;  // optimum, or k'
  std::optional<bool> input_yes;
  std::optional<bool> output_yes;
  std::optional<Instance> counterexample;

  void fail(std::string why) {
    passed = false;
    failures.push_back(std::move(why));
  }
  std::string summary() const {
    std::ostringstream os;
    os << (passed ? "pass" : "FAIL");
    if (input_value) os << " in=" << *input_value;
    if (output_value) os << " out=" << *output_value;
    if (input_yes) os << " in:" << (*input_yes ? "yes" : "no");
    if (output_yes) os << " out:" << (*output_yes ? "yes" : "no");
    for (const auto& f : failures) os << "; " << f;
    return os.str();
  }
};

namespace detail {

inline std::string show(std::span<const int> s) {
  std::string t = "{";
  for (std::size_t i = 0; i < s.size(); ++i) t += (i ? " " : "") + std::to_string(s[i]);
  return t + "}";
}

}  // namespace detail

/// Checks the reduction on one input instance. The input problem and,
/// in decision mode, the budget k come from `input`.
inline VerificationReport verify_reduction(const ReductionArtifact& r, const Instance& input, VerifyMode mode,
                                           const Oracle& input_oracle, const Oracle& output_oracle) {
  VerificationReport rep;
  const Instance out_base{r.output, r.to, std::nullopt};
  auto check_lift = [&](const std::vector<int>& s, int predicted, bool exact) {
    const auto lifted = r.lift(s);
    const auto v = validate(out_base, lifted);
    if (!v.feasible) rep.fail("lift of " + detail::show(s) + " is infeasible: " + v.describe());
    const int size = static_cast<int>(lifted.size());
    if (exact ? size != predicted : size > predicted)
      rep.fail("lift of " + detail::show(s) + " has size " + std::to_string(size) + ", predicted " + std::to_string(predicted));
  };
  auto check_project = [&](const std::vector<int>& s, int limit) {
    const auto projected = r.project(s);
    const Instance in_base{input.graph, input.problem, std::nullopt};
    const auto v = validate(in_base, projected);
    if (!v.feasible) rep.fail("projection of " + detail::show(s) + " is infeasible: " + v.describe());
    if (static_cast<int>(projected.size()) > limit)
      rep.fail("projection of " + detail::show(s) + " has size " + std::to_string(projected.size()) + " > " +
               std::to_string(limit));
  };

  if (mode == VerifyMode::optimum_equality) {
    if (r.decision_only) throw precondition_error(r.name + " supports decision equivalence only");
    const SolveResult a = input_oracle(Instance{input.graph, input.problem, std::nullopt});
    const SolveResult b = output_oracle(out_base);
    if (a.verdict == Verdict::infeasible || b.verdict == Verdict::infeasible) {
      if (a.verdict != b.verdict) rep.fail("feasibility differs between input and output");
    } else {
      rep.input_value = a.value;
      rep.output_value = b.value;
      const int want = r.budget.apply(a.value);
      if (b.value != want)
        rep.fail("output optimum " + std::to_string(b.value) + " != " + std::to_string(r.budget.a) + "*" +
                 std::to_string(a.value) + "+" + std::to_string(r.budget.b));
      check_lift(a.certificate, want, true);
      check_project(b.certificate, a.value);
    }
  } else {
    if (!input.budget) throw precondition_error("decision equivalence needs a budget");
    const int k = *input.budget, kk = r.budget.apply(k);
    rep.input_value = k;
    rep.output_value = kk;
    const SolveResult a = input_oracle(input);
    const SolveResult b = output_oracle(Instance{r.output, r.to, kk});
    rep.input_yes = a.yes();
    rep.output_yes = b.yes();
    if (a.yes() != b.yes()) rep.fail("decision verdicts differ");
    if (a.yes()) check_lift(a.certificate, kk, false);
    if (b.yes()) check_project(b.certificate, k);
  }
  if (!rep.passed) rep.counterexample = input;
  return rep;
}

inline VerificationReport verify_reduction(const ReductionArtifact& r, const Instance& input, VerifyMode mode,
                                           const SolveOptions& opts = {}) {
  const Oracle o = exact_oracle(opts);
  return verify_reduction(r, input, mode, o, o);
}

}  // namespace fbs
