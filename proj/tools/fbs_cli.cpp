#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fbs/fbs.hpp"

using namespace fbs;

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2, envelope = 3 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GraphFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const parse_error& e) {
    throw usage_error("parse error: " + path + ":" + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write '" + path + "'");
  out << text;
}

Problem problem_arg(const std::string& s) {
  const auto p = parse_problem(s);
  if (!p) throw usage_error("unknown problem '" + s + "' (fvs, fas, vc, cvc, cfvs)");
  return *p;
}

const UGraph& undirected(const GraphFile& f, const std::string& op) {
  if (f.directed()) throw precondition_error(op + " requires an undirected graph");
  return std::get<UGraph>(f.graph);
}

const DiGraph& directed(const GraphFile& f, const std::string& op) {
  if (!f.directed()) throw precondition_error(op + " requires a directed graph");
  return std::get<DiGraph>(f.graph);
}

void print_ids(std::ostream& os, const char* what, const std::vector<int>& ids) {
  os << what;
  for (int x : ids) os << ' ' << x;
  os << '\n';
}

void print_result(const SolveResult& r, const Instance& inst) {
  if (inst.budget) std::cout << "verdict " << (r.yes() ? "yes" : "no") << " (budget " << *inst.budget << ")\n";
  else if (r.verdict == Verdict::infeasible) std::cout << "verdict infeasible\n";
  else std::cout << "value " << r.value << '\n';
  if (r.yes()) print_ids(std::cout, "certificate", r.certificate);
}

// --- subcommands -----------------------------------------------------------

int cmd_classify(const std::string& path, const std::string& problem) {
  const GraphFile f = load(path);
  const auto problems = problem.empty() ? landscape_problems(f.directed()) : std::vector<Problem>{problem_arg(problem)};
  for (Problem p : problems) {
    const auto v = classify_graph(f.graph, p);
    if (!v) throw usage_error(std::string(to_string(p)) + " on " + (f.directed() ? "directed" : "undirected") +
                              " graphs is not part of the landscape");
    std::cout << to_string(p) << ": " << v->line() << '\n';
  }
  return ok;
}

int cmd_transform(const std::string& op, const std::string& path, const std::string& out, std::optional<int> k,
                  const std::string& mode) {
  const GraphFile f = load(path);
  std::optional<ReductionArtifact> r;
  if (op == "double") {
    DoubleMode m = DoubleMode::arcs;
    if (mode == "parallel") m = DoubleMode::parallel_edges;
    else if (mode == "subdivided") m = DoubleMode::subdivided;
    else if (mode != "arcs") throw usage_error("--mode must be arcs, parallel or subdivided");
    r = double_edges(undirected(f, op), m);
  } else if (op == "split") {
    r = split_vertices(directed(f, op));
  } else if (op == "path-split") {
    r = path_split_gadget(directed(f, op));
  } else if (op == "speckenmeyer") {
    const UGraph& g = undirected(f, op);
    r = f.embedding ? speckenmeyer_reduce(g, *f.embedding) : speckenmeyer_reduce(g);
  } else if (op == "irregular-double") {
    r = irregular_doubling(undirected(f, op));
  } else if (op == "planar-dfvs") {
    const DiGraph& d = directed(f, op);
    if (f.embedding) {
      r = planar_dfvs_gadget(d, *f.embedding);
    } else {
      const auto emb = digraph_embedding(d);
      if (!emb.planar()) throw precondition_error("planar-dfvs requires a planar digraph");
      r = planar_dfvs_gadget(d, *emb.embedding);
    }
  } else if (op == "cfvs") {
    if (!k) throw usage_error("--op cfvs needs --k");
    r = cfvs_gadget(undirected(f, op), *k);
  } else {
    throw usage_error("unknown op '" + op + "'");
  }
  write_file(out, serialize_graph(r->output, r->embedding));
  write_file(out + ".manifest", serialize_manifest(*r));
  std::cout << r->name << ": " << r->output_vertex_count() << " vertices, budget map k' = " << r->budget.a << "k "
            << (r->budget.b < 0 ? "- " : "+ ") << std::abs(r->budget.b) << '\n';
  if (k) std::cout << "k' = " << r->budget.apply(*k) << '\n';
  return ok;
}

int cmd_solve(const std::string& problem, const std::string& path, std::optional<int> budget, bool poly, bool cross) {
  const GraphFile f = load(path);
  const Problem p = problem_arg(problem);
  const Instance inst{f.graph, p, budget};
  SolveOptions opts;
  opts.envelope = Envelope::from_env();
  if (!poly) {
    print_result(solve_exact(inst, opts), inst);
    return ok;
  }
  if (budget) throw usage_error("--poly computes optima; drop --budget");
  const DiGraph& d = directed(f, "--poly");
  SolveResult fast;
  std::string how;
  if (degree_profile(d).max_degree <= 2) {
    fast = solve_deg2(d, p);
    how = "max degree <= 2";
  } else {
    if (p != Problem::fvs) throw precondition_error("--poly above max degree 2 handles fvs only");
    const auto pr = solve_bipolar_pipeline(d, opts);
    if (!pr.applicable) throw precondition_error("--poly not applicable: " + pr.reason);
    fast = pr.result;
    how = "split + arc set on the planar split digraph";
  }
  std::cout << "method " << how << '\n';
  print_result(fast, inst);
  if (cross) {
    const SolveResult slow = solve_exact(inst, opts);
    std::cout << "exact value " << slow.value << '\n';
    if (slow.value != fast.value || !validate(inst, fast.certificate).feasible) {
      std::cout << "cross-check FAILED\n";
      return verification_failed;
    }
    std::cout << "cross-check ok\n";
  }
  return ok;
}

int cmd_verify(const std::string& name, int trials, int max_n, std::uint64_t seed) {
  CampaignConfig c;
  c.reduction = name;
  c.trials = trials;
  c.max_n = max_n;
  c.seed = seed;
  c.solve.envelope = Envelope::from_env();
  const auto known = campaign_names();
  if (std::find(known.begin(), known.end(), name) == known.end()) throw usage_error("unknown reduction '" + name + "'");
  const auto res = run_campaign(c, std::cout);
  return res.passed() ? ok : verification_failed;
}

int cmd_export_dot(const std::string& path, const std::string& out, const std::string& manifest) {
  const GraphFile f = load(path);
  DotOptions opt;
  opt.embedding = f.embedding;
  if (!manifest.empty()) {
    std::ifstream in(manifest, std::ios::binary);
    if (!in) throw usage_error("cannot open '" + manifest + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    opt.registry = parse_manifest(ss.str()).registry;
  }
  const std::string dot = export_dot(f.graph, opt);
  if (out.empty()) std::cout << dot;
  else write_file(out, dot);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feedback set reductions, solvers and classifier"};
  app.require_subcommand(1);

  std::string in, out, problem, op, mode = "arcs", manifest, reduction;
  std::optional<int> k, budget;
  bool poly = false, cross = false;
  int trials = 100, max_n = 8;
  std::uint64_t seed = 1;

  auto* classify = app.add_subcommand("classify", "Place a graph in the complexity landscape");
  classify->add_option("file", in, "Graph file")->required();
  classify->add_option("--problem", problem, "fvs, fas or cfvs (default: all that apply)");

  auto* transform = app.add_subcommand("transform", "Apply a reduction");
  transform->add_option("--op", op, "double, split, path-split, speckenmeyer, irregular-double, planar-dfvs, cfvs")
      ->required();
  transform->add_option("file", in, "Input graph file")->required();
  transform->add_option("--out", out, "Output graph file; the manifest goes to <out>.manifest")->required();
  transform->add_option("--k", k, "Input budget; prints k'");
  transform->add_option("--mode", mode, "double: arcs, parallel or subdivided");

  auto* solve = app.add_subcommand("solve", "Solve exactly, or with a polynomial algorithm");
  solve->add_option("--problem", problem, "fvs, fas, vc, cvc or cfvs")->required();
  solve->add_option("file", in, "Graph file")->required();
  solve->add_option("--budget", budget, "Decide whether a solution of this size exists");
  solve->add_flag("--poly", poly, "Use the polynomial algorithm for the instance class");
  solve->add_flag("--verify-against-exact", cross, "With --poly, also solve exactly and compare");

  auto* verify = app.add_subcommand("verify", "Check a reduction against the exact oracle");
  verify->add_option("--reduction", reduction, "Reduction name")->required();
  verify->add_option("--trials", trials, "Random instances when --max-n > 6")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", max_n, "Largest input size")->check(CLI::Range(1, 20));
  verify->add_option("--seed", seed, "Generator seed");

  auto* dot = app.add_subcommand("export-dot", "Render as DOT");
  dot->add_option("file", in, "Graph file")->required();
  dot->add_option("--out", out, "Output path (default: stdout)");
  dot->add_option("--manifest", manifest, "Colour vertices by gadget owner");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*classify) return cmd_classify(in, problem);
    if (*transform) return cmd_transform(op, in, out, k, mode);
    if (*solve) return cmd_solve(problem, in, budget, poly, cross);
    if (*verify) return cmd_verify(reduction, trials, max_n, seed);
    if (*dot) return cmd_export_dot(in, out, manifest);
  } catch (const envelope_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return envelope;
  } catch (const usage_error& e) {
    std::cerr << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
