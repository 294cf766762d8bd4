// Copyright 2026 The rmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rmatch/errors.hpp"
#include "rmatch/io.hpp"
#include "rmatch/normalize.hpp"
#include "rmatch/reductions.hpp"
#include "rmatch/solver.hpp"
#include "rmatch/verify.hpp"

namespace {

using namespace rmatch;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

template <class Reader>
auto read_file(const std::string& path, Reader read) {
  if (path == "-") return read(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read(in);
}

template <class Writer>
void write_file(const std::string& path, Writer write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write(out);
}

Graph load_graph(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_dimacs_graph(in); });
}

CnfFormula load_cnf(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_dimacs_cnf(in); });
}

void print_matching(std::ostream& out, const Matching& m) { write_matching(out, m); }

struct ClassifyArgs {
  std::string graph, matching;
};

int run_classify(const ClassifyArgs& args) {
  const Graph g = load_graph(args.graph);
  const Matching m =
      read_file(args.matching, [](std::istream& in) { return read_matching(in); });
  const Classification c = classify(g, m);
  if (c.kinds.empty()) {
    std::cerr << c.diagnostic << '\n';
    return kExitFail;
  }
  bool first = true;
  for (MatchingKind k : kAllKinds) {
    if (!c.kinds.contains(k)) continue;
    std::cout << (first ? "" : " ") << to_string(k);
    first = false;
  }
  std::cout << '\n';
  return 0;
}

struct SolveArgs {
  std::string graph, kind = "nu";
  bool all = false;
  int limit = SolveOptions{}.vertex_limit;
};

int run_solve(const SolveArgs& args) {
  const Graph g = load_graph(args.graph);
  std::vector<MatchingKind> kinds;
  if (args.all) {
    kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
  } else {
    kinds.push_back(parse_matching_kind(args.kind));
  }
  const SolveOptions options{args.limit};
  for (MatchingKind k : kinds) {
    const SolveResult r = max_matching_number(g, k, options);
    std::cout << "c " << to_string(k) << '\n';
    std::cout << short_name(k) << ' ' << r.value << '\n';
    print_matching(std::cout, r.witness);
  }
  return 0;
}

struct NormalizeArgs {
  std::string in, out, map;
  bool allow_fewer = false;
};

int run_normalize(const NormalizeArgs& args) {
  const CnfFormula f = load_cnf(args.in);
  const NormalizeResult result = normalize_xsat(f, {.allow_fewer_occurrences = args.allow_fewer});
  if (!args.map.empty()) {
    write_file(args.map, [&](std::ostream& out) {
      out << normalize_result_to_json(result).dump(2) << '\n';
    });
  }
  if (const auto* verdict = std::get_if<UnsatisfiableVerdict>(&result)) {
    std::cout << "c " << verdict->reason << "\ns UNSATISFIABLE\n";
    return kExitUnsat;
  }
  const auto& nf = std::get<NormalizedFormula>(result);
  write_file(args.out, [&](std::ostream& out) { write_dimacs_cnf(out, nf.formula); });
  return 0;
}

struct OracleArgs {
  std::string in, mode = "sat";
  int limit = kOracleVariableLimit;
};

int run_oracle(const OracleArgs& args) {
  const CnfFormula f = load_cnf(args.in);
  const auto witness =
      args.mode == "xsat" ? brute_force_xsat(f, args.limit) : brute_force_sat(f, args.limit);
  if (!witness) {
    std::cout << "s UNSATISFIABLE\n";
    return kExitUnsat;
  }
  std::cout << "s SATISFIABLE\n";
  write_assignment(std::cout, *witness);
  return kExitSat;
}

struct ReduceArgs {
  std::string which = "t1", in, out, roles;
};

int run_reduce(const ReduceArgs& args) {
  const ReductionGraph rg = build(parse_construction(args.which), load_cnf(args.in));
  write_file(args.out, [&](std::ostream& out) { write_dimacs_graph(out, rg.graph()); });
  if (!args.roles.empty()) {
    write_file(args.roles,
               [&](std::ostream& out) { out << roles_to_json(rg).dump(2) << '\n'; });
  }
  return 0;
}

struct WitnessArgs {
  std::string dir = "a2m", which = "t1", cnf, in, out;
};

int run_witness(const WitnessArgs& args) {
  const CnfFormula f = load_cnf(args.cnf);
  const ReductionGraph rg = build(parse_construction(args.which), f);
  if (args.dir == "a2m") {
    const Assignment a = read_file(
        args.in, [&](std::istream& in) { return read_assignment(in, f.variable_count); });
    const Matching m = assignment_to_matching(rg, a);
    write_file(args.out, [&](std::ostream& out) { write_matching(out, m); });
  } else {
    const Matching m = read_file(args.in, [](std::istream& in) { return read_matching(in); });
    const Assignment a = matching_to_assignment(rg, m);
    write_file(args.out, [&](std::ostream& out) { write_assignment(out, a); });
  }
  return 0;
}

struct VerifyArgs {
  std::string which = "all";
  std::vector<int> exhaustive;
  std::vector<std::uint64_t> random;
  bool json = false, timing = false, quiet = false;
  int limit = SolveOptions{}.vertex_limit;
  int oracle_limit = kOracleVariableLimit;
};

int run_verify(const VerifyArgs& args) {
  CorpusSpec request;
  if (args.which == "all") {
    request.claims = {Claim::lemma1, Claim::theorem1, Claim::lemma4, Claim::theorem2};
  } else {
    request.claims = {parse_claim(args.which)};
  }
  if (!args.random.empty()) {
    request.source = RandomCorpus{static_cast<int>(args.random[0]), args.random[1]};
  } else if (!args.exhaustive.empty()) {
    request.source = ExhaustiveCorpus{args.exhaustive[0], args.exhaustive[1]};
  } else {
    request.source = ExhaustiveCorpus{3, 2};
  }
  VerifyOptions options;
  options.solve.vertex_limit = args.limit;
  options.oracle_variable_limit = args.oracle_limit;
  const AggregateReport aggregate = run_corpus(request, options);
  for (const VerificationReport& r : aggregate.reports) {
    if (args.quiet && r.passed()) continue;
    if (args.json) {
      std::cout << to_json(r, args.timing).dump() << '\n';
    } else {
      std::cout << to_record_line(r) << '\n';
    }
  }
  std::cerr << "passed " << aggregate.passed() << " failed " << aggregate.failed() << '\n';
  return aggregate.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted matchings: classify, solve, reduce and verify"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Print the kinds a matching belongs to");
  classify_cmd->add_option("--graph", classify_args.graph, "DIMACS graph")->required();
  classify_cmd->add_option("--matching", classify_args.matching, "matching file")->required();

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Maximum matching number of a kind");
  solve_cmd->add_option("--graph", solve_args.graph, "DIMACS graph")->required();
  solve_cmd->add_option("--kind", solve_args.kind, "nu|ur|ac|s")
      ->check(CLI::IsMember({"nu", "ur", "ac", "s"}));
  solve_cmd->add_flag("--all", solve_args.all, "solve all four kinds");
  solve_cmd->add_option("--limit", solve_args.limit, "vertex cap")
      ->check(CLI::Range(1, kMaxSolverVertices));

  NormalizeArgs normalize_args;
  auto* normalize_cmd =
      app.add_subcommand("normalize-xsat", "Rewrite a source-form exact-SAT instance");
  normalize_cmd->add_option("--in", normalize_args.in, "input CNF")->required();
  normalize_cmd->add_option("--out", normalize_args.out, "output CNF (default stdout)");
  normalize_cmd->add_option("--map", normalize_args.map, "variable map JSON");
  normalize_cmd->add_flag("--allow-fewer-occurrences", normalize_args.allow_fewer,
                          "accept variables occurring fewer than three times");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force SAT or exact-SAT");
  oracle_cmd->add_option("--in", oracle_args.in, "input CNF")->required();
  oracle_cmd->add_option("--mode", oracle_args.mode, "sat|xsat")
      ->check(CLI::IsMember({"sat", "xsat"}));
  oracle_cmd->add_option("--limit", oracle_args.limit, "variable cap")->check(CLI::Range(0, 62));

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction graph from a CNF");
  reduce_cmd->add_option("--which", reduce_args.which, "t1|t2")
      ->check(CLI::IsMember({"t1", "t2"}));
  reduce_cmd->add_option("--in", reduce_args.in, "input CNF")->required();
  reduce_cmd->add_option("--out", reduce_args.out, "output graph (default stdout)");
  reduce_cmd->add_option("--roles", reduce_args.roles, "vertex roles JSON");

  WitnessArgs witness_args;
  auto* witness_cmd =
      app.add_subcommand("witness", "Convert between assignments and reduction matchings");
  witness_cmd->add_option("--dir", witness_args.dir, "a2m|m2a")
      ->check(CLI::IsMember({"a2m", "m2a"}));
  witness_cmd->add_option("--which", witness_args.which, "t1|t2")
      ->check(CLI::IsMember({"t1", "t2"}));
  witness_cmd->add_option("--cnf", witness_args.cnf, "source CNF")->required();
  witness_cmd->add_option("--in", witness_args.in, "assignment or matching file")->required();
  witness_cmd->add_option("--out", witness_args.out, "output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check the reduction claims on a corpus");
  verify_cmd->add_option("--which", verify_args.which, "lemma1|thm1|lemma4|thm2|all")
      ->check(CLI::IsMember({"lemma1", "thm1", "lemma4", "thm2", "all"}));
  auto* exhaustive_opt =
      verify_cmd->add_option("--exhaustive", verify_args.exhaustive, "max n, max m")
          ->expected(2);
  verify_cmd->add_option("--random", verify_args.random, "count, seed")
      ->expected(2)
      ->excludes(exhaustive_opt);
  verify_cmd->add_flag("--json", verify_args.json, "JSON lines");
  verify_cmd->add_flag("--timing", verify_args.timing, "include elapsed times in JSON");
  verify_cmd->add_flag("--failures-only", verify_args.quiet, "print failing reports only");
  verify_cmd->add_option("--limit", verify_args.limit, "solver vertex cap")
      ->check(CLI::Range(1, kMaxSolverVertices));
  verify_cmd->add_option("--oracle-limit", verify_args.oracle_limit, "oracle variable cap")
      ->check(CLI::Range(0, 62));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify_cmd) return run_classify(classify_args);
    if (*solve_cmd) return run_solve(solve_args);
    if (*normalize_cmd) return run_normalize(normalize_args);
    if (*oracle_cmd) return run_oracle(oracle_args);
    if (*reduce_cmd) return run_reduce(reduce_args);
    if (*witness_cmd) return run_witness(witness_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
