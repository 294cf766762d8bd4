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

#include "rmatch/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "rmatch/corpus.hpp"
#include "rmatch/normalize.hpp"
#include "rmatch/reductions.hpp"

namespace rmatch {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::optional<std::string> VerificationReport::fact(std::string_view key) const {
  for (const auto& [k, v] : facts) {
    if (k == key) return v;
  }
  return std::nullopt;
}

double VerificationReport::max_elapsed_ms() const {
  double worst = 0.0;
  for (const Check& c : checks) worst = std::max(worst, c.elapsed_ms);
  return worst;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void add_check(VerificationReport& report, std::string name, std::string expected,
               std::string actual, double elapsed_ms = 0.0) {
  const bool pass = expected == actual;
  report.checks.push_back(
      {std::move(name), std::move(expected), std::move(actual), pass, elapsed_ms});
}

struct Timed {
  SolveResult result;
  double ms;
};

Timed timed_solve(const Graph& g, MatchingKind kind, const SolveOptions& options) {
  const auto start = Clock::now();
  SolveResult r = max_matching_number(g, kind, options);
  return {std::move(r), ms_since(start)};
}

// ν_kind = n + m, plus the witness re-classifying as that kind.
VerificationReport verify_count(const ReductionGraph& rg, MatchingKind kind, std::string id,
                                std::string claim, const VerifyOptions& options) {
  VerificationReport report{std::move(id), std::move(claim), {}, {}};
  const Timed solved = timed_solve(rg.graph(), kind, options.solve);
  add_check(report, "nu_" + std::string(short_name(kind)), std::to_string(rg.n() + rg.m()),
            std::to_string(solved.result.value), solved.ms);
  add_check(report, "witness_kind", "true",
            bool_text(satisfies_kind(rg.graph(), solved.result.witness, kind)));
  return report;
}

std::string decode_outcome(const ReductionGraph& rg, const Matching& mm, bool exact) {
  try {
    const Assignment a = matching_to_assignment(rg, mm);
    const bool ok = exact ? eval_exact(rg.formula(), a) : eval_sat(rg.formula(), a);
    return ok ? "satisfying" : "not-satisfying";
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

// The biconditional plus witness conversions, shared by both constructions.
// `restricted` is acyclic for t1 and uniquely restricted for t2.
void check_equivalence(VerificationReport& report, const ReductionGraph& rg,
                       MatchingKind restricted, const VerifyOptions& options) {
  const bool exact = rg.which() == Construction::t2;
  const auto oracle_start = Clock::now();
  const std::optional<Assignment> witness =
      exact ? brute_force_xsat(rg.formula(), options.oracle_variable_limit)
            : brute_force_sat(rg.formula(), options.oracle_variable_limit);
  const double oracle_ms = ms_since(oracle_start);

  const Timed upper = timed_solve(rg.graph(), restricted, options.solve);
  const Timed induced = timed_solve(rg.graph(), MatchingKind::induced, options.solve);
  report.facts.emplace_back("satisfiable", bool_text(witness.has_value()));
  report.facts.emplace_back("nu_" + std::string(short_name(restricted)),
                            std::to_string(upper.result.value));
  report.facts.emplace_back("nu_s", std::to_string(induced.result.value));

  add_check(report, exact ? "xsat_iff_ur_eq_s" : "sat_iff_ac_eq_s", bool_text(witness.has_value()),
            bool_text(upper.result.value == induced.result.value),
            oracle_ms + upper.ms + induced.ms);

  const int target = rg.n() + rg.m();
  if (witness) {
    const Matching forward = assignment_to_matching(rg, *witness);
    const bool forward_induced = is_induced_matching(rg.graph(), forward);
    add_check(report, "forward_witness", "induced/" + std::to_string(target),
              std::string(forward_induced ? "induced/" : "not-induced/") +
                  std::to_string(forward.size()));
    std::string back;
    try {
      back = matching_to_assignment(rg, forward).to_string();
    } catch (const std::exception& e) {
      back = std::string("error: ") + e.what();
    }
    add_check(report, "round_trip", witness->to_string(), back);
  }
  if (induced.result.value == target) {
    add_check(report, "solver_witness_decodes", "satisfying",
              decode_outcome(rg, induced.result.witness, exact));
  }
}

}  // namespace

VerificationReport verify_lemma1(const CnfFormula& f, std::string instance_id,
                                 const VerifyOptions& options) {
  return verify_count(build_t1(f), MatchingKind::acyclic, std::move(instance_id), "lemma1",
                      options);
}

VerificationReport verify_lemma4(const CnfFormula& f, std::string instance_id,
                                 const VerifyOptions& options) {
  return verify_count(build_t2(f), MatchingKind::uniquely_restricted, std::move(instance_id),
                      "lemma4", options);
}

VerificationReport verify_theorem1(const CnfFormula& f, std::string instance_id,
                                   const VerifyOptions& options) {
  VerificationReport report{std::move(instance_id), "thm1", {}, {}};
  check_equivalence(report, build_t1(f), MatchingKind::acyclic, options);
  return report;
}

VerificationReport verify_theorem2(const CnfFormula& f, std::string instance_id,
                                   const VerifyOptions& options) {
  VerificationReport report{std::move(instance_id), "thm2", {}, {}};
  if (validate_t2_shape(f).ok()) {
    check_equivalence(report, build_t2(f), MatchingKind::uniquely_restricted, options);
    return report;
  }

  const NormalizeOptions relaxed{.allow_fewer_occurrences = true};
  const NormalizeResult normalized = normalize_xsat(f, relaxed);
  const std::optional<Assignment> source_witness =
      brute_force_xsat(f, options.oracle_variable_limit);
  report.facts.emplace_back("normalized", "true");
  if (std::holds_alternative<UnsatisfiableVerdict>(normalized)) {
    report.facts.emplace_back("satisfiable", "false");
    add_check(report, "normalization_verdict", bool_text(source_witness.has_value()), "false");
    return report;
  }
  const auto& nf = std::get<NormalizedFormula>(normalized);
  const std::optional<Assignment> normalized_witness =
      brute_force_xsat(nf.formula, options.oracle_variable_limit);
  add_check(report, "normalization_preserves_xsat", bool_text(source_witness.has_value()),
            bool_text(normalized_witness.has_value()));
  if (normalized_witness) {
    add_check(report, "lifted_witness", "true", bool_text(eval_exact(f, nf.lift(*normalized_witness))));
  }
  check_equivalence(report, build_t2(nf.formula), MatchingKind::uniquely_restricted, options);
  return report;
}

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::lemma1: return "lemma1";
    case Claim::theorem1: return "thm1";
    case Claim::lemma4: return "lemma4";
    case Claim::theorem2: return "thm2";
  }
  return "?";
}

Claim parse_claim(std::string_view text) {
  if (text == "lemma1") return Claim::lemma1;
  if (text == "thm1" || text == "theorem1") return Claim::theorem1;
  if (text == "lemma4") return Claim::lemma4;
  if (text == "thm2" || text == "theorem2") return Claim::theorem2;
  throw std::invalid_argument("unknown claim '" + std::string(text) + "'");
}

std::size_t AggregateReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }));
}

std::size_t AggregateReport::failed() const { return reports.size() - passed(); }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string instance_id(Construction which, const char* mode, int a, int b, std::size_t k) {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%s-%s-%d-%d-%05zu", std::string(to_string(which)).c_str(),
                mode, a, b, k);
  return buffer;
}

struct Instance {
  std::string id;
  CnfFormula formula;
};

std::vector<Instance> exhaustive_instances(Construction which, const ExhaustiveCorpus& request) {
  std::vector<Instance> out;
  for (int n = 1; n <= request.max_n; ++n) {
    for (int m = 1; m <= request.max_m; ++m) {
      std::size_t k = 0;
      auto collect = [&](const CnfFormula& f) {
        out.push_back({instance_id(which, "exh", n, m, k++), f});
      };
      if (which == Construction::t1) {
        for_each_t1_formula(n, m, collect);
      } else {
        for_each_t2_formula(n, m, collect);
      }
    }
  }
  return out;
}

std::vector<Instance> random_instances(Construction which, const RandomCorpus& request) {
  const bool t1 = which == Construction::t1;
  const int min_n = t1 ? 2 : 3;
  const int max_n = std::max(min_n, request.max_n > 0 ? request.max_n : (t1 ? 4 : 5));
  const int max_m = request.max_m > 0 ? request.max_m : 3;
  std::vector<Instance> out;
  for (int k = 0; k < request.count; ++k) {
    std::uint64_t state = splitmix64(request.seed ^ splitmix64(static_cast<std::uint64_t>(k)));
    const int n = min_n + static_cast<int>(state % static_cast<std::uint64_t>(max_n - min_n + 1));
    state = splitmix64(state);
    const int m_cap = t1 ? max_m : std::min(max_m, n);
    const int m = 1 + static_cast<int>(state % static_cast<std::uint64_t>(m_cap));
    state = splitmix64(state);
    CnfFormula f = t1 ? random_t1_instance(n, m, state) : random_x3sat_instance(n, m, state);
    char mode[32];
    std::snprintf(mode, sizeof mode, "rnd-s%llu", static_cast<unsigned long long>(request.seed));
    out.push_back({instance_id(which, mode, n, m, static_cast<std::size_t>(k)), std::move(f)});
  }
  return out;
}

VerificationReport run_claim(Claim claim, const Instance& instance, const VerifyOptions& options) {
  switch (claim) {
    case Claim::lemma1: return verify_lemma1(instance.formula, instance.id, options);
    case Claim::theorem1: return verify_theorem1(instance.formula, instance.id, options);
    case Claim::lemma4: return verify_lemma4(instance.formula, instance.id, options);
    case Claim::theorem2: return verify_theorem2(instance.formula, instance.id, options);
  }
  throw std::invalid_argument("unknown claim");
}

}  // namespace

AggregateReport run_corpus(const CorpusSpec& request, const VerifyOptions& options) {
  AggregateReport aggregate;
  for (Construction which : {Construction::t1, Construction::t2}) {
    std::vector<Claim> claims;
    for (Claim c : request.claims) {
      const bool t1_claim = c == Claim::lemma1 || c == Claim::theorem1;
      if (t1_claim == (which == Construction::t1)) claims.push_back(c);
    }
    if (claims.empty()) continue;
    const std::vector<Instance> instances = std::visit(
        [&](const auto& source) {
          if constexpr (std::is_same_v<std::decay_t<decltype(source)>, ExhaustiveCorpus>) {
            return exhaustive_instances(which, source);
          } else {
            return random_instances(which, source);
          }
        },
        request.source);
    for (const Instance& instance : instances) {
      for (Claim c : claims) aggregate.reports.push_back(run_claim(c, instance, options));
    }
  }
  std::stable_sort(aggregate.reports.begin(), aggregate.reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return a.instance_id < b.instance_id;
                   });
  return aggregate;
}

std::string to_record_line(const VerificationReport& report) {
  std::string line = report.instance_id + '\t' + report.claim + '\t' +
                     (report.passed() ? "PASS" : "FAIL");
  for (const Check& c : report.checks) {
    line += '\t' + c.name + '=' + c.actual;
    if (!c.pass) line += " (expected " + c.expected + ")";
  }
  return line;
}

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    nlohmann::ordered_json entry{
        {"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
    if (include_timing) entry["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(entry));
  }
  nlohmann::ordered_json facts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.facts) facts[k] = v;
  return {{"instance", report.instance_id},
          {"claim", report.claim},
          {"pass", report.passed()},
          {"facts", facts},
          {"checks", checks}};
}

}  // namespace rmatch
