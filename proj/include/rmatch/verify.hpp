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

#ifndef RMATCH_VERIFY_HPP_
#define RMATCH_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rmatch/cnf.hpp"
#include "rmatch/solver.hpp"

namespace rmatch {

// One comparison inside a report. pass == (expected == actual).
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string instance_id;
  std::string claim;
  std::vector<Check> checks;
  // Extra facts about the instance, e.g. the oracle verdict. Not compared.
  std::vector<std::pair<std::string, std::string>> facts;

  bool passed() const;
  std::optional<std::string> fact(std::string_view key) const;
  double max_elapsed_ms() const;
};

struct VerifyOptions {
  SolveOptions solve;
  int oracle_variable_limit = kOracleVariableLimit;
};

// ν_ac(G) = n + m on the t1 graph. Throws std::invalid_argument unless f
// passes validate_t1_shape.
VerificationReport verify_lemma1(const CnfFormula& f, std::string instance_id = "",
                                 const VerifyOptions& options = {});

// Γ satisfiable ⟺ ν_ac(G) = ν_s(G) on the t1 graph, plus witness round trips
// when Γ is satisfiable.
VerificationReport verify_theorem1(const CnfFormula& f, std::string instance_id = "",
                                   const VerifyOptions& options = {});

// ν_ur(G) = n + m on the t2 graph. Throws std::invalid_argument unless f
// passes validate_t2_shape.
VerificationReport verify_lemma4(const CnfFormula& f, std::string instance_id = "",
                                 const VerifyOptions& options = {});

// Γ exact-satisfiable ⟺ ν_ur(G) = ν_s(G) on the t2 graph, plus witness
// round trips. Source-form inputs that fail validate_t2_shape are normalized
// first; an "unsatisfiable" normalization verdict is only compared against
// the oracle on the input.
VerificationReport verify_theorem2(const CnfFormula& f, std::string instance_id = "",
                                   const VerifyOptions& options = {});

enum class Claim { lemma1, theorem1, lemma4, theorem2 };

std::string_view to_string(Claim claim);
// Accepts lemma1, thm1, lemma4, thm2 (and theorem1/theorem2).
Claim parse_claim(std::string_view text);

struct ExhaustiveCorpus {
  // Every formula with 1..max_n variables and 1..max_m clauses.
  int max_n = 0;
  int max_m = 0;
};

struct RandomCorpus {
  int count = 0;
  std::uint64_t seed = 0;
  // Zero selects the defaults: n in 2..4, m in 1..3 for t1 claims and n in
  // 3..5, m in 1..min(3, n) for t2 claims.
  int max_n = 0;
  int max_m = 0;
};

struct CorpusSpec {
  std::vector<Claim> claims;
  std::variant<ExhaustiveCorpus, RandomCorpus> source;
};

struct AggregateReport {
  // Sorted by instance id, then claim.
  std::vector<VerificationReport> reports;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

AggregateReport run_corpus(const CorpusSpec& request, const VerifyOptions& options = {});

// Single-line records with a stable field order.
std::string to_record_line(const VerificationReport& report);
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = false);

}  // namespace rmatch

#endif  // RMATCH_VERIFY_HPP_
