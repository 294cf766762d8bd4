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

#include <stdexcept>

#include "doctest.h"
#include "rmatch/verify.hpp"

using namespace rmatch;

namespace {

const Check* find_check(const VerificationReport& r, const std::string& name) {
  for (const Check& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("acyclic count on t1 instances") {
  const VerificationReport r = verify_lemma1(make_formula(2, {{1, 2}, {-1, 2}}), "a");
  CHECK(r.passed());
  CHECK(r.instance_id == "a");
  CHECK(r.claim == "lemma1");
  REQUIRE(find_check(r, "nu_ac") != nullptr);
  CHECK(find_check(r, "nu_ac")->actual == "4");

  CHECK(find_check(verify_lemma1(make_formula(2, {{1, 2}})), "nu_ac")->actual == "3");
  CHECK_THROWS_AS(verify_lemma1(make_formula(2, {{1, -1}})), std::invalid_argument);
}

TEST_CASE("SAT equivalence on t1 instances") {
  const VerificationReport sat = verify_theorem1(make_formula(2, {{1, 2}, {-1, 2}}));
  CHECK(sat.passed());
  CHECK(sat.fact("satisfiable") == "true");
  CHECK(find_check(sat, "round_trip") != nullptr);
  CHECK(find_check(sat, "solver_witness_decodes") != nullptr);

  const VerificationReport unsat =
      verify_theorem1(make_formula(4, {{1, 2}, {1, -2}, {-1, -3}, {3, 4}, {3, -4}}));
  CHECK(unsat.passed());
  CHECK(unsat.fact("satisfiable") == "false");
  CHECK(unsat.fact("nu_ac") == "9");
  CHECK(std::stoi(*unsat.fact("nu_s")) < 9);
}

TEST_CASE("exact-SAT equivalence on t2 instances") {
  const VerificationReport single = verify_theorem2(make_formula(3, {{1, 2, 3}}));
  CHECK(single.passed());
  CHECK(single.fact("nu_ur") == "4");
  CHECK(single.fact("nu_s") == "4");
  CHECK(verify_lemma4(make_formula(3, {{1, 2, 3}})).passed());

  const VerificationReport none =
      verify_theorem2(make_formula(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  CHECK(none.passed());
  CHECK(none.fact("satisfiable") == "false");
  CHECK(none.fact("nu_ur") == "8");
}

TEST_CASE("source-form instances are normalized first") {
  const VerificationReport r = verify_theorem2(make_formula(4, {{1, 1, 2}, {1, 3, 4}}));
  CHECK(r.passed());
  CHECK(r.fact("normalized") == "true");
  CHECK(find_check(r, "normalization_preserves_xsat") != nullptr);
  CHECK(find_check(r, "lifted_witness") != nullptr);

  const VerificationReport contradiction = verify_theorem2(make_formula(1, {{1, 1, 1}}));
  CHECK(contradiction.passed());
  CHECK(contradiction.fact("satisfiable") == "false");

  CHECK_THROWS_AS(verify_theorem2(make_formula(2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("resource limits propagate") {
  VerifyOptions tight;
  tight.solve.vertex_limit = 5;
  CHECK_THROWS_AS(verify_lemma1(make_formula(2, {{1, 2}}), "", tight), ResourceLimitError);
}

TEST_CASE("claims") {
  CHECK(parse_claim("thm1") == Claim::theorem1);
  CHECK(parse_claim("theorem2") == Claim::theorem2);
  CHECK(to_string(Claim::lemma4) == "lemma4");
  CHECK_THROWS_AS(parse_claim("lemma9"), std::invalid_argument);
}

TEST_CASE("exhaustive corpus run") {
  const AggregateReport all =
      run_corpus({{Claim::lemma1, Claim::theorem1}, ExhaustiveCorpus{3, 2}});
  CHECK(all.reports.size() == 2 * 148);
  CHECK(all.ok());
  CHECK(all.reports.front().instance_id == "t1-exh-2-1-00000");
  CHECK(all.reports.front().claim == "lemma1");
  CHECK(all.reports[1].claim == "thm1");
  for (std::size_t k = 1; k < all.reports.size(); ++k) {
    REQUIRE(all.reports[k - 1].instance_id <= all.reports[k].instance_id);
  }
}

TEST_CASE("seeded random corpus run is reproducible") {
  const CorpusSpec request{{Claim::lemma4, Claim::theorem2}, RandomCorpus{200, 42}};
  const AggregateReport first = run_corpus(request);
  CHECK(first.reports.size() == 400);
  CHECK(first.ok());
  const AggregateReport second = run_corpus(request);
  REQUIRE(second.reports.size() == first.reports.size());
  for (std::size_t k = 0; k < first.reports.size(); ++k) {
    REQUIRE(to_record_line(first.reports[k]) == to_record_line(second.reports[k]));
  }
  CHECK(first.reports.front().instance_id.rfind("t2-rnd-s42-", 0) == 0);
}

TEST_CASE("empty corpus") {
  const AggregateReport none = run_corpus({{Claim::lemma1}, ExhaustiveCorpus{0, 0}});
  CHECK(none.reports.empty());
  CHECK(none.ok());
  CHECK(run_corpus({{}, RandomCorpus{10, 1}}).reports.empty());
}

TEST_CASE("report rendering") {
  const VerificationReport r = verify_lemma1(make_formula(2, {{1, 2}}), "x");
  CHECK(to_record_line(r) == "x\tlemma1\tPASS\tnu_ac=3\twitness_kind=true");
  const auto j = to_json(r);
  CHECK(j["instance"] == "x");
  CHECK(j["pass"] == true);
  CHECK(j["checks"][0]["expected"] == "3");
  CHECK_FALSE(j["checks"][0].contains("elapsed_ms"));
  CHECK(to_json(r, true)["checks"][0].contains("elapsed_ms"));

  VerificationReport broken = r;
  broken.checks[0].actual = "2";
  broken.checks[0].pass = false;
  CHECK_FALSE(broken.passed());
  CHECK(to_record_line(broken) == "x\tlemma1\tFAIL\tnu_ac=2 (expected 3)\twitness_kind=true");
}
