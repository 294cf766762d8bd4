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

#ifndef RMATCH_CNF_HPP_
#define RMATCH_CNF_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace rmatch {

// A signed reference to a variable in 1..n, stored in DIMACS convention.
class Literal {
 public:
  constexpr Literal() = default;

  static Literal positive(int var);
  static Literal negative(int var);
  // Throws std::invalid_argument on 0.
  static Literal from_dimacs(int code);

  constexpr int var() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool negated() const { return code_ < 0; }
  constexpr int to_dimacs() const { return code_; }
  constexpr Literal operator~() const { return Literal(-code_); }

  // True under the given value of its variable.
  constexpr bool holds(bool value) const { return negated() ? !value : value; }

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;

 private:
  constexpr explicit Literal(int code) : code_(code) {}
  int code_ = 0;
};

using Clause = std::vector<Literal>;

// Clause from DIMACS codes, e.g. clause({1, -2}).
Clause clause(std::initializer_list<int> codes);

struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Convenience constructor from DIMACS codes.
CnfFormula make_formula(int variable_count, std::initializer_list<std::initializer_list<int>> clauses);

// Throws std::invalid_argument if a literal is outside 1..variable_count.
void require_well_formed(const CnfFormula& f);

// Truth values for variables 1..n; entries may be unset.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int variable_count);
  // values[i] is the value of variable i+1.
  static Assignment from_values(const std::vector<bool>& values);

  int variable_count() const { return static_cast<int>(values_.size()); }
  std::optional<bool> get(int var) const;
  // Throws std::invalid_argument if var is unset or out of range.
  bool value(int var) const;
  void set(int var, bool value);
  bool is_total() const;

  // e.g. "0110" for x1..x4; '-' marks unset.
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  void check_var(int var) const;
  std::vector<std::optional<bool>> values_;
};

// Number of true literals in c under a (a total on c's variables).
int count_true(const Clause& c, const Assignment& a);

// Every clause has a true literal. Throws std::invalid_argument on a
// partial assignment.
bool eval_sat(const CnfFormula& f, const Assignment& a);
// Every clause has exactly one true literal, counted with multiplicity.
bool eval_exact(const CnfFormula& f, const Assignment& a);

inline constexpr int kOracleVariableLimit = 24;

// First satisfying assignment in binary counting order with x1 as the most
// significant digit. Throws ResourceLimitError when f has more than
// variable_limit variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& f,
                                          int variable_limit = kOracleVariableLimit);
// As brute_force_sat, for exact satisfaction.
std::optional<Assignment> brute_force_xsat(const CnfFormula& f,
                                           int variable_limit = kOracleVariableLimit);

// Visits every exact-satisfying assignment in binary counting order. The
// visitor returns false to stop early.
void for_each_exact_solution(const CnfFormula& f,
                             const std::function<bool(const Assignment&)>& visit,
                             int variable_limit = kOracleVariableLimit);

struct Violation {
  // Zero-based clause index, absent for formula-level violations.
  std::optional<int> clause;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Clauses of two or three literals, positive literals in at most two
// clauses, negative literals in at most one, no complementary pair in a clause.
ValidationReport validate_t1_shape(const CnfFormula& f);

// Only positive literals, each in at most three clause positions, every
// clause of size exactly three, no literal twice in a clause.
ValidationReport validate_t2_shape(const CnfFormula& f);

// Random formula passing validate_t1_shape; deterministic per seed.
// Throws std::invalid_argument when no such formula exists or none is found.
CnfFormula random_t1_instance(int n, int m, std::uint64_t seed);
// Random formula passing validate_t2_shape; deterministic per seed.
CnfFormula random_x3sat_instance(int n, int m, std::uint64_t seed);

}  // namespace rmatch

#endif  // RMATCH_CNF_HPP_
