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

#ifndef RMATCH_CORPUS_HPP_
#define RMATCH_CORPUS_HPP_

#include <functional>

#include "rmatch/cnf.hpp"
#include "rmatch/normalize.hpp"

// Exhaustive instance streams. Formulas are enumerated up to clause order:
// literals inside a clause are sorted and the clause list is non-decreasing,
// so every multiset of clauses is visited exactly once.
namespace rmatch {

using FormulaVisitor = std::function<void(const CnfFormula&)>;

// Formulas over exactly n variables with exactly m clauses that pass
// validate_t1_shape.
void for_each_t1_formula(int n, int m, const FormulaVisitor& visit);

// Formulas over exactly n variables with exactly m clauses that pass
// validate_t2_shape.
void for_each_t2_formula(int n, int m, const FormulaVisitor& visit);

// Source-form exact-SAT instances over n variables: n clauses of three
// positive literals (repeats allowed), every variable occurring exactly three
// times, or at most three times with allow_fewer_occurrences (m is then
// free up to n).
void for_each_xsat_source_formula(int n, const FormulaVisitor& visit,
                                  const NormalizeOptions& options = {});

}  // namespace rmatch

#endif  // RMATCH_CORPUS_HPP_
