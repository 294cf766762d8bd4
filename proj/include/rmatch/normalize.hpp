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

#ifndef RMATCH_NORMALIZE_HPP_
#define RMATCH_NORMALIZE_HPP_

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "rmatch/cnf.hpp"

namespace rmatch {

// Where a variable of a normalized formula came from.
struct VariableOrigin {
  enum class Kind { source, gadget };

  Kind kind = Kind::source;
  int source_var = 0;  // kind == source
  int gadget = 0;      // kind == gadget: zero-based gadget index
  int role = 0;        // kind == gadget: 1..4 for a1..a4

  friend bool operator==(const VariableOrigin&, const VariableOrigin&) = default;
};

// The four clauses x∨y∨a1, a1∨a2∨a3, a1∨a2∨a4, a2∨a3∨a4 replacing a
// two-literal clause x∨y.
struct Gadget {
  int source_clause = 0;         // zero-based clause index in the input
  std::array<int, 4> vars{};     // normalized ids of a1..a4
};

struct NormalizedFormula {
  CnfFormula formula;
  // origin[v - 1] for every variable v of `formula`.
  std::vector<VariableOrigin> origin;
  std::vector<Gadget> gadgets;
  // Values forced during propagation, over the input's variables.
  Assignment fixed;

  // Maps an assignment of `formula` back to the input's variables. Input
  // variables that were neither fixed nor kept are set to 0.
  Assignment lift(const Assignment& a) const;
};

struct UnsatisfiableVerdict {
  std::string reason;
};

using NormalizeResult = std::variant<NormalizedFormula, UnsatisfiableVerdict>;

struct NormalizeOptions {
  // Accept inputs where a variable occurs fewer than three times.
  bool allow_fewer_occurrences = false;
};

// Throws std::invalid_argument unless every clause has exactly three
// positive literals and every variable occurs exactly three times (at most
// three when allow_fewer_occurrences is set). Repeats within a clause count.
void require_xsat_source_form(const CnfFormula& f, const NormalizeOptions& options = {});

// Rewrites a source-form instance into one passing validate_t2_shape with
// the same exact-satisfiability. A clause repeating a literal x forces x = 0
// and its remaining literal to 1; forced values are propagated to a fixed
// point and the forced variables deleted. Surviving two-literal clauses are
// replaced by the four-clause gadget on fresh variables.
NormalizeResult normalize_xsat(const CnfFormula& f, const NormalizeOptions& options = {});

}  // namespace rmatch

#endif  // RMATCH_NORMALIZE_HPP_
