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

#ifndef RMATCH_SOLVER_HPP_
#define RMATCH_SOLVER_HPP_

#include <cstdint>

#include "rmatch/errors.hpp"
#include "rmatch/graph.hpp"
#include "rmatch/matching.hpp"

namespace rmatch {

// The search keeps vertex sets in 64-bit masks.
inline constexpr int kMaxSolverVertices = 64;

struct SolveOptions {
  int vertex_limit = 40;
};

struct SolveResult {
  int value = 0;
  // Lexicographically smallest maximum matching of the requested kind.
  Matching witness;
  std::uint64_t explored_nodes = 0;
};

// Exact maximum cardinality of a matching of the given kind, by
// branch-and-bound over edges in lexicographic order. Throws
// ResourceLimitError when g has more than min(vertex_limit, 64) vertices.
SolveResult max_matching_number(const Graph& g, MatchingKind kind,
                                const SolveOptions& options = {});

bool equality_holds(const Graph& g, MatchingKind a, MatchingKind b,
                    const SolveOptions& options = {});

}  // namespace rmatch

#endif  // RMATCH_SOLVER_HPP_
