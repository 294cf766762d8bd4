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

#ifndef RMATCH_REDUCTIONS_HPP_
#define RMATCH_REDUCTIONS_HPP_

#include <string_view>
#include <vector>

#include "rmatch/cnf.hpp"
#include "rmatch/graph.hpp"
#include "rmatch/matching.hpp"

namespace rmatch {

// Which gadget construction produced a graph.
//   t1: SAT → graphs of maximum degree 4, deciding ν_ac = ν_s.
//   t2: exact SAT → bipartite graphs, deciding ν_ur = ν_s.
enum class Construction { t1, t2 };

std::string_view to_string(Construction which);
Construction parse_construction(std::string_view text);

struct VertexRole {
  enum class Kind { u, f, t, v, literal };

  Kind kind = Kind::u;
  int var = 0;       // u, f, t, and the variable of a literal vertex
  int clause = 0;    // v and literal: zero-based clause index
  int position = 0;  // literal: zero-based position in the clause
  Literal literal;   // literal

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

std::string_view to_string(VertexRole::Kind kind);

// A gadget graph with the role of every vertex. Vertices are numbered block
// by block: u_i, f_i, t_i for each variable, then v_j followed by the
// clause's literal vertices in clause order.
class ReductionGraph {
 public:
  ReductionGraph(Construction which, CnfFormula formula, Graph graph,
                 std::vector<VertexRole> roles);

  Construction which() const { return which_; }
  const CnfFormula& formula() const { return formula_; }
  const Graph& graph() const { return graph_; }
  const std::vector<VertexRole>& roles() const { return roles_; }
  const VertexRole& role(Vertex x) const { return roles_.at(static_cast<std::size_t>(x)); }

  int n() const { return formula_.variable_count; }
  int m() const { return formula_.clause_count(); }

  // Variables are 1-based, clauses and positions 0-based.
  Vertex u(int var) const { return 3 * (var - 1); }
  Vertex f(int var) const { return 3 * (var - 1) + 1; }
  Vertex t(int var) const { return 3 * (var - 1) + 2; }
  Vertex v(int clause) const { return clause_start_.at(static_cast<std::size_t>(clause)); }
  Vertex literal_vertex(int clause, int position) const { return v(clause) + 1 + position; }

  // X_i and C_j.
  VertexSet variable_block(int var) const;
  VertexSet clause_block(int clause) const;

 private:
  Construction which_;
  CnfFormula formula_;
  Graph graph_;
  std::vector<VertexRole> roles_;
  std::vector<Vertex> clause_start_;
};

// Triangles X_i = {u_i, f_i, t_i}, cliques C_j on |c_j| + 1 vertices, f_i
// joined to every vertex of literal x_i, t_i joined to the vertex of ¬x_i.
// Throws std::invalid_argument unless validate_t1_shape accepts f.
ReductionGraph build_t1(const CnfFormula& f);

// Stars X_i centered at u_i with leaves f_i, t_i, stars C_j centered at v_j
// with the clause's three literal vertices as leaves; f_i joined to the
// vertices W of x_i, t_i joined to the other literal vertices of the clauses
// containing x_i. Throws std::invalid_argument unless validate_t2_shape
// accepts f.
ReductionGraph build_t2(const CnfFormula& f);

ReductionGraph build(Construction which, const CnfFormula& f);

// u_i f_i for false, u_i t_i for true, plus v_j w for the first true literal
// vertex w of every clause. Throws std::invalid_argument if `a` does not
// satisfy the formula.
Matching assignment_to_matching_t1(const ReductionGraph& rg, const Assignment& a);

// As the t1 direction, for an assignment with exactly one true literal per
// clause. Throws std::invalid_argument otherwise.
Matching assignment_to_matching_t2(const ReductionGraph& rg, const Assignment& a);

// Exchanges the induced matching into canonical form (one edge inside every
// X_i and every C_j) and reads x_i = 1 iff u_i t_i is matched. Throws
// std::invalid_argument unless mm is an induced matching of size n + m, and
// InternalConsistencyError if the exchange does not terminate within |E|
// steps or yields a non-satisfying assignment.
Assignment matching_to_assignment_t1(const ReductionGraph& rg, const Matching& mm);
Assignment matching_to_assignment_t2(const ReductionGraph& rg, const Matching& mm);

// Dispatch on rg.which().
Matching assignment_to_matching(const ReductionGraph& rg, const Assignment& a);
Assignment matching_to_assignment(const ReductionGraph& rg, const Matching& mm);

// The exchange steps alone; exposed for tests.
Matching canonicalize_t1(const ReductionGraph& rg, const Matching& mm);
Matching canonicalize_t2(const ReductionGraph& rg, const Matching& mm);

}  // namespace rmatch

#endif  // RMATCH_REDUCTIONS_HPP_
