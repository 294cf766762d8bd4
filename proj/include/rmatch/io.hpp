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

#ifndef RMATCH_IO_HPP_
#define RMATCH_IO_HPP_

#include <istream>
#include <ostream>

#include "json.hpp"
#include "rmatch/cnf.hpp"
#include "rmatch/graph.hpp"
#include "rmatch/matching.hpp"
#include "rmatch/normalize.hpp"
#include "rmatch/reductions.hpp"

// File formats. Vertex and variable ids are 1-based in every file and 0-based
// (vertices) or 1-based (variables) in memory. Readers throw ParseError.
//
//   graph       c label <v> <text>   p edge <n> <m>   e <u> <v>
//   matching    m <u> <v>            (vertex ids of the host graph file)
//   cnf         p cnf <n> <m>        <lit> ... 0
//   assignment  v <lit> ... 0        (s and c lines are skipped)
namespace rmatch {

Graph read_dimacs_graph(std::istream& in);
void write_dimacs_graph(std::ostream& out, const Graph& g);

Matching read_matching(std::istream& in);
void write_matching(std::ostream& out, const Matching& m);

CnfFormula read_dimacs_cnf(std::istream& in);
void write_dimacs_cnf(std::ostream& out, const CnfFormula& f);

// Variables not mentioned stay unset.
Assignment read_assignment(std::istream& in, int variable_count);
void write_assignment(std::ostream& out, const Assignment& a);

// {"<vertex id>": {"kind": "u|f|t|v|lit", "var": i, "clause": j, "pos": p}}
// with 1-based ids, clauses and positions; "lit" entries also carry the
// DIMACS "literal".
nlohmann::ordered_json roles_to_json(const ReductionGraph& rg);

// {"unsatisfiable": false, "variables": {"<new id>": {"origin": "source",
// "var": i} | {"origin": "gadget", "gadget": g, "role": "a1".."a4",
// "clause": j}}, "fixed": {"<source id>": 0|1}}; an unsatisfiable verdict
// maps to {"unsatisfiable": true, "reason": "..."}.
nlohmann::ordered_json normalize_result_to_json(const NormalizeResult& result);

}  // namespace rmatch

#endif  // RMATCH_IO_HPP_
