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

#include <sstream>
#include <string>

#include "rmatch/errors.hpp"
#include "rmatch/io.hpp"

namespace rmatch {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

CnfFormula read_dimacs_cnf(std::istream& in) {
  CnfFormula f;
  bool have_header = false;
  int declared_clauses = 0;
  Clause current;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream iss(line);
    std::string first;
    if (!(iss >> first) || first == "c" || first == "%") continue;
    if (first == "p") {
      std::string format;
      if (have_header) fail(line_no, "second problem line");
      if (!(iss >> format >> f.variable_count >> declared_clauses) || format != "cnf") {
        fail(line_no, "expected 'p cnf <n> <m>'");
      }
      if (f.variable_count < 0 || declared_clauses < 0) fail(line_no, "negative count");
      have_header = true;
      continue;
    }
    if (!have_header) fail(line_no, "clause before problem line");
    std::istringstream tokens(line);
    for (std::string token; tokens >> token;) {
      int code;
      try {
        std::size_t used = 0;
        code = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        fail(line_no, "bad literal '" + token + "'");
      }
      if (code == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (code > f.variable_count || -code > f.variable_count) {
        fail(line_no, "literal " + token + " exceeds the declared variable count");
      }
      current.push_back(Literal::from_dimacs(code));
    }
  }
  if (!have_header) fail(line_no, "missing problem line");
  if (!current.empty()) fail(line_no, "last clause is not terminated by 0");
  if (f.clause_count() != declared_clauses) {
    fail(line_no, "problem line declares " + std::to_string(declared_clauses) +
                      " clauses, found " + std::to_string(f.clause_count()));
  }
  return f;
}

void write_dimacs_cnf(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.variable_count << ' ' << f.clause_count() << '\n';
  for (const Clause& c : f.clauses) {
    for (Literal l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

Assignment read_assignment(std::istream& in, int variable_count) {
  Assignment a(variable_count);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag) || tag == "c" || tag == "s") continue;
    if (tag != "v") fail(line_no, "unknown line type '" + tag + "'");
    for (int code; iss >> code;) {
      if (code == 0) break;
      const int var = code < 0 ? -code : code;
      if (var > variable_count) fail(line_no, "variable " + std::to_string(var) + " out of range");
      a.set(var, code > 0);
    }
  }
  return a;
}

void write_assignment(std::ostream& out, const Assignment& a) {
  out << 'v';
  for (int var = 1; var <= a.variable_count(); ++var) {
    if (auto value = a.get(var)) out << ' ' << (*value ? var : -var);
  }
  out << " 0\n";
}

nlohmann::ordered_json roles_to_json(const ReductionGraph& rg) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (Vertex x = 0; x < rg.graph().vertex_count(); ++x) {
    const VertexRole& r = rg.role(x);
    nlohmann::ordered_json entry{{"kind", std::string(to_string(r.kind))}};
    switch (r.kind) {
      case VertexRole::Kind::u:
      case VertexRole::Kind::f:
      case VertexRole::Kind::t:
        entry["var"] = r.var;
        break;
      case VertexRole::Kind::v:
        entry["clause"] = r.clause + 1;
        break;
      case VertexRole::Kind::literal:
        entry["var"] = r.var;
        entry["clause"] = r.clause + 1;
        entry["pos"] = r.position + 1;
        entry["literal"] = r.literal.to_dimacs();
        break;
    }
    out[std::to_string(x + 1)] = std::move(entry);
  }
  return out;
}

nlohmann::ordered_json normalize_result_to_json(const NormalizeResult& result) {
  if (const auto* verdict = std::get_if<UnsatisfiableVerdict>(&result)) {
    return {{"unsatisfiable", true}, {"reason", verdict->reason}};
  }
  const auto& nf = std::get<NormalizedFormula>(result);
  nlohmann::ordered_json variables = nlohmann::ordered_json::object();
  for (int v = 1; v <= nf.formula.variable_count; ++v) {
    const VariableOrigin& o = nf.origin[static_cast<std::size_t>(v - 1)];
    if (o.kind == VariableOrigin::Kind::source) {
      variables[std::to_string(v)] = {{"origin", "source"}, {"var", o.source_var}};
    } else {
      variables[std::to_string(v)] = {
          {"origin", "gadget"},
          {"gadget", o.gadget + 1},
          {"role", "a" + std::to_string(o.role)},
          {"clause", nf.gadgets[static_cast<std::size_t>(o.gadget)].source_clause + 1}};
    }
  }
  nlohmann::ordered_json fixed = nlohmann::ordered_json::object();
  for (int v = 1; v <= nf.fixed.variable_count(); ++v) {
    if (auto value = nf.fixed.get(v)) fixed[std::to_string(v)] = *value ? 1 : 0;
  }
  return {{"unsatisfiable", false}, {"variables", variables}, {"fixed", fixed}};
}

}  // namespace rmatch
