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

#include "rmatch/cnf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rmatch/errors.hpp"

namespace rmatch {

Literal Literal::positive(int var) {
  if (var <= 0) throw std::invalid_argument("variable index must be positive");
  return Literal(var);
}

Literal Literal::negative(int var) { return ~positive(var); }

Literal Literal::from_dimacs(int code) {
  if (code == 0) throw std::invalid_argument("literal code 0 is reserved");
  return Literal(code);
}

Clause clause(std::initializer_list<int> codes) {
  Clause c;
  for (int code : codes) c.push_back(Literal::from_dimacs(code));
  return c;
}

CnfFormula make_formula(int variable_count,
                        std::initializer_list<std::initializer_list<int>> clauses) {
  CnfFormula f;
  f.variable_count = variable_count;
  for (auto codes : clauses) f.clauses.push_back(clause(codes));
  require_well_formed(f);
  return f;
}

void require_well_formed(const CnfFormula& f) {
  if (f.variable_count < 0) throw std::invalid_argument("negative variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    for (Literal l : f.clauses[j]) {
      if (l.var() < 1 || l.var() > f.variable_count) {
        throw std::invalid_argument("clause " + std::to_string(j + 1) + " references variable " +
                                    std::to_string(l.to_dimacs()) + " outside 1.." +
                                    std::to_string(f.variable_count));
      }
    }
  }
}

Assignment::Assignment(int variable_count) {
  if (variable_count < 0) throw std::invalid_argument("negative variable count");
  values_.resize(static_cast<std::size_t>(variable_count));
}

Assignment Assignment::from_values(const std::vector<bool>& values) {
  Assignment a(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) a.values_[i] = values[i];
  return a;
}

void Assignment::check_var(int var) const {
  if (var < 1 || var > variable_count()) {
    throw std::invalid_argument("variable " + std::to_string(var) + " outside 1.." +
                                std::to_string(variable_count()));
  }
}

std::optional<bool> Assignment::get(int var) const {
  check_var(var);
  return values_[static_cast<std::size_t>(var - 1)];
}

bool Assignment::value(int var) const {
  auto v = get(var);
  if (!v) throw std::invalid_argument("variable " + std::to_string(var) + " is unassigned");
  return *v;
}

void Assignment::set(int var, bool value) {
  check_var(var);
  values_[static_cast<std::size_t>(var - 1)] = value;
}

bool Assignment::is_total() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
}

std::string Assignment::to_string() const {
  std::string out;
  for (const auto& v : values_) out += v ? (*v ? '1' : '0') : '-';
  return out;
}

int count_true(const Clause& c, const Assignment& a) {
  int count = 0;
  for (Literal l : c) count += l.holds(a.value(l.var())) ? 1 : 0;
  return count;
}

namespace {

void require_total_for(const CnfFormula& f, const Assignment& a) {
  if (a.variable_count() < f.variable_count || !a.is_total()) {
    throw std::invalid_argument("assignment is partial");
  }
}

enum class Mode { sat, exact };

// Depth-first enumeration over x1..xn, 0 before 1, pruning on clauses that
// are already decided. Visits solutions in binary counting order.
class OracleSearch {
 public:
  OracleSearch(const CnfFormula& f, Mode mode, int variable_limit) : f_(f), mode_(mode) {
    require_well_formed(f);
    if (f.variable_count > variable_limit) {
      throw ResourceLimitError("formula has " + std::to_string(f.variable_count) +
                               " variables; oracle limit is " + std::to_string(variable_limit));
    }
    by_var_.resize(static_cast<std::size_t>(f.variable_count) + 1);
    last_var_.resize(f.clauses.size(), 0);
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
      for (Literal l : f.clauses[j]) {
        auto& list = by_var_[static_cast<std::size_t>(l.var())];
        if (list.empty() || list.back() != j) list.push_back(j);
        last_var_[j] = std::max(last_var_[j], l.var());
      }
      if (f.clauses[j].empty()) has_empty_clause_ = true;
    }
    values_.assign(static_cast<std::size_t>(f.variable_count) + 1, 0);
  }

  void run(const std::function<bool(const Assignment&)>& visit) {
    if (has_empty_clause_) return;
    visit_ = &visit;
    descend(1);
  }

 private:
  int true_count(std::size_t j, int assigned_up_to) const {
    int count = 0;
    for (Literal l : f_.clauses[j]) {
      if (l.var() <= assigned_up_to && l.holds(values_[static_cast<std::size_t>(l.var())])) ++count;
    }
    return count;
  }

  bool consistent(int var) const {
    for (std::size_t j : by_var_[static_cast<std::size_t>(var)]) {
      int count = true_count(j, var);
      bool complete = last_var_[j] == var;
      if (mode_ == Mode::exact) {
        if (count > 1 || (complete && count != 1)) return false;
      } else if (complete && count == 0) {
        return false;
      }
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool descend(int var) {
    if (var > f_.variable_count) {
      Assignment a(f_.variable_count);
      for (int i = 1; i <= f_.variable_count; ++i) a.set(i, values_[static_cast<std::size_t>(i)]);
      return (*visit_)(a);
    }
    for (char value : {0, 1}) {
      values_[static_cast<std::size_t>(var)] = value;
      if (consistent(var) && !descend(var + 1)) return false;
    }
    values_[static_cast<std::size_t>(var)] = 0;
    return true;
  }

  const CnfFormula& f_;
  Mode mode_;
  std::vector<std::vector<std::size_t>> by_var_;
  std::vector<int> last_var_;
  std::vector<char> values_;
  bool has_empty_clause_ = false;
  const std::function<bool(const Assignment&)>* visit_ = nullptr;
};

std::optional<Assignment> first_solution(const CnfFormula& f, Mode mode, int variable_limit) {
  std::optional<Assignment> found;
  OracleSearch(f, mode, variable_limit).run([&](const Assignment& a) {
    found = a;
    return false;
  });
  return found;
}

}  // namespace

bool eval_sat(const CnfFormula& f, const Assignment& a) {
  require_total_for(f, a);
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return count_true(c, a) >= 1; });
}

bool eval_exact(const CnfFormula& f, const Assignment& a) {
  require_total_for(f, a);
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return count_true(c, a) == 1; });
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f, int variable_limit) {
  return first_solution(f, Mode::sat, variable_limit);
}

std::optional<Assignment> brute_force_xsat(const CnfFormula& f, int variable_limit) {
  return first_solution(f, Mode::exact, variable_limit);
}

void for_each_exact_solution(const CnfFormula& f,
                             const std::function<bool(const Assignment&)>& visit,
                             int variable_limit) {
  OracleSearch(f, Mode::exact, variable_limit).run(visit);
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    if (v.clause) out += "clause " + std::to_string(*v.clause + 1) + ": ";
    out += v.message;
  }
  return out;
}

ValidationReport validate_t1_shape(const CnfFormula& f) {
  require_well_formed(f);
  ValidationReport report;
  std::map<Literal, std::vector<int>> occurrences;
  for (int j = 0; j < f.clause_count(); ++j) {
    const Clause& c = f.clauses[static_cast<std::size_t>(j)];
    if (c.size() < 2 || c.size() > 3) {
      report.violations.push_back({j, "has " + std::to_string(c.size()) + " literals, expected 2 or 3"});
    }
    for (std::size_t p = 0; p < c.size(); ++p) {
      for (std::size_t q = p + 1; q < c.size(); ++q) {
        if (c[p] == ~c[q]) {
          report.violations.push_back(
              {j, "contains x" + std::to_string(c[p].var()) + " and its negation"});
        } else if (c[p] == c[q]) {
          report.violations.push_back(
              {j, "repeats literal " + std::to_string(c[p].to_dimacs())});
        }
      }
    }
    for (Literal l : c) {
      auto& list = occurrences[l];
      if (list.empty() || list.back() != j) list.push_back(j);
    }
  }
  for (const auto& [literal, clauses] : occurrences) {
    const std::size_t cap = literal.negated() ? 1 : 2;
    if (clauses.size() > cap) {
      report.violations.push_back(
          {clauses[cap], "literal " + std::to_string(literal.to_dimacs()) + " occurs in " +
                             std::to_string(clauses.size()) + " clauses, at most " +
                             std::to_string(cap) + " allowed"});
    }
  }
  return report;
}

ValidationReport validate_t2_shape(const CnfFormula& f) {
  require_well_formed(f);
  ValidationReport report;
  std::map<int, std::vector<int>> occurrences;
  for (int j = 0; j < f.clause_count(); ++j) {
    const Clause& c = f.clauses[static_cast<std::size_t>(j)];
    if (c.size() != 3) {
      report.violations.push_back({j, "has " + std::to_string(c.size()) + " literals, expected 3"});
    }
    for (std::size_t p = 0; p < c.size(); ++p) {
      if (c[p].negated()) {
        report.violations.push_back({j, "negative literal " + std::to_string(c[p].to_dimacs())});
      }
      for (std::size_t q = p + 1; q < c.size(); ++q) {
        if (c[p] == c[q]) {
          report.violations.push_back({j, "repeats literal " + std::to_string(c[p].to_dimacs())});
        }
      }
      occurrences[c[p].var()].push_back(j);
    }
  }
  for (const auto& [var, clauses] : occurrences) {
    if (clauses.size() > 3) {
      report.violations.push_back({clauses[3], "variable " + std::to_string(var) + " occurs " +
                                                   std::to_string(clauses.size()) +
                                                   " times, at most 3 allowed"});
    }
  }
  return report;
}

}  // namespace rmatch
