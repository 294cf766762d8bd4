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

#include "rmatch/normalize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "rmatch/errors.hpp"

namespace rmatch {

Assignment NormalizedFormula::lift(const Assignment& a) const {
  if (a.variable_count() != formula.variable_count || !a.is_total()) {
    throw std::invalid_argument("lift expects a total assignment of the normalized formula");
  }
  Assignment out(fixed.variable_count());
  for (int v = 1; v <= out.variable_count(); ++v) out.set(v, fixed.get(v).value_or(false));
  for (int v = 1; v <= formula.variable_count; ++v) {
    const VariableOrigin& o = origin[static_cast<std::size_t>(v - 1)];
    if (o.kind == VariableOrigin::Kind::source) out.set(o.source_var, a.value(v));
  }
  return out;
}

void require_xsat_source_form(const CnfFormula& f, const NormalizeOptions& options) {
  require_well_formed(f);
  std::vector<int> occurrences(static_cast<std::size_t>(f.variable_count) + 1, 0);
  for (int j = 0; j < f.clause_count(); ++j) {
    const Clause& c = f.clauses[static_cast<std::size_t>(j)];
    if (c.size() != 3) {
      throw std::invalid_argument("clause " + std::to_string(j + 1) + " has " +
                                  std::to_string(c.size()) + " literals, expected 3");
    }
    for (Literal l : c) {
      if (l.negated()) {
        throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                    " contains a negative literal");
      }
      ++occurrences[static_cast<std::size_t>(l.var())];
    }
  }
  for (int v = 1; v <= f.variable_count; ++v) {
    const int k = occurrences[static_cast<std::size_t>(v)];
    if (k > 3 || (!options.allow_fewer_occurrences && k != 3)) {
      throw std::invalid_argument("variable " + std::to_string(v) + " occurs " +
                                  std::to_string(k) + " times, expected " +
                                  (options.allow_fewer_occurrences ? "at most 3" : "exactly 3"));
    }
  }
}

namespace {

struct Contradiction {
  std::string reason;
};

// Forces values until every clause with no true literal has two or three
// distinct unassigned literals. Returns a contradiction when some clause can
// no longer have exactly one true literal.
std::optional<Contradiction> propagate(const CnfFormula& f, Assignment& values) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < f.clause_count(); ++j) {
      const Clause& c = f.clauses[static_cast<std::size_t>(j)];
      int true_count = 0;
      std::vector<Literal> open;
      for (Literal l : c) {
        if (auto v = values.get(l.var())) {
          true_count += l.holds(*v) ? 1 : 0;
        } else {
          open.push_back(l);
        }
      }
      const std::string where = "clause " + std::to_string(j + 1);
      if (true_count > 1) return Contradiction{where + " has two true literals"};
      if (true_count == 1) {
        for (Literal l : open) values.set(l.var(), l.negated());
        changed = changed || !open.empty();
        continue;
      }
      if (open.empty()) return Contradiction{where + " has no true literal left"};
      std::optional<Literal> repeated;
      for (std::size_t p = 0; p < open.size() && !repeated; ++p) {
        for (std::size_t q = p + 1; q < open.size(); ++q) {
          if (open[p].var() == open[q].var()) {
            repeated = open[p];
            break;
          }
        }
      }
      if (repeated) {
        // A repeated literal cannot be the single true one.
        values.set(repeated->var(), repeated->negated());
        changed = true;
      } else if (open.size() == 1) {
        values.set(open[0].var(), !open[0].negated());
        changed = true;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NormalizeResult normalize_xsat(const CnfFormula& f, const NormalizeOptions& options) {
  require_xsat_source_form(f, options);

  Assignment values(f.variable_count);
  if (auto contradiction = propagate(f, values)) {
    return UnsatisfiableVerdict{contradiction->reason};
  }

  std::vector<Clause> remaining;
  std::vector<int> remaining_source;
  std::vector<char> kept(static_cast<std::size_t>(f.variable_count) + 1, 0);
  for (int j = 0; j < f.clause_count(); ++j) {
    Clause open;
    bool satisfied = false;
    for (Literal l : f.clauses[static_cast<std::size_t>(j)]) {
      if (auto v = values.get(l.var())) {
        satisfied = satisfied || l.holds(*v);
      } else {
        open.push_back(l);
      }
    }
    if (satisfied) continue;
    for (Literal l : open) kept[static_cast<std::size_t>(l.var())] = 1;
    remaining.push_back(std::move(open));
    remaining_source.push_back(j);
  }

  NormalizedFormula out;
  out.fixed = values;
  std::vector<int> renumber(static_cast<std::size_t>(f.variable_count) + 1, 0);
  int next_var = 0;
  for (int v = 1; v <= f.variable_count; ++v) {
    if (!kept[static_cast<std::size_t>(v)]) continue;
    renumber[static_cast<std::size_t>(v)] = ++next_var;
    out.origin.push_back({VariableOrigin::Kind::source, v, 0, 0});
  }

  auto mapped = [&](Literal l) {
    const int v = renumber[static_cast<std::size_t>(l.var())];
    return l.negated() ? Literal::negative(v) : Literal::positive(v);
  };

  // Gadget variables are numbered after all kept source variables.
  int gadget_var = next_var;
  for (std::size_t k = 0; k < remaining.size(); ++k) {
    const Clause& c = remaining[k];
    if (c.size() == 3) {
      out.formula.clauses.push_back({mapped(c[0]), mapped(c[1]), mapped(c[2])});
      continue;
    }
    if (c.size() != 2) {
      throw InternalConsistencyError("propagation left a clause of size " +
                                     std::to_string(c.size()));
    }
    Gadget gadget;
    gadget.source_clause = remaining_source[k];
    for (int r = 0; r < 4; ++r) {
      gadget.vars[static_cast<std::size_t>(r)] = ++gadget_var;
      out.origin.push_back({VariableOrigin::Kind::gadget, 0,
                            static_cast<int>(out.gadgets.size()), r + 1});
    }
    const Literal a1 = Literal::positive(gadget.vars[0]);
    const Literal a2 = Literal::positive(gadget.vars[1]);
    const Literal a3 = Literal::positive(gadget.vars[2]);
    const Literal a4 = Literal::positive(gadget.vars[3]);
    out.formula.clauses.push_back({mapped(c[0]), mapped(c[1]), a1});
    out.formula.clauses.push_back({a1, a2, a3});
    out.formula.clauses.push_back({a1, a2, a4});
    out.formula.clauses.push_back({a2, a3, a4});
    out.gadgets.push_back(gadget);
  }
  out.formula.variable_count = gadget_var;
  return out;
}

}  // namespace rmatch
