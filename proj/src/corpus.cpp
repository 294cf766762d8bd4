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

#include "rmatch/corpus.hpp"

#include <algorithm>
#include <vector>

namespace rmatch {
namespace {

// Per-literal occurrence caps, indexed by DIMACS code offset by n.
class Capacity {
 public:
  Capacity(int n, int positive_cap, int negative_cap)
      : n_(n), left_(static_cast<std::size_t>(2 * n + 1), 0) {
    for (int v = 1; v <= n; ++v) {
      slot(v) = positive_cap;
      slot(-v) = negative_cap;
    }
  }

  bool take(const Clause& c) {
    bool fits = true;
    for (Literal l : c) fits = --slot(l.to_dimacs()) >= 0 && fits;
    if (!fits) give_back(c);
    return fits;
  }

  void give_back(const Clause& c) {
    for (Literal l : c) ++slot(l.to_dimacs());
  }

 private:
  int& slot(int code) { return left_[static_cast<std::size_t>(code + n_)]; }

  int n_;
  std::vector<int> left_;
};

// Visits non-decreasing sequences of m pool indices accepted by `capacity`.
void enumerate_multisets(const std::vector<Clause>& pool, int n, int m, Capacity& capacity,
                         const std::function<bool(const CnfFormula&)>& accept,
                         const FormulaVisitor& visit) {
  CnfFormula f;
  f.variable_count = n;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (f.clause_count() == m) {
      if (accept(f)) visit(f);
      return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
      if (!capacity.take(pool[k])) continue;
      f.clauses.push_back(pool[k]);
      extend(k);
      f.clauses.pop_back();
      capacity.give_back(pool[k]);
    }
  };
  extend(0);
}

// Clauses with `size` literals on distinct variables, all sign patterns
// unless positive_only.
std::vector<Clause> distinct_variable_clauses(int n, int size, bool positive_only) {
  std::vector<Clause> out;
  std::vector<int> vars(static_cast<std::size_t>(size));
  std::function<void(int, int)> pick = [&](int index, int from) {
    if (index == size) {
      const int patterns = positive_only ? 1 : 1 << size;
      for (int signs = 0; signs < patterns; ++signs) {
        Clause c;
        for (int p = 0; p < size; ++p) {
          const int v = vars[static_cast<std::size_t>(p)];
          c.push_back((signs >> p) & 1 ? Literal::negative(v) : Literal::positive(v));
        }
        out.push_back(std::move(c));
      }
      return;
    }
    for (int v = from; v <= n; ++v) {
      vars[static_cast<std::size_t>(index)] = v;
      pick(index + 1, v + 1);
    }
  };
  pick(0, 1);
  return out;
}

}  // namespace

void for_each_t1_formula(int n, int m, const FormulaVisitor& visit) {
  if (n < 1 || m < 0) return;
  std::vector<Clause> pool = distinct_variable_clauses(n, 2, false);
  for (Clause& c : distinct_variable_clauses(n, 3, false)) pool.push_back(std::move(c));
  Capacity capacity(n, 2, 1);
  enumerate_multisets(pool, n, m, capacity,
                      [](const CnfFormula& f) { return validate_t1_shape(f).ok(); }, visit);
}

void for_each_t2_formula(int n, int m, const FormulaVisitor& visit) {
  if (n < 1 || m < 0) return;
  const std::vector<Clause> pool = distinct_variable_clauses(n, 3, true);
  Capacity capacity(n, 3, 0);
  enumerate_multisets(pool, n, m, capacity,
                      [](const CnfFormula& f) { return validate_t2_shape(f).ok(); }, visit);
}

void for_each_xsat_source_formula(int n, const FormulaVisitor& visit,
                                  const NormalizeOptions& options) {
  if (n < 1) return;
  // Multisets of three variables.
  std::vector<Clause> pool;
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      for (int c = b; c <= n; ++c) {
        pool.push_back({Literal::positive(a), Literal::positive(b), Literal::positive(c)});
      }
    }
  }
  Capacity capacity(n, 3, 0);
  auto exact_occurrences = [&](const CnfFormula& f) {
    if (options.allow_fewer_occurrences) return true;
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (const Clause& c : f.clauses) {
      for (Literal l : c) ++count[static_cast<std::size_t>(l.var())];
    }
    return std::all_of(count.begin() + 1, count.end(), [](int k) { return k == 3; });
  };
  if (options.allow_fewer_occurrences) {
    for (int m = 1; m <= n; ++m) enumerate_multisets(pool, n, m, capacity, exact_occurrences, visit);
  } else {
    enumerate_multisets(pool, n, n, capacity, exact_occurrences, visit);
  }
}

}  // namespace rmatch
