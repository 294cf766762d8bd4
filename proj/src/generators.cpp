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

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmatch/cnf.hpp"

namespace rmatch {
namespace {

constexpr int kAttempts = 1000;

// mt19937_64 is fully specified by the standard; the distributions are not,
// so draws are reduced by hand to stay reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  int below(int bound) {
    const auto b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<int>(x % b);
  }

 private:
  std::mt19937_64 engine_;
};

// Picks k distinct variables from those with capacity left.
std::vector<int> pick_distinct(Rng& rng, const std::vector<int>& candidates, int k) {
  std::vector<int> pool = candidates;
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    int idx = rng.below(static_cast<int>(pool.size()));
    out.push_back(pool[static_cast<std::size_t>(idx)]);
    pool.erase(pool.begin() + idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CnfFormula random_t1_instance(int n, int m, std::uint64_t seed) {
  if (n < 2 || m < 0 || 2 * m > 3 * n) {
    throw std::invalid_argument("no formula of the required shape has " + std::to_string(n) +
                                " variables and " + std::to_string(m) + " clauses");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<int> pos_left(static_cast<std::size_t>(n) + 1, 2);
    std::vector<int> neg_left(static_cast<std::size_t>(n) + 1, 1);
    CnfFormula f;
    f.variable_count = n;
    bool stuck = false;
    for (int j = 0; j < m && !stuck; ++j) {
      std::vector<int> candidates;
      int capacity = 0;
      for (int v = 1; v <= n; ++v) {
        int cap = pos_left[static_cast<std::size_t>(v)] + neg_left[static_cast<std::size_t>(v)];
        if (cap > 0) candidates.push_back(v);
        capacity += cap;
      }
      const int clauses_after = m - j - 1;
      int size = 2 + rng.below(2);
      if (size == 3 && (capacity - 3 < 2 * clauses_after || candidates.size() < 3)) size = 2;
      if (static_cast<int>(candidates.size()) < size) {
        stuck = true;
        break;
      }
      Clause c;
      for (int v : pick_distinct(rng, candidates, size)) {
        auto vi = static_cast<std::size_t>(v);
        bool negative;
        if (pos_left[vi] > 0 && neg_left[vi] > 0) {
          negative = rng.below(3) == 0;
        } else {
          negative = pos_left[vi] == 0;
        }
        (negative ? neg_left[vi] : pos_left[vi])--;
        c.push_back(negative ? Literal::negative(v) : Literal::positive(v));
      }
      f.clauses.push_back(std::move(c));
    }
    if (!stuck && validate_t1_shape(f).ok()) return f;
  }
  throw std::invalid_argument("failed to generate a formula with " + std::to_string(n) +
                              " variables and " + std::to_string(m) + " clauses");
}

CnfFormula random_x3sat_instance(int n, int m, std::uint64_t seed) {
  if (n < 3 || m < 0 || m > n) {
    throw std::invalid_argument("no formula of the required shape has " + std::to_string(n) +
                                " variables and " + std::to_string(m) + " clauses");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<int> left(static_cast<std::size_t>(n) + 1, 3);
    CnfFormula f;
    f.variable_count = n;
    bool stuck = false;
    for (int j = 0; j < m; ++j) {
      std::vector<int> candidates;
      for (int v = 1; v <= n; ++v) {
        if (left[static_cast<std::size_t>(v)] > 0) candidates.push_back(v);
      }
      if (candidates.size() < 3) {
        stuck = true;
        break;
      }
      Clause c;
      for (int v : pick_distinct(rng, candidates, 3)) {
        left[static_cast<std::size_t>(v)]--;
        c.push_back(Literal::positive(v));
      }
      f.clauses.push_back(std::move(c));
    }
    if (!stuck && validate_t2_shape(f).ok()) return f;
  }
  throw std::invalid_argument("failed to generate a formula with " + std::to_string(n) +
                              " variables and " + std::to_string(m) + " clauses");
}

}  // namespace rmatch
