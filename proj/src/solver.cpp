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

#include "rmatch/solver.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace rmatch {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Depth-first branch-and-bound. Children are generated by choosing the next
// edge to include in increasing edge order, so equal-size matchings are
// reached in lexicographic order and only a strictly larger matching replaces
// the incumbent.
class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, MatchingKind kind)
      : kind_(kind), adjacency_(static_cast<std::size_t>(g.vertex_count()), 0),
        mate_(static_cast<std::size_t>(g.vertex_count()), -1) {
    for (const Edge& e : g.edges()) {
      adjacency_[static_cast<std::size_t>(e.u)] |= bit(e.v);
      adjacency_[static_cast<std::size_t>(e.v)] |= bit(e.u);
      edges_.push_back(e);
    }
  }

  SolveResult run() {
    search(0);
    SolveResult result;
    result.value = static_cast<int>(best_.size());
    std::vector<Edge> chosen;
    for (std::size_t index : best_) chosen.push_back(edges_[index]);
    result.witness = Matching(std::move(chosen));
    result.explored_nodes = nodes_;
    return result;
  }

 private:
  Mask neighborhood(Mask set) const {
    Mask out = 0;
    for (Mask rest = set; rest; rest &= rest - 1) {
      out |= adjacency_[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    return out;
  }

  // Vertices that may still be covered by an extension of the current matching.
  Mask available() const {
    Mask free = ~covered_;
    if (kind_ == MatchingKind::induced) free &= ~neighborhood(covered_);
    return free;
  }

  int upper_bound(std::size_t next, Mask free) const {
    Mask touched = 0;
    for (std::size_t j = next; j < edges_.size(); ++j) {
      const Edge& e = edges_[j];
      if ((free & bit(e.u)) && (free & bit(e.v))) touched |= bit(e.u) | bit(e.v);
    }
    return static_cast<int>(chosen_.size()) + std::popcount(touched) / 2;
  }

  Mask component_within_covered(int start) const {
    Mask component = bit(start);
    Mask frontier = component;
    while (frontier) {
      Mask grown = neighborhood(frontier) & covered_ & ~component;
      component |= grown;
      frontier = grown;
    }
    return component;
  }

  // G(M) stays a forest after adding the edge ab to a forest G(M).
  bool keeps_forest(int a, int b) const {
    Mask from_a = adjacency_[static_cast<std::size_t>(a)] & covered_;
    Mask from_b = adjacency_[static_cast<std::size_t>(b)] & covered_;
    if (from_a & from_b) return false;
    Mask seen = 0;
    for (Mask rest = from_a | from_b; rest; rest &= rest - 1) {
      int x = std::countr_zero(rest);
      if (seen & bit(x)) return false;
      seen |= component_within_covered(x);
    }
    return true;
  }

  // Alternating path from x (entered through its matched edge) that closes
  // onto target with a non-matching edge. `visited` holds used vertices.
  bool alternating_path(int x, int target, Mask visited) const {
    Mask candidates = adjacency_[static_cast<std::size_t>(x)] & covered_;
    if (mate_[static_cast<std::size_t>(x)] != target && (candidates & bit(target))) {
      return true;
    }
    candidates &= ~visited & ~bit(target);
    for (; candidates; candidates &= candidates - 1) {
      int y = std::countr_zero(candidates);
      int z = mate_[static_cast<std::size_t>(y)];
      if (alternating_path(z, target, visited | bit(y) | bit(z))) return true;
    }
    return false;
  }

  // Called with ab already recorded as matched. Every new alternating cycle
  // must pass through ab.
  bool keeps_unique_restriction(int a, int b) const {
    return !alternating_path(b, a, bit(a) | bit(b));
  }

  bool feasible(int a, int b) const {
    switch (kind_) {
      case MatchingKind::ordinary: return true;
      case MatchingKind::induced:
        return ((adjacency_[static_cast<std::size_t>(a)] |
                 adjacency_[static_cast<std::size_t>(b)]) &
                covered_) == 0;
      case MatchingKind::acyclic: return keeps_forest(a, b);
      case MatchingKind::uniquely_restricted: return true;  // checked after insertion
    }
    return false;
  }

  void search(std::size_t next) {
    ++nodes_;
    if (chosen_.size() > best_.size()) best_ = chosen_;
    const Mask free = available();
    if (upper_bound(next, free) <= static_cast<int>(best_.size())) return;

    for (std::size_t j = next; j < edges_.size(); ++j) {
      const int a = edges_[j].u;
      const int b = edges_[j].v;
      if (!(free & bit(a)) || !(free & bit(b))) continue;
      if (!feasible(a, b)) continue;

      mate_[static_cast<std::size_t>(a)] = b;
      mate_[static_cast<std::size_t>(b)] = a;
      covered_ |= bit(a) | bit(b);
      if (kind_ != MatchingKind::uniquely_restricted || keeps_unique_restriction(a, b)) {
        chosen_.push_back(j);
        search(j + 1);
        chosen_.pop_back();
      }
      covered_ &= ~(bit(a) | bit(b));
      mate_[static_cast<std::size_t>(a)] = -1;
      mate_[static_cast<std::size_t>(b)] = -1;
    }
  }

  MatchingKind kind_;
  std::vector<Mask> adjacency_;
  std::vector<Edge> edges_;
  std::vector<int> mate_;
  Mask covered_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult max_matching_number(const Graph& g, MatchingKind kind, const SolveOptions& options) {
  const int cap = std::min(options.vertex_limit, kMaxSolverVertices);
  if (g.vertex_count() > cap) {
    throw ResourceLimitError("graph has " + std::to_string(g.vertex_count()) +
                             " vertices; solver limit is " + std::to_string(cap));
  }
  return BranchAndBound(g, kind).run();
}

bool equality_holds(const Graph& g, MatchingKind a, MatchingKind b, const SolveOptions& options) {
  return max_matching_number(g, a, options).value == max_matching_number(g, b, options).value;
}

}  // namespace rmatch
