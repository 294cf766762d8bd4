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

#ifndef RMATCH_MATCHING_HPP_
#define RMATCH_MATCHING_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmatch/graph.hpp"

namespace rmatch {

// A set of edges. Whether it is a matching of some host graph is checked by
// the functions below, never repaired.
class Matching {
 public:
  Matching() = default;
  Matching(std::initializer_list<std::pair<Vertex, Vertex>> edges);
  explicit Matching(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;

  // Lexicographic on the sorted edge sequence.
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

// Ordered as ν ≥ ν_ur ≥ ν_ac ≥ ν_s: a larger enumerator is a weaker
// restriction.
enum class MatchingKind {
  induced = 0,
  acyclic = 1,
  uniquely_restricted = 2,
  ordinary = 3,
};

inline constexpr MatchingKind kAllKinds[] = {
    MatchingKind::ordinary, MatchingKind::uniquely_restricted, MatchingKind::acyclic,
    MatchingKind::induced};

std::string_view to_string(MatchingKind kind);
// Short tag used by the CLI: nu, ur, ac, s.
std::string_view short_name(MatchingKind kind);
// Accepts short tags and full names. Throws std::invalid_argument.
MatchingKind parse_matching_kind(std::string_view text);

// True iff every edge is in g and no two edges share a vertex.
bool is_matching(const Graph& g, const Matching& m);
// Throws std::invalid_argument describing the first defect.
void require_matching(const Graph& g, const Matching& m);

// V(M).
VertexSet covered_vertices(const Matching& m);

// Number of perfect matchings, by recursive elimination of the lowest
// unmatched vertex. Exponential; meant for small graphs.
std::uint64_t count_perfect_matchings(const Graph& g);

bool is_induced_matching(const Graph& g, const Matching& m);
bool is_acyclic_matching(const Graph& g, const Matching& m);
// M is the unique perfect matching of G(M).
bool is_uniquely_restricted_by_pm_count(const Graph& g, const Matching& m);

// Returns the vertices of an M-alternating cycle in cycle order, starting with
// a matched edge (c[0]c[1] ∈ M, c[1]c[2] ∉ M, ...), or nullopt if none exists.
std::optional<std::vector<Vertex>> find_alternating_cycle(const Graph& g, const Matching& m);

// No M-alternating cycle in g.
bool is_uniquely_restricted(const Graph& g, const Matching& m);

bool satisfies_kind(const Graph& g, const Matching& m, MatchingKind kind);

struct Classification {
  std::set<MatchingKind> kinds;
  // Empty unless m is not a matching of g.
  std::string diagnostic;
};

Classification classify(const Graph& g, const Matching& m);

}  // namespace rmatch

#endif  // RMATCH_MATCHING_HPP_
