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

#include "rmatch/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rmatch {

Matching::Matching(std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  for (auto [a, b] : edges) edges_.push_back(make_edge(a, b));
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (Edge& e : edges_) e = make_edge(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Matching::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string_view to_string(MatchingKind kind) {
  switch (kind) {
    case MatchingKind::ordinary: return "ordinary";
    case MatchingKind::uniquely_restricted: return "uniquely-restricted";
    case MatchingKind::acyclic: return "acyclic";
    case MatchingKind::induced: return "induced";
  }
  return "?";
}

std::string_view short_name(MatchingKind kind) {
  switch (kind) {
    case MatchingKind::ordinary: return "nu";
    case MatchingKind::uniquely_restricted: return "ur";
    case MatchingKind::acyclic: return "ac";
    case MatchingKind::induced: return "s";
  }
  return "?";
}

MatchingKind parse_matching_kind(std::string_view text) {
  for (MatchingKind kind : kAllKinds) {
    if (text == short_name(kind) || text == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown matching kind '" + std::string(text) + "'");
}

namespace {

std::string edge_text(Edge e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// Empty string when m is a matching of g.
std::string matching_defect(const Graph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e.u, e.v)) return "edge " + edge_text(e) + " is not in the graph";
    for (Vertex x : {e.u, e.v}) {
      auto& slot = used[static_cast<std::size_t>(x)];
      if (slot) return "vertex " + std::to_string(x) + " is covered twice";
      slot = 1;
    }
  }
  return {};
}

std::uint64_t count_pm(const Graph& g, std::vector<char>& matched) {
  auto it = std::find(matched.begin(), matched.end(), 0);
  if (it == matched.end()) return 1;
  auto v = static_cast<Vertex>(it - matched.begin());
  matched[static_cast<std::size_t>(v)] = 1;
  std::uint64_t total = 0;
  for (Vertex u : g.neighbors(v)) {
    auto& slot = matched[static_cast<std::size_t>(u)];
    if (slot) continue;
    slot = 1;
    total += count_pm(g, matched);
    slot = 0;
  }
  matched[static_cast<std::size_t>(v)] = 0;
  return total;
}

// Depth-first search for an alternating path that leaves `from` along a
// non-matching edge and ends with a non-matching edge into `target`.
bool extend_alternating_path(const Graph& g, const std::vector<Vertex>& mate,
                             std::vector<char>& blocked, Vertex from, Vertex target,
                             std::vector<Vertex>& path) {
  for (Vertex y : g.neighbors(from)) {
    auto yi = static_cast<std::size_t>(y);
    if (mate[yi] < 0 || y == mate[static_cast<std::size_t>(from)]) continue;
    if (y == target) return true;
    if (blocked[yi]) continue;
    Vertex z = mate[yi];
    blocked[yi] = 1;
    blocked[static_cast<std::size_t>(z)] = 1;
    path.push_back(y);
    path.push_back(z);
    if (extend_alternating_path(g, mate, blocked, z, target, path)) return true;
    path.pop_back();
    path.pop_back();
    blocked[yi] = 0;
    blocked[static_cast<std::size_t>(z)] = 0;
  }
  return false;
}

}  // namespace

bool is_matching(const Graph& g, const Matching& m) {
  return matching_defect(g, m).empty();
}

void require_matching(const Graph& g, const Matching& m) {
  if (auto defect = matching_defect(g, m); !defect.empty()) {
    throw std::invalid_argument("not a matching: " + defect);
  }
}

VertexSet covered_vertices(const Matching& m) {
  std::vector<Vertex> out;
  out.reserve(2 * m.size());
  for (const Edge& e : m.edges()) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  return VertexSet(std::move(out));
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return 0;
  std::vector<char> matched(static_cast<std::size_t>(g.vertex_count()), 0);
  return count_pm(g, matched);
}

bool is_induced_matching(const Graph& g, const Matching& m) {
  require_matching(g, m);
  const Graph h = induced_subgraph(g, covered_vertices(m)).graph;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) != 1) return false;
  }
  return true;
}

bool is_acyclic_matching(const Graph& g, const Matching& m) {
  require_matching(g, m);
  const Graph h = induced_subgraph(g, covered_vertices(m)).graph;
  std::vector<Vertex> parent(static_cast<std::size_t>(h.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  for (const Edge& e : h.edges()) {
    Vertex a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

bool is_uniquely_restricted_by_pm_count(const Graph& g, const Matching& m) {
  require_matching(g, m);
  return count_perfect_matchings(induced_subgraph(g, covered_vertices(m)).graph) == 1;
}

std::optional<std::vector<Vertex>> find_alternating_cycle(const Graph& g, const Matching& m) {
  require_matching(g, m);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Vertex> mate(n, -1);
  for (const Edge& e : m.edges()) {
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  // A cycle through an already-examined matched edge would have been found
  // while examining it, so those edges stay blocked for later starts.
  std::vector<char> blocked(n, 0);
  for (const Edge& e : m.edges()) {
    blocked[static_cast<std::size_t>(e.u)] = 1;
    blocked[static_cast<std::size_t>(e.v)] = 1;
    std::vector<Vertex> path{e.u, e.v};
    if (extend_alternating_path(g, mate, blocked, e.v, e.u, path)) return path;
  }
  return std::nullopt;
}

bool is_uniquely_restricted(const Graph& g, const Matching& m) {
  return !find_alternating_cycle(g, m).has_value();
}

bool satisfies_kind(const Graph& g, const Matching& m, MatchingKind kind) {
  switch (kind) {
    case MatchingKind::ordinary:
      require_matching(g, m);
      return true;
    case MatchingKind::uniquely_restricted: return is_uniquely_restricted(g, m);
    case MatchingKind::acyclic: return is_acyclic_matching(g, m);
    case MatchingKind::induced: return is_induced_matching(g, m);
  }
  return false;
}

Classification classify(const Graph& g, const Matching& m) {
  Classification result;
  result.diagnostic = matching_defect(g, m);
  if (!result.diagnostic.empty()) return result;
  for (MatchingKind kind : kAllKinds) {
    if (satisfies_kind(g, m, kind)) result.kinds.insert(kind);
  }
  return result;
}

}  // namespace rmatch
