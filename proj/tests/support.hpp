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

#ifndef RMATCH_TESTS_SUPPORT_HPP_
#define RMATCH_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rmatch/graph.hpp"
#include "rmatch/matching.hpp"

namespace rmatch::testing {

// Labelled graphs on n vertices. With degree_sorted only graphs whose
// degrees are non-increasing in vertex order are visited; every isomorphism
// class has at least one such labelling, so properties invariant under
// relabelling are still checked exhaustively.
inline void for_each_graph(int n, bool connected_only, bool degree_sorted,
                           const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) all.push_back({a, b});
  }
  const std::uint64_t total = std::uint64_t{1} << all.size();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<Edge> chosen;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(degree.begin(), degree.end(), 0);
    chosen.clear();
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((mask >> k) & 1) {
        ++degree[static_cast<std::size_t>(all[k].u)];
        ++degree[static_cast<std::size_t>(all[k].v)];
        chosen.push_back(all[k]);
      }
    }
    if (degree_sorted && !std::is_sorted(degree.rbegin(), degree.rend())) continue;
    const Graph g = make_graph(n, chosen);
    if (connected_only && !is_connected(g)) continue;
    visit(g);
  }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return make_graph(n, edges);
}

// Sides are [0, left) and [left, left + right).
inline Graph random_bipartite_graph(int left, int right, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < left; ++a) {
    for (Vertex b = left; b < left + right; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return make_graph(left + right, edges);
}

// Every matching of g, including the empty one.
inline void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& visit) {
  const auto edges = g.edges();
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<Edge> current;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    visit(Matching(current));
    for (std::size_t k = from; k < edges.size(); ++k) {
      const Edge e = edges[k];
      if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) continue;
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
      current.push_back(e);
      extend(k + 1);
      current.pop_back();
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = false;
    }
  };
  extend(0);
}

// Size of a maximum matching in a bipartite graph by augmenting paths.
inline int kuhn_matching_number(const Graph& g, const std::vector<Vertex>& left) {
  std::vector<Vertex> mate(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<bool> seen;
  std::function<bool(Vertex)> augment = [&](Vertex a) {
    for (Vertex b : g.neighbors(a)) {
      if (seen[static_cast<std::size_t>(b)]) continue;
      seen[static_cast<std::size_t>(b)] = true;
      const Vertex other = mate[static_cast<std::size_t>(b)];
      if (other < 0 || augment(other)) {
        mate[static_cast<std::size_t>(b)] = a;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (Vertex a : left) {
    seen.assign(static_cast<std::size_t>(g.vertex_count()), false);
    if (augment(a)) ++size;
  }
  return size;
}

}  // namespace rmatch::testing

#endif  // RMATCH_TESTS_SUPPORT_HPP_
