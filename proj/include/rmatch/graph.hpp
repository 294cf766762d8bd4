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

#ifndef RMATCH_GRAPH_HPP_
#define RMATCH_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rmatch {

// Vertices are dense indices 0..vertex_count()-1.
using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes the endpoint order. Throws std::invalid_argument on a self-loop.
Edge make_edge(Vertex a, Vertex b);

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable simple undirected graph. Build through GraphBuilder.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  // All edges in lexicographic order.
  std::span<const Edge> edges() const { return edges_; }
  // Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  std::optional<std::string_view> label(Vertex v) const;
  const std::map<Vertex, std::string>& labels() const { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::string> labels_;
};

// Accumulates edges for a Graph. Adding an edge twice is a no-op.
class GraphBuilder {
 public:
  explicit GraphBuilder(int vertex_count);

  GraphBuilder& add_edge(Vertex a, Vertex b);
  GraphBuilder& set_label(Vertex v, std::string label);

  int vertex_count() const { return vertex_count_; }

  Graph build() const;

 private:
  void check_vertex(Vertex v) const;

  int vertex_count_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::string> labels_;
};

// Graph on n vertices with the given edges.
Graph make_graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);
Graph make_graph(int vertex_count, std::span<const Edge> edges);

// G[S] together with original[new_id] = old_id.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

// Throws std::invalid_argument if some member of s is not a vertex of g.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// E_G(X, Y). Throws std::invalid_argument if x and y overlap.
std::vector<Edge> edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

// E_G(X): the edges with both endpoints in x.
std::vector<Edge> edges_within(const Graph& g, const VertexSet& x);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

// Vertices of an odd cycle, listed in cycle order.
struct OddCycle {
  std::vector<Vertex> vertices;
};

using BipartiteCheck = std::variant<Bipartition, OddCycle>;

// Two-coloring by BFS; the lowest vertex of every component goes left.
BipartiteCheck is_bipartite(const Graph& g);

inline bool bipartite(const BipartiteCheck& check) {
  return std::holds_alternative<Bipartition>(check);
}

int max_degree(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace rmatch

#endif  // RMATCH_GRAPH_HPP_
