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

#include "rmatch/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace rmatch {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return adjacency_.at(static_cast<std::size_t>(v));
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(adjacency_.at(static_cast<std::size_t>(v)).size());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return false;
  const auto& row = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<std::string_view> Graph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return std::string_view(it->second);
}

GraphBuilder::GraphBuilder(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) {
    throw std::invalid_argument("negative vertex count");
  }
}

void GraphBuilder::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(vertex_count_) + ")");
  }
}

GraphBuilder& GraphBuilder::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  edges_.push_back(make_edge(a, b));
  return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.edges_ = edges_;
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.adjacency_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  g.labels_ = labels_;
  return g;
}

Graph make_graph(int vertex_count,
                 std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphBuilder builder(vertex_count);
  for (auto [a, b] : edges) builder.add_edge(a, b);
  return builder.build();
}

Graph make_graph(int vertex_count, std::span<const Edge> edges) {
  GraphBuilder builder(vertex_count);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v);
  return builder.build();
}

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
    }
  }
}

}  // namespace

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<Vertex> renumber(static_cast<std::size_t>(g.vertex_count()), -1);
  InducedSubgraph result;
  result.original = s.members();
  for (std::size_t i = 0; i < result.original.size(); ++i) {
    renumber[static_cast<std::size_t>(result.original[i])] = static_cast<Vertex>(i);
  }
  GraphBuilder builder(static_cast<int>(s.size()));
  for (Vertex old_u : s) {
    for (Vertex old_v : g.neighbors(old_u)) {
      Vertex nv = renumber[static_cast<std::size_t>(old_v)];
      if (old_u < old_v && nv >= 0) {
        builder.add_edge(renumber[static_cast<std::size_t>(old_u)], nv);
      }
    }
    if (auto label = g.label(old_u)) {
      builder.set_label(renumber[static_cast<std::size_t>(old_u)], std::string(*label));
    }
  }
  result.graph = builder.build();
  return result;
}

std::vector<Edge> edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check_members(g, x);
  check_members(g, y);
  for (Vertex v : x) {
    if (y.contains(v)) {
      throw std::invalid_argument("edges_between: vertex " + std::to_string(v) +
                                  " lies in both sets");
    }
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if ((x.contains(e.u) && y.contains(e.v)) || (x.contains(e.v) && y.contains(e.u))) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<Edge> edges_within(const Graph& g, const VertexSet& x) {
  check_members(g, x);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (x.contains(e.u) && x.contains(e.v)) out.push_back(e);
  }
  return out;
}

BipartiteCheck is_bipartite(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<Vertex> left, right;

  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      auto xi = static_cast<std::size_t>(x);
      (color[xi] == 0 ? left : right).push_back(x);
      for (Vertex y : g.neighbors(x)) {
        auto yi = static_cast<std::size_t>(y);
        if (color[yi] == -1) {
          color[yi] = 1 - color[xi];
          parent[yi] = x;
          depth[yi] = depth[xi] + 1;
          queue.push_back(y);
        } else if (color[yi] == color[xi]) {
          // Walk both endpoints up to their common ancestor.
          std::vector<Vertex> from_x, from_y;
          Vertex a = x, b = y;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            from_x.push_back(a);
            a = parent[static_cast<std::size_t>(a)];
          }
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            from_y.push_back(b);
            b = parent[static_cast<std::size_t>(b)];
          }
          while (a != b) {
            from_x.push_back(a);
            from_y.push_back(b);
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
          }
          OddCycle cycle;
          cycle.vertices.push_back(a);
          cycle.vertices.insert(cycle.vertices.end(), from_y.rbegin(), from_y.rend());
          cycle.vertices.insert(cycle.vertices.end(), from_x.begin(), from_x.end());
          return cycle;
        }
      }
    }
  }
  return Bipartition{VertexSet(std::move(left)), VertexSet(std::move(right))};
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.vertex_count();
}

}  // namespace rmatch
