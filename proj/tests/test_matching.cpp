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

#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "rmatch/matching.hpp"
#include "support.hpp"

using namespace rmatch;

namespace {

Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) b.add_edge(a, c);
  }
  return b.build();
}

using Kinds = std::set<MatchingKind>;

}  // namespace

TEST_CASE("matching validity") {
  const Graph p4 = path(4);
  CHECK(is_matching(p4, {{0, 1}, {2, 3}}));
  CHECK(is_matching(p4, {}));
  CHECK_FALSE(is_matching(p4, {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_matching(p4, {{0, 2}}));
  CHECK_THROWS_AS(require_matching(p4, {{0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(require_matching(p4, {{0, 3}}), std::invalid_argument);
  CHECK(Matching{{1, 0}} == Matching{{0, 1}});
}

TEST_CASE("covered vertices") {
  CHECK(covered_vertices({}).empty());
  CHECK(covered_vertices({{0, 1}}) == VertexSet{0, 1});
  CHECK(covered_vertices({{0, 1}, {2, 3}}) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("perfect matching counts") {
  CHECK(count_perfect_matchings(Graph{}) == 1);
  CHECK(count_perfect_matchings(cycle4()) == 2);
  CHECK(count_perfect_matchings(path(4)) == 1);
  CHECK(count_perfect_matchings(complete(4)) == 3);
  CHECK(count_perfect_matchings(complete(6)) == 15);
  CHECK(count_perfect_matchings(complete(3)) == 0);
}

TEST_CASE("induced matchings") {
  CHECK_FALSE(is_induced_matching(path(4), {{0, 1}, {2, 3}}));
  CHECK(is_induced_matching(path(5), {{0, 1}, {3, 4}}));
  CHECK(is_induced_matching(cycle4(), {}));
}

TEST_CASE("acyclic matchings") {
  CHECK_FALSE(is_acyclic_matching(cycle4(), {{0, 1}, {2, 3}}));
  CHECK(is_acyclic_matching(path(4), {{0, 1}, {2, 3}}));
  CHECK(is_acyclic_matching(cycle4(), {}));
}

TEST_CASE("uniquely restricted matchings") {
  CHECK_FALSE(is_uniquely_restricted_by_pm_count(cycle4(), {{0, 1}, {2, 3}}));
  CHECK(is_uniquely_restricted_by_pm_count(path(4), {{0, 1}, {2, 3}}));
  CHECK(is_uniquely_restricted_by_pm_count(complete(5), {{1, 3}}));

  CHECK_FALSE(is_uniquely_restricted(cycle4(), {{0, 1}, {2, 3}}));
  CHECK(is_uniquely_restricted(path(4), {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_uniquely_restricted(complete(4), {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_uniquely_restricted(complete(4), {{0, 2}, {1, 3}}));
  CHECK_FALSE(is_uniquely_restricted(complete(4), {{0, 3}, {1, 2}}));
}

TEST_CASE("alternating cycle witnesses") {
  const auto c4 = find_alternating_cycle(cycle4(), {{0, 1}, {2, 3}});
  REQUIRE(c4.has_value());
  CHECK(*c4 == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(find_alternating_cycle(path(4), {{0, 1}, {2, 3}}).has_value());
  CHECK_FALSE(find_alternating_cycle(complete(5), {}).has_value());
}

TEST_CASE("alternating six-cycle with a chord") {
  const Graph g = make_graph(6, {{0, 1}, {2, 3}, {4, 5}, {1, 2}, {3, 4}, {5, 0}, {1, 3}});
  const Matching m{{0, 1}, {2, 3}, {4, 5}};
  const auto c = find_alternating_cycle(g, m);
  REQUIRE(c.has_value());
  REQUIRE(c->size() % 2 == 0);
  for (std::size_t k = 0; k < c->size(); ++k) {
    const Vertex a = (*c)[k];
    const Vertex b = (*c)[(k + 1) % c->size()];
    CHECK(g.has_edge(a, b));
    CHECK(m.contains(make_edge(a, b)) == (k % 2 == 0));
  }
}

TEST_CASE("non-bipartite graph where a directed auxiliary search misfires") {
  // M = {ab, cd, ef} with extra edges bc, bd, ae, af. There is no M-alternating
  // cycle although an auxiliary digraph on matched edges has a directed cycle.
  const Graph g = make_graph(6, {{0, 1}, {2, 3}, {4, 5}, {1, 2}, {1, 3}, {0, 4}, {0, 5}});
  const Matching m{{0, 1}, {2, 3}, {4, 5}};
  CHECK(is_uniquely_restricted_by_pm_count(g, m));
  CHECK(is_uniquely_restricted(g, m));
}

TEST_CASE("classification") {
  CHECK(classify(path(4), {{0, 1}, {2, 3}}).kinds ==
        Kinds{MatchingKind::ordinary, MatchingKind::uniquely_restricted, MatchingKind::acyclic});
  CHECK(classify(path(5), {{0, 1}, {3, 4}}).kinds ==
        Kinds{MatchingKind::ordinary, MatchingKind::uniquely_restricted, MatchingKind::acyclic,
              MatchingKind::induced});
  CHECK(classify(cycle4(), {{0, 1}, {2, 3}}).kinds == Kinds{MatchingKind::ordinary});
  const Classification bad = classify(path(4), {{0, 1}, {1, 2}});
  CHECK(bad.kinds.empty());
  CHECK_FALSE(bad.diagnostic.empty());
}

TEST_CASE("kind names") {
  for (MatchingKind k : kAllKinds) {
    CHECK(parse_matching_kind(to_string(k)) == k);
    CHECK(parse_matching_kind(short_name(k)) == k);
  }
  CHECK(short_name(MatchingKind::induced) == "s");
  CHECK_THROWS_AS(parse_matching_kind("maximal"), std::invalid_argument);
}

TEST_CASE("alternating-cycle search agrees with perfect matching counts") {
  for (int n = 1; n <= 6; ++n) {
    testing::for_each_graph(n, false, true, [](const Graph& g) {
      testing::for_each_matching(g, [&](const Matching& m) {
        REQUIRE(is_uniquely_restricted(g, m) == is_uniquely_restricted_by_pm_count(g, m));
      });
    });
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(8, 14)(rng);
    const Graph g = testing::random_graph(n, 0.35, rng);
    int seen = 0;
    testing::for_each_matching(g, [&](const Matching& m) {
      if (++seen > 400) return;
      REQUIRE(is_uniquely_restricted(g, m) == is_uniquely_restricted_by_pm_count(g, m));
    });
  }
}

TEST_CASE("alternating cycle witnesses are genuine") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(8, 0.5, rng);
    testing::for_each_matching(g, [&](const Matching& m) {
      const auto c = find_alternating_cycle(g, m);
      if (!c) return;
      REQUIRE(c->size() >= 4);
      REQUIRE(std::set<Vertex>(c->begin(), c->end()).size() == c->size());
      for (std::size_t k = 0; k < c->size(); ++k) {
        const Vertex a = (*c)[k];
        const Vertex b = (*c)[(k + 1) % c->size()];
        REQUIRE(g.has_edge(a, b));
        REQUIRE(m.contains(make_edge(a, b)) == (k % 2 == 0));
      }
    });
  }
}

TEST_CASE("induced implies acyclic implies uniquely restricted") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(7, 0.5, rng);
    testing::for_each_matching(g, [&](const Matching& m) {
      if (is_induced_matching(g, m)) REQUIRE(is_acyclic_matching(g, m));
      if (is_acyclic_matching(g, m)) REQUIRE(is_uniquely_restricted(g, m));
    });
  }
}
