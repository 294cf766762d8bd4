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

#include "rmatch/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rmatch/errors.hpp"

namespace rmatch {

std::string_view to_string(Construction which) {
  return which == Construction::t1 ? "t1" : "t2";
}

Construction parse_construction(std::string_view text) {
  if (text == "t1") return Construction::t1;
  if (text == "t2") return Construction::t2;
  throw std::invalid_argument("unknown construction '" + std::string(text) + "'");
}

std::string_view to_string(VertexRole::Kind kind) {
  switch (kind) {
    case VertexRole::Kind::u: return "u";
    case VertexRole::Kind::f: return "f";
    case VertexRole::Kind::t: return "t";
    case VertexRole::Kind::v: return "v";
    case VertexRole::Kind::literal: return "lit";
  }
  return "?";
}

ReductionGraph::ReductionGraph(Construction which, CnfFormula formula, Graph graph,
                               std::vector<VertexRole> roles)
    : which_(which), formula_(std::move(formula)), graph_(std::move(graph)),
      roles_(std::move(roles)) {
  Vertex next = 3 * formula_.variable_count;
  for (const Clause& c : formula_.clauses) {
    clause_start_.push_back(next);
    next += static_cast<Vertex>(c.size()) + 1;
  }
  if (next != graph_.vertex_count() || roles_.size() != static_cast<std::size_t>(next)) {
    throw std::invalid_argument("reduction graph does not match its formula");
  }
}

VertexSet ReductionGraph::variable_block(int var) const {
  return VertexSet{u(var), f(var), t(var)};
}

VertexSet ReductionGraph::clause_block(int clause) const {
  std::vector<Vertex> members;
  const auto size = formula_.clauses.at(static_cast<std::size_t>(clause)).size();
  for (std::size_t p = 0; p <= size; ++p) members.push_back(v(clause) + static_cast<Vertex>(p));
  return VertexSet(std::move(members));
}

namespace {

std::string literal_label(Literal l) {
  return (l.negated() ? "~x" : "x") + std::to_string(l.var());
}

// Lays out the variable and clause blocks shared by both constructions.
struct Skeleton {
  GraphBuilder builder;
  std::vector<VertexRole> roles;
  std::vector<Vertex> clause_start;

  explicit Skeleton(const CnfFormula& f) : builder(vertex_total(f)) {
    for (int i = 1; i <= f.variable_count; ++i) {
      const std::string id = std::to_string(i);
      roles.push_back({VertexRole::Kind::u, i, 0, 0, {}});
      roles.push_back({VertexRole::Kind::f, i, 0, 0, {}});
      roles.push_back({VertexRole::Kind::t, i, 0, 0, {}});
      builder.set_label(3 * (i - 1), "u" + id);
      builder.set_label(3 * (i - 1) + 1, "f" + id);
      builder.set_label(3 * (i - 1) + 2, "t" + id);
    }
    for (int j = 0; j < f.clause_count(); ++j) {
      const Clause& c = f.clauses[static_cast<std::size_t>(j)];
      const auto start = static_cast<Vertex>(roles.size());
      clause_start.push_back(start);
      roles.push_back({VertexRole::Kind::v, 0, j, 0, {}});
      builder.set_label(start, "v" + std::to_string(j + 1));
      for (int p = 0; p < static_cast<int>(c.size()); ++p) {
        const Literal l = c[static_cast<std::size_t>(p)];
        roles.push_back({VertexRole::Kind::literal, l.var(), j, p, l});
        builder.set_label(start + 1 + p, "c" + std::to_string(j + 1) + ":" + literal_label(l));
      }
    }
  }

  static int vertex_total(const CnfFormula& f) {
    int total = 3 * f.variable_count;
    for (const Clause& c : f.clauses) total += static_cast<int>(c.size()) + 1;
    return total;
  }
};

void require_shape(const ValidationReport& report, std::string_view which) {
  if (!report.ok()) {
    throw std::invalid_argument("formula is not a valid " + std::string(which) +
                                " instance: " + report.to_string());
  }
}

void require_total(const ReductionGraph& rg, const Assignment& a) {
  if (a.variable_count() < rg.n()) {
    throw std::invalid_argument("assignment covers " + std::to_string(a.variable_count()) +
                                " of " + std::to_string(rg.n()) + " variables");
  }
  for (int i = 1; i <= rg.n(); ++i) {
    if (!a.get(i)) throw std::invalid_argument("variable " + std::to_string(i) + " is unassigned");
  }
}

std::vector<Edge> variable_edges(const ReductionGraph& rg, const Assignment& a) {
  std::vector<Edge> edges;
  for (int i = 1; i <= rg.n(); ++i) {
    edges.push_back(make_edge(rg.u(i), a.value(i) ? rg.t(i) : rg.f(i)));
  }
  return edges;
}

bool in_variable_block(const VertexRole& r) {
  return r.kind == VertexRole::Kind::u || r.kind == VertexRole::Kind::f ||
         r.kind == VertexRole::Kind::t;
}

// Edges of mm with one endpoint in X_i and the other in some clause block;
// the first endpoint of each returned pair lies in X_i.
std::vector<Edge> cross_edges_of(const ReductionGraph& rg, const std::vector<Edge>& mm, int var) {
  std::vector<Edge> out;
  for (const Edge& e : mm) {
    const VertexRole& ru = rg.role(e.u);
    const VertexRole& rv = rg.role(e.v);
    if (in_variable_block(ru) && !in_variable_block(rv) && ru.var == var) out.push_back(e);
  }
  return out;
}

void replace_edges(std::vector<Edge>& mm, std::initializer_list<Edge> removed,
                   std::initializer_list<Edge> added) {
  for (const Edge& e : removed) mm.erase(std::find(mm.begin(), mm.end(), e));
  mm.insert(mm.end(), added.begin(), added.end());
}

void require_induced_of_size(const ReductionGraph& rg, const Matching& mm) {
  if (!is_induced_matching(rg.graph(), mm)) {
    throw std::invalid_argument("matching is not induced");
  }
  const auto expected = static_cast<std::size_t>(rg.n() + rg.m());
  if (mm.size() != expected) {
    throw std::invalid_argument("matching has " + std::to_string(mm.size()) + " edges, expected " +
                                std::to_string(expected));
  }
}

void check_budget(std::size_t& steps, const ReductionGraph& rg) {
  if (++steps > rg.graph().edge_count()) {
    throw InternalConsistencyError("exchange steps exceeded the budget of " +
                                   std::to_string(rg.graph().edge_count()));
  }
}

// Reads x_i from the X_i edge of a canonical induced matching and checks the
// result against the formula.
Assignment read_assignment(const ReductionGraph& rg, const Matching& canonical, bool exact) {
  Assignment a(rg.n());
  for (int i = 1; i <= rg.n(); ++i) {
    const bool has_true = canonical.contains(make_edge(rg.u(i), rg.t(i)));
    const bool has_false = canonical.contains(make_edge(rg.u(i), rg.f(i)));
    if (has_true == has_false) {
      throw InternalConsistencyError("variable block " + std::to_string(i) +
                                     " is not canonical after exchange");
    }
    a.set(i, has_true);
  }
  if (exact ? !eval_exact(rg.formula(), a) : !eval_sat(rg.formula(), a)) {
    throw InternalConsistencyError("decoded assignment " + a.to_string() +
                                   " does not satisfy the formula");
  }
  return a;
}

}  // namespace

ReductionGraph build_t1(const CnfFormula& f) {
  require_shape(validate_t1_shape(f), "t1");
  Skeleton s(f);
  for (int i = 1; i <= f.variable_count; ++i) {
    const Vertex u = 3 * (i - 1);
    s.builder.add_edge(u, u + 1).add_edge(u, u + 2).add_edge(u + 1, u + 2);
  }
  for (int j = 0; j < f.clause_count(); ++j) {
    const Clause& c = f.clauses[static_cast<std::size_t>(j)];
    const Vertex start = s.clause_start[static_cast<std::size_t>(j)];
    const auto size = static_cast<Vertex>(c.size());
    for (Vertex a = start; a <= start + size; ++a) {
      for (Vertex b = a + 1; b <= start + size; ++b) s.builder.add_edge(a, b);
    }
    for (Vertex p = 0; p < size; ++p) {
      const Literal l = c[static_cast<std::size_t>(p)];
      const Vertex anchor = 3 * (l.var() - 1) + (l.negated() ? 2 : 1);
      s.builder.add_edge(anchor, start + 1 + p);
    }
  }
  return ReductionGraph(Construction::t1, f, s.builder.build(), std::move(s.roles));
}

ReductionGraph build_t2(const CnfFormula& f) {
  require_shape(validate_t2_shape(f), "t2");
  Skeleton s(f);
  for (int i = 1; i <= f.variable_count; ++i) {
    const Vertex u = 3 * (i - 1);
    s.builder.add_edge(u, u + 1).add_edge(u, u + 2);
  }
  for (int j = 0; j < f.clause_count(); ++j) {
    const Clause& c = f.clauses[static_cast<std::size_t>(j)];
    const Vertex start = s.clause_start[static_cast<std::size_t>(j)];
    for (Vertex p = 0; p < static_cast<Vertex>(c.size()); ++p) {
      s.builder.add_edge(start, start + 1 + p);
    }
    // Within a clause containing x_i, the x_i vertex goes to f_i and the
    // other literal vertices go to t_i.
    for (Vertex p = 0; p < static_cast<Vertex>(c.size()); ++p) {
      const int var = c[static_cast<std::size_t>(p)].var();
      for (Vertex q = 0; q < static_cast<Vertex>(c.size()); ++q) {
        const Vertex anchor = 3 * (var - 1) + (p == q ? 1 : 2);
        s.builder.add_edge(anchor, start + 1 + q);
      }
    }
  }
  return ReductionGraph(Construction::t2, f, s.builder.build(), std::move(s.roles));
}

ReductionGraph build(Construction which, const CnfFormula& f) {
  return which == Construction::t1 ? build_t1(f) : build_t2(f);
}

Matching assignment_to_matching_t1(const ReductionGraph& rg, const Assignment& a) {
  require_total(rg, a);
  std::vector<Edge> edges = variable_edges(rg, a);
  for (int j = 0; j < rg.m(); ++j) {
    const Clause& c = rg.formula().clauses[static_cast<std::size_t>(j)];
    auto it = std::find_if(c.begin(), c.end(), [&](Literal l) { return l.holds(a.value(l.var())); });
    if (it == c.end()) {
      throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                  " has no true literal under " + a.to_string());
    }
    edges.push_back(make_edge(rg.v(j), rg.literal_vertex(j, static_cast<int>(it - c.begin()))));
  }
  return Matching(std::move(edges));
}

Matching assignment_to_matching_t2(const ReductionGraph& rg, const Assignment& a) {
  require_total(rg, a);
  std::vector<Edge> edges = variable_edges(rg, a);
  for (int j = 0; j < rg.m(); ++j) {
    const Clause& c = rg.formula().clauses[static_cast<std::size_t>(j)];
    if (count_true(c, a) != 1) {
      throw std::invalid_argument("clause " + std::to_string(j + 1) + " has " +
                                  std::to_string(count_true(c, a)) + " true literals under " +
                                  a.to_string());
    }
    auto it = std::find_if(c.begin(), c.end(), [&](Literal l) { return l.holds(a.value(l.var())); });
    edges.push_back(make_edge(rg.v(j), rg.literal_vertex(j, static_cast<int>(it - c.begin()))));
  }
  return Matching(std::move(edges));
}

Matching canonicalize_t1(const ReductionGraph& rg, const Matching& mm) {
  require_induced_of_size(rg, mm);
  std::vector<Edge> edges(mm.edges().begin(), mm.edges().end());
  std::size_t steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= rg.n() && !changed; ++i) {
      // A cross edge xw with x ∈ {f_i, t_i} becomes u_i x.
      if (auto cross = cross_edges_of(rg, edges, i); !cross.empty()) {
        check_budget(steps, rg);
        const Edge e = cross.front();
        const Vertex x = in_variable_block(rg.role(e.u)) ? e.u : e.v;
        replace_edges(edges, {e}, {make_edge(rg.u(i), x)});
        changed = true;
      } else if (auto it = std::find(edges.begin(), edges.end(), make_edge(rg.f(i), rg.t(i)));
                 it != edges.end()) {
        check_budget(steps, rg);
        replace_edges(edges, {*it}, {make_edge(rg.u(i), rg.f(i))});
        changed = true;
      }
    }
  }
  Matching out(std::move(edges));
  if (!is_induced_matching(rg.graph(), out)) {
    throw InternalConsistencyError("exchange produced a non-induced matching");
  }
  return out;
}

Matching canonicalize_t2(const ReductionGraph& rg, const Matching& mm) {
  require_induced_of_size(rg, mm);
  std::vector<Edge> edges(mm.edges().begin(), mm.edges().end());
  std::size_t steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= rg.n() && !changed; ++i) {
      const auto cross = cross_edges_of(rg, edges, i);
      if (cross.empty()) continue;
      check_budget(steps, rg);
      auto endpoint_in_block = [&](const Edge& e) {
        return in_variable_block(rg.role(e.u)) ? e.u : e.v;
      };
      auto other_endpoint = [&](const Edge& e) {
        return in_variable_block(rg.role(e.u)) ? e.v : e.u;
      };
      if (cross.size() == 1) {
        replace_edges(edges, {cross[0]}, {make_edge(rg.u(i), endpoint_in_block(cross[0]))});
      } else if (cross.size() == 2) {
        // {t_i v, f_i w} becomes {u_i f_i, v_j v} with v ∈ C_j.
        const Edge& first = cross[0];
        const Edge& second = cross[1];
        const Edge& via_t = endpoint_in_block(first) == rg.t(i) ? first : second;
        const Edge& via_f = endpoint_in_block(first) == rg.t(i) ? second : first;
        if (endpoint_in_block(via_t) != rg.t(i) || endpoint_in_block(via_f) != rg.f(i)) {
          throw InternalConsistencyError("unexpected cross edges at variable " +
                                         std::to_string(i));
        }
        const Vertex v = other_endpoint(via_t);
        const Vertex hub = rg.v(rg.role(v).clause);
        const Edge t_edge = via_t;
        const Edge f_edge = via_f;
        replace_edges(edges, {t_edge, f_edge}, {make_edge(rg.u(i), rg.f(i)), make_edge(hub, v)});
      } else {
        throw InternalConsistencyError("more than two cross edges at variable " +
                                       std::to_string(i));
      }
      changed = true;
    }
  }
  Matching out(std::move(edges));
  if (!is_induced_matching(rg.graph(), out)) {
    throw InternalConsistencyError("exchange produced a non-induced matching");
  }
  return out;
}

Assignment matching_to_assignment_t1(const ReductionGraph& rg, const Matching& mm) {
  return read_assignment(rg, canonicalize_t1(rg, mm), /*exact=*/false);
}

Assignment matching_to_assignment_t2(const ReductionGraph& rg, const Matching& mm) {
  return read_assignment(rg, canonicalize_t2(rg, mm), /*exact=*/true);
}

Matching assignment_to_matching(const ReductionGraph& rg, const Assignment& a) {
  return rg.which() == Construction::t1 ? assignment_to_matching_t1(rg, a)
                                        : assignment_to_matching_t2(rg, a);
}

Assignment matching_to_assignment(const ReductionGraph& rg, const Matching& mm) {
  return rg.which() == Construction::t1 ? matching_to_assignment_t1(rg, mm)
                                        : matching_to_assignment_t2(rg, mm);
}

}  // namespace rmatch
