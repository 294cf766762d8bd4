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

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rmatch/errors.hpp"
#include "rmatch/io.hpp"

namespace rmatch {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string trim_leading(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  return s;
}

}  // namespace

Graph read_dimacs_graph(std::istream& in) {
  std::optional<GraphBuilder> builder;
  std::map<Vertex, std::string> pending_labels;
  long declared_edges = 0;
  long seen_edges = 0;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag)) continue;
    if (tag == "c") {
      std::string word;
      Vertex v;
      if (iss >> word && word == "label" && iss >> v) {
        std::string text;
        std::getline(iss, text);
        pending_labels[v - 1] = trim_leading(text);
      }
    } else if (tag == "p") {
      std::string format;
      int n;
      if (builder) fail(line_no, "second problem line");
      if (!(iss >> format >> n >> declared_edges) || (format != "edge" && format != "col")) {
        fail(line_no, "expected 'p edge <n> <m>'");
      }
      if (n < 0 || declared_edges < 0) fail(line_no, "negative count");
      builder.emplace(n);
    } else if (tag == "e") {
      Vertex a, b;
      if (!builder) fail(line_no, "edge before problem line");
      if (!(iss >> a >> b)) fail(line_no, "expected 'e <u> <v>'");
      if (a < 1 || b < 1 || a > builder->vertex_count() || b > builder->vertex_count()) {
        fail(line_no, "vertex out of range");
      }
      if (a == b) fail(line_no, "self-loop");
      builder->add_edge(a - 1, b - 1);
      ++seen_edges;
    } else {
      fail(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!builder) fail(line_no, "missing problem line");
  if (seen_edges != declared_edges) {
    fail(line_no, "problem line declares " + std::to_string(declared_edges) + " edges, found " +
                      std::to_string(seen_edges));
  }
  for (auto& [v, text] : pending_labels) {
    if (v < 0 || v >= builder->vertex_count()) fail(line_no, "label for unknown vertex");
    builder->set_label(v, std::move(text));
  }
  return builder->build();
}

void write_dimacs_graph(std::ostream& out, const Graph& g) {
  for (const auto& [v, text] : g.labels()) out << "c label " << v + 1 << ' ' << text << '\n';
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Matching read_matching(std::istream& in) {
  std::vector<Edge> edges;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag) || tag == "c") continue;
    if (tag != "m") fail(line_no, "unknown line type '" + tag + "'");
    Vertex a, b;
    if (!(iss >> a >> b)) fail(line_no, "expected 'm <u> <v>'");
    if (a < 1 || b < 1) fail(line_no, "vertex ids are 1-based");
    if (a == b) fail(line_no, "self-loop");
    edges.push_back(make_edge(a - 1, b - 1));
  }
  return Matching(std::move(edges));
}

void write_matching(std::ostream& out, const Matching& m) {
  for (const Edge& e : m.edges()) out << "m " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace rmatch
