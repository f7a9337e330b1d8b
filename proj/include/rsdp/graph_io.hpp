// Copyright 2026 The RSDP Authors
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

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rsdp/graph.hpp"

namespace rsdp {

// Text formats:
//   graph file:  one "u v" edge per line, 0-based, whitespace separated.
//   labels file: CSV with header "vertex,l0,...,l{m-1}" and one row per
//                vertex. n is the number of label rows; vertices that appear
//                in the labels file but in no edge are isolated.

inline std::vector<Edge> parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    int u, v;
    if (!(row >> u)) continue;  // blank line
    if (!(row >> v))
      throw std::invalid_argument("graph file line " + std::to_string(line_no) +
                                  ": expected two vertex ids");
    edges.push_back(make_edge(u, v));
  }
  return edges;
}

// Returns rows of (vertex, labels). Rows may arrive in any order; every
// vertex 0..n-1 must appear exactly once.
inline std::vector<std::vector<int>> parse_labels_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("labels file: missing header");
  int m = 0;
  {
    std::istringstream header(line);
    std::string field;
    if (!std::getline(header, field, ',') || field != "vertex")
      throw std::invalid_argument("labels file: header must start with 'vertex'");
    while (std::getline(header, field, ',')) {
      if (field != "l" + std::to_string(m))
        throw std::invalid_argument("labels file: expected header column l" + std::to_string(m));
      ++m;
    }
  }
  std::vector<std::pair<int, std::vector<int>>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    if (!std::getline(row, field, ',')) continue;
    std::pair<int, std::vector<int>> entry{std::stoi(field), {}};
    while (std::getline(row, field, ',')) entry.second.push_back(std::stoi(field));
    if (static_cast<int>(entry.second.size()) != m)
      throw std::invalid_argument("labels file: row for vertex " + std::to_string(entry.first) +
                                  " has wrong arity");
    rows.push_back(std::move(entry));
  }
  int n = static_cast<int>(rows.size());
  std::vector<std::vector<int>> labels(n);
  std::vector<char> seen(n, 0);
  for (auto& [v, row] : rows) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("labels file: vertex ids must cover 0..n-1 exactly once");
    seen[v] = 1;
    labels[v] = std::move(row);
  }
  return labels;
}

inline LabeledGraph read_labeled_graph(const std::string& graph_path,
                                       const std::string& labels_path) {
  std::ifstream labels_in(labels_path);
  if (!labels_in) throw std::invalid_argument("cannot open labels file: " + labels_path);
  std::vector<std::vector<int>> labels = parse_labels_csv(labels_in);
  std::ifstream graph_in(graph_path);
  if (!graph_in) throw std::invalid_argument("cannot open graph file: " + graph_path);
  std::vector<Edge> edges = parse_edge_list(graph_in);
  const int n = static_cast<int>(labels.size());
  return LabeledGraph(n, std::move(edges), std::move(labels));
}

inline void write_edge_list(std::ostream& out, const LabeledGraph& g) {
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

inline void write_labels_csv(std::ostream& out, const LabeledGraph& g) {
  out << "vertex";
  for (int j = 0; j < g.label_dim(); ++j) out << ",l" << j;
  out << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << v;
    for (int value : g.labels(v)) out << ',' << value;
    out << '\n';
  }
}

inline void write_labeled_graph(const std::string& graph_path, const std::string& labels_path,
                                const LabeledGraph& g) {
  std::ofstream graph_out(graph_path);
  if (!graph_out) throw std::invalid_argument("cannot write graph file: " + graph_path);
  write_edge_list(graph_out, g);
  std::ofstream labels_out(labels_path);
  if (!labels_out) throw std::invalid_argument("cannot write labels file: " + labels_path);
  write_labels_csv(labels_out, g);
}

}  // namespace rsdp
