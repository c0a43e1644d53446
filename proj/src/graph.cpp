// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/graph.hpp"

#include <algorithm>
#include <sstream>

namespace qwalk {

namespace {

std::string path_label(const PathVertex& path) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out << ',';
    out << path[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

RegularDigraph RegularDigraph::from_adjacency(const std::vector<std::vector<Vertex>>& out_neighbors,
                                              std::vector<std::string> labels) {
  RegularDigraph g;
  const std::size_t n = out_neighbors.size();
  if (n == 0) throw GraphError("graph has no vertices");
  const std::size_t m = out_neighbors[0].size();
  if (m == 0) throw GraphError("graph has degree 0");
  g.num_vertices_ = n;
  g.degree_ = m;
  g.heads_.reserve(n * m);

  std::vector<std::size_t> in_degree(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto& row = out_neighbors[v];
    if (row.size() != m) {
      throw GraphError("vertex " + std::to_string(v) + " has out-degree " + std::to_string(row.size()) +
                       ", expected " + std::to_string(m));
    }
    for (std::size_t k = 0; k < m; ++k) {
      const Vertex w = row[k];
      if (w >= n) throw GraphError("arc " + std::to_string(v) + "->" + std::to_string(w) + " leaves the vertex range");
      if (w == v) throw GraphError("self-loop at vertex " + std::to_string(v));
      if (std::find(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k), w) !=
          row.begin() + static_cast<std::ptrdiff_t>(k)) {
        throw GraphError("repeated arc " + std::to_string(v) + "->" + std::to_string(w));
      }
      g.heads_.push_back(w);
      ++in_degree[w];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_degree[v] != m) {
      throw GraphError("vertex " + std::to_string(v) + " has in-degree " + std::to_string(in_degree[v]) +
                       ", expected " + std::to_string(m));
    }
  }

  // Counting sort of arcs by head gives in-arcs in increasing arc order.
  g.in_arcs_.resize(n * m);
  std::vector<std::size_t> fill(n, 0);
  for (Arc a = 0; a < g.heads_.size(); ++a) {
    const Vertex w = g.heads_[a];
    g.in_arcs_[w * m + fill[w]++] = a;
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (Vertex v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  } else if (labels.size() != n) {
    throw GraphError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }
  g.labels_ = std::move(labels);
  return g;
}

std::optional<Arc> RegularDigraph::find_arc(Vertex tail, Vertex head) const {
  if (tail >= num_vertices_) return std::nullopt;
  const auto row = out_neighbors(tail);
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == head) return out_arc(tail, k);
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> RegularDigraph::adjacency() const {
  std::vector<std::vector<Vertex>> out(num_vertices_);
  for (Vertex v = 0; v < num_vertices_; ++v) {
    const auto row = out_neighbors(v);
    out[v].assign(row.begin(), row.end());
  }
  return out;
}

RegularDigraph line_digraph(const RegularDigraph& g) {
  const std::size_t m = g.degree();
  std::vector<std::vector<Vertex>> out(g.num_arcs());
  std::vector<std::string> labels;
  labels.reserve(g.num_arcs());
  for (Arc a = 0; a < g.num_arcs(); ++a) {
    const Vertex b = g.head(a);
    out[a].reserve(m);
    for (std::size_t k = 0; k < m; ++k) out[a].push_back(g.out_arc(b, k));
    labels.push_back("(" + g.label(g.tail(a)) + "," + g.label(b) + ")");
  }
  return RegularDigraph::from_adjacency(out, std::move(labels));
}

LineDigraph base_line_digraph(const RegularDigraph& g) {
  LineDigraph ld{g, {}, 0, g.num_vertices()};
  ld.paths.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) ld.paths.push_back({v});
  return ld;
}

LineDigraph iterated_line_digraph(const RegularDigraph& g, std::size_t depth, std::size_t vertex_cap) {
  if (depth < 1) throw std::invalid_argument("line digraph depth must be at least 1");
  // n * m^d, checked before anything is allocated.
  std::size_t size = g.num_vertices();
  for (std::size_t i = 0; i < depth; ++i) {
    if (size > vertex_cap / g.degree()) {
      throw ResourceError("L^" + std::to_string(depth) + " G would exceed the cap of " + std::to_string(vertex_cap) +
                          " vertices");
    }
    size *= g.degree();
  }

  std::vector<PathVertex> paths;
  paths.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) paths.push_back({v});

  std::vector<std::vector<Vertex>> adjacency = g.adjacency();
  const std::size_t m = g.degree();
  for (std::size_t level = 0; level < depth; ++level) {
    // Vertices of the next level are the arcs (u, k) of this level, id u*m + k.
    const std::size_t n = adjacency.size();
    std::vector<PathVertex> next_paths;
    next_paths.reserve(n * m);
    std::vector<std::vector<Vertex>> next(n * m);
    for (Vertex u = 0; u < n; ++u) {
      for (std::size_t k = 0; k < m; ++k) {
        const Vertex w = adjacency[u][k];
        PathVertex p = paths[u];
        p.push_back(paths[w].back());
        next_paths.push_back(std::move(p));
        auto& row = next[u * m + k];
        row.reserve(m);
        for (std::size_t j = 0; j < m; ++j) row.push_back(w * m + j);
      }
    }
    paths = std::move(next_paths);
    adjacency = std::move(next);
  }

  std::vector<std::string> labels;
  labels.reserve(paths.size());
  for (const auto& p : paths) labels.push_back(path_label(p));
  return LineDigraph{RegularDigraph::from_adjacency(adjacency, std::move(labels)), std::move(paths), depth,
                     g.num_vertices()};
}

RegularDigraph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle graph needs N >= 3, got " + std::to_string(n));
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex x = 0; x < n; ++x) out[x] = {(x + 1) % n, (x + n - 1) % n};
  return RegularDigraph::from_adjacency(out);
}

RegularDigraph directed_cycle(std::size_t n) {
  if (n < 2) throw GraphError("directed cycle needs N >= 2, got " + std::to_string(n));
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex x = 0; x < n; ++x) out[x] = {(x + 1) % n};
  return RegularDigraph::from_adjacency(out);
}

bool is_cycle_layout(const RegularDigraph& g) {
  const std::size_t n = g.num_vertices();
  if (g.degree() != 2 || n < 3) return false;
  for (Vertex x = 0; x < n; ++x) {
    if (g.head(2 * x) != (x + 1) % n || g.head(2 * x + 1) != (x + n - 1) % n) return false;
  }
  return true;
}

}  // namespace qwalk
