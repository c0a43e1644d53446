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

#ifndef QWALK_GRAPH_HPP
#define QWALK_GRAPH_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

struct ArcEnds {
  Vertex tail;
  Vertex head;
  bool operator==(const ArcEnds&) const = default;
};

/**
 * A simple digraph in which every vertex has out-degree and in-degree m.
 *
 * Arcs are numbered densely by tail: the k-th listed out-neighbor of v is
 * arc v*m + k. Undirected regular graphs are stored symmetrically, one arc
 * per direction. Instances are immutable once built.
 */
class RegularDigraph {
 public:
  /// Builds from out-neighbor lists. Throws GraphError on self-loops,
  /// repeated arcs, out-of-range ids, or irregular degrees.
  static RegularDigraph from_adjacency(const std::vector<std::vector<Vertex>>& out_neighbors,
                                       std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_arcs() const { return heads_.size(); }

  ArcEnds arc(Arc a) const { return {a / degree_, heads_[a]}; }
  Vertex tail(Arc a) const { return a / degree_; }
  Vertex head(Arc a) const { return heads_[a]; }
  /// Position of arc a among the out-arcs of its tail.
  std::size_t out_position(Arc a) const { return a % degree_; }
  Arc out_arc(Vertex v, std::size_t k) const { return v * degree_ + k; }

  /// Heads of the out-arcs of v, in arc order.
  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {heads_.data() + v * degree_, degree_};
  }
  /// Ids of the arcs entering v, in increasing order.
  std::span<const Arc> in_arcs(Vertex v) const { return {in_arcs_.data() + v * degree_, degree_}; }

  std::optional<Arc> find_arc(Vertex tail, Vertex head) const;
  bool has_arc(Vertex tail, Vertex head) const { return find_arc(tail, head).has_value(); }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Adjacency lists in the form accepted by from_adjacency.
  std::vector<std::vector<Vertex>> adjacency() const;

  bool operator==(const RegularDigraph& other) const {
    return num_vertices_ == other.num_vertices_ && degree_ == other.degree_ && heads_ == other.heads_;
  }

 private:
  RegularDigraph() = default;

  std::size_t num_vertices_ = 0;
  std::size_t degree_ = 0;
  std::vector<Vertex> heads_;
  std::vector<Arc> in_arcs_;
  std::vector<std::string> labels_;
};

/// A walk of length d in the base graph: (x_0, ..., x_d). The walker sits at
/// x_d; the preceding entries are its memory.
using PathVertex = std::vector<Vertex>;

/**
 * L^d G together with the decoding of each of its vertices into a walk of
 * length d in G. Depth 0 is G itself with trivial one-vertex paths.
 */
struct LineDigraph {
  RegularDigraph graph;
  std::vector<PathVertex> paths;
  std::size_t depth = 0;
  std::size_t base_vertices = 0;

  /// Current base-graph position of the walker at vertex v.
  Vertex position(Vertex v) const { return paths[v].back(); }
};

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

/// L G: vertices are the arcs of g in g's arc order; (a,b) -> (b,c) for every
/// out-arc (b,c) of g, listed in the order of b's out-arcs.
RegularDigraph line_digraph(const RegularDigraph& g);

/// Depth-0 wrapper around g.
LineDigraph base_line_digraph(const RegularDigraph& g);

/// L^d G with path decoding. Throws std::invalid_argument for d < 1 and
/// ResourceError if n*m^d exceeds vertex_cap.
LineDigraph iterated_line_digraph(const RegularDigraph& g, std::size_t depth,
                                  std::size_t vertex_cap = kDefaultVertexCap);

/// C_N as a symmetric 2-regular digraph; arc 2x is (x, x+1), arc 2x+1 is (x, x-1).
RegularDigraph cycle_graph(std::size_t n);

/// Directed N-cycle x -> x+1 (1-regular).
RegularDigraph directed_cycle(std::size_t n);

/// True if g is C_N in the layout produced by cycle_graph.
bool is_cycle_layout(const RegularDigraph& g);

}  // namespace qwalk

#endif  // QWALK_GRAPH_HPP
