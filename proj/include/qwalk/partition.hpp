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

#ifndef QWALK_PARTITION_HPP
#define QWALK_PARTITION_HPP

#include <memory>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/**
 * Coined-walk partition of a graph's arcs into m sub-digraphs C'_1..C'_m,
 * each giving every vertex out-degree 1. Stored as m successor maps:
 * successor(k, v) is the head of v's unique arc in C'_k.
 *
 * Construction only checks shape (m maps of n entries); semantic validity
 * is reported by validate_vertex_partition.
 */
class VertexPartition {
 public:
  VertexPartition(std::shared_ptr<const RegularDigraph> graph, std::vector<std::vector<Vertex>> successors);

  const RegularDigraph& graph() const { return *graph_; }
  const std::shared_ptr<const RegularDigraph>& graph_ptr() const { return graph_; }
  std::size_t num_classes() const { return successors_.size(); }
  Vertex successor(Coin k, Vertex v) const { return successors_[k][v]; }
  const std::vector<std::vector<Vertex>>& successors() const { return successors_; }

  /// Arc id of v's arc in class k. Only meaningful for a valid partition.
  Arc arc_of(Coin k, Vertex v) const;

  bool operator==(const VertexPartition& other) const { return successors_ == other.successors_; }

 private:
  std::shared_ptr<const RegularDigraph> graph_;
  std::vector<std::vector<Vertex>> successors_;
};

/// gc: (vertex, coin) -> coin, stored as table[v][c].
class CoinShiftFunction {
 public:
  CoinShiftFunction(std::size_t num_coins, std::vector<std::vector<Coin>> table);

  /// gc(v, c) = c.
  static CoinShiftFunction identity(std::size_t num_vertices, std::size_t num_coins);

  std::size_t num_vertices() const { return table_.size(); }
  std::size_t num_coins() const { return num_coins_; }
  Coin operator()(Vertex v, Coin c) const { return table_[v][c]; }
  const std::vector<std::vector<Coin>>& table() const { return table_; }

  bool operator==(const CoinShiftFunction& other) const { return table_ == other.table_; }

 private:
  std::size_t num_coins_;
  std::vector<std::vector<Coin>> table_;
};

/// The edge dicycle partition as the arc bijection f; its classes are the
/// cycles of the permutation.
class ArcSuccessor {
 public:
  ArcSuccessor(std::shared_ptr<const RegularDigraph> graph, std::vector<Arc> next);

  const RegularDigraph& graph() const { return *graph_; }
  const std::shared_ptr<const RegularDigraph>& graph_ptr() const { return graph_; }
  Arc operator()(Arc a) const { return next_[a]; }
  const std::vector<Arc>& next() const { return next_; }
  std::size_t size() const { return next_.size(); }

  bool operator==(const ArcSuccessor& other) const { return next_ == other.next_; }

 private:
  std::shared_ptr<const RegularDigraph> graph_;
  std::vector<Arc> next_;
};

ValidationReport validate_vertex_partition(const VertexPartition& p);

/// Per class k: whether every vertex also has in-degree 1 within C'_k.
std::vector<bool> is_dicycle_partition(const VertexPartition& p);

/// For every vertex v, the coins gc(v_i, c_k) over all (v_i, c_k) with
/// successor(k, v_i) = v must be exactly {c_1, ..., c_m}.
ValidationReport validate_coin_shift(const CoinShiftFunction& gc, const VertexPartition& p);

ValidationReport validate_arc_successor(const ArcSuccessor& f);

/// Cycle decomposition of f, each cycle starting at its smallest arc, cycles
/// ordered by that arc.
std::vector<std::vector<Arc>> cycles_of(const ArcSuccessor& f);

/**
 * The arc map induced by a coined walk's partition and coin shift:
 * (v, w) in C'_j goes to (w, successor(gc(v, j), w)).
 * Requires a valid partition; the result is a bijection exactly when gc
 * satisfies the coin-shift constraint.
 */
ArcSuccessor induced_arc_successor(const VertexPartition& p, const CoinShiftFunction& gc);

}  // namespace qwalk

#endif  // QWALK_PARTITION_HPP
