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

#ifndef QWALK_COINED_WALK_HPP
#define QWALK_COINED_WALK_HPP

#include <array>
#include <memory>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/**
 * Per-vertex m x m coin matrices acting on column vectors: the coin
 * amplitudes psi at v become A(v) * psi. A position-independent coin is
 * stored once.
 */
class CoinOperator {
 public:
  static CoinOperator uniform(CMatrix a);
  static CoinOperator per_vertex(std::vector<CMatrix> blocks);

  bool is_uniform() const { return blocks_.size() == 1; }
  std::size_t num_coins() const { return static_cast<std::size_t>(blocks_.front().rows()); }
  const CMatrix& at(Vertex v) const { return blocks_.size() == 1 ? blocks_.front() : blocks_[v]; }
  std::size_t num_blocks() const { return blocks_.size(); }

  /// Largest unitarity deviation over all blocks.
  double unitarity_deviation() const;

 private:
  explicit CoinOperator(std::vector<CMatrix> blocks) : blocks_(std::move(blocks)) {}
  std::vector<CMatrix> blocks_;
};

/// Coined walk with memory: U = D * C on the walked graph L^d G.
class CoinedWalk {
 public:
  /// Throws ValidationError when the partition, coin shift or coin fail
  /// their checks, DimensionError on size mismatches.
  CoinedWalk(std::shared_ptr<const LineDigraph> space, VertexPartition partition, CoinShiftFunction shift,
             CoinOperator coin);

  const LineDigraph& space() const { return *space_; }
  const std::shared_ptr<const LineDigraph>& space_ptr() const { return space_; }
  const RegularDigraph& graph() const { return space_->graph; }
  const VertexPartition& partition() const { return partition_; }
  const CoinShiftFunction& shift() const { return shift_; }
  const CoinOperator& coin() const { return coin_; }

  std::size_t num_coins() const { return partition_.num_classes(); }
  std::size_t dimension() const { return graph().num_vertices() * num_coins(); }
  std::size_t basis_index(Vertex v, Coin c) const { return v * num_coins() + c; }
  /// Image of basis state |v, c> under D.
  std::size_t shift_target(std::size_t index) const { return shift_targets_[index]; }

  CoinedState apply_coin(const CoinedState& s) const;
  CoinedState apply_shift(const CoinedState& s) const;
  CoinedState step(const CoinedState& s) const { return apply_shift(apply_coin(s)); }
  CoinedState evolve(CoinedState s, std::size_t steps) const;

 private:
  void check_dimension(const CoinedState& s) const;

  std::shared_ptr<const LineDigraph> space_;
  VertexPartition partition_;
  CoinShiftFunction shift_;
  CoinOperator coin_;
  std::vector<std::size_t> shift_targets_;
};

/// p(x) = sum of |amplitude|^2 over basis states whose vertex decodes to a
/// walk ending at x.
std::vector<double> position_distribution(const CoinedState& s, const LineDigraph& space);

// ---------------------------------------------------------------------------
// Walks with memory on the cycle C_N (the finite model of the line).
// Coin index 0 is the coin "1" (transmit), index 1 is "-1" (reflect).
// ---------------------------------------------------------------------------

/// +1 if the last move recorded by v went x -> x+1, -1 if it went x -> x-1.
int last_move(const LineDigraph& space, Vertex v);

/// Out-neighbor of v whose walk continues from x_d to x_d + direction.
Vertex move_from(const LineDigraph& space, Vertex v, int direction);

/// Coin 1 always steps right, coin -1 always steps left.
VertexPartition absolute_direction_partition(const std::shared_ptr<const LineDigraph>& space);

/// Coin 1 keeps the last direction, coin -1 reverses it. A dicycle
/// partition at memory depth 1 only: at depth d >= 2 the two paths that
/// differ in their oldest vertex enter the same class at the same vertex.
VertexPartition transmit_reflect_partition(const std::shared_ptr<const LineDigraph>& space);

/// Coin shift for transmit_reflect_partition. The identity at depth 1. At
/// depth d >= 2 the arriving coin is 1 when the move about to leave the
/// memory window continued in the same direction as the move after it, and
/// -1 when it reversed.
CoinShiftFunction transmit_reflect_shift(const LineDigraph& space);

/// gc(v, c) = coin of v's last move: 1 if it went right, -1 if left.
CoinShiftFunction recorded_direction_shift(const LineDigraph& space);

CMatrix hadamard();
/// The coin used at left-moving vertices: the Hadamard with both coin
/// labels exchanged, [[-1, 1], [1, 1]] / sqrt(2).
CMatrix swapped_hadamard();

/// Hadamard at right-moving vertices, swapped Hadamard at left-moving ones.
CoinOperator direction_dependent_hadamard(const LineDigraph& space);

/// QWM1: absolute-direction partition, recorded-direction coin shift,
/// direction-dependent Hadamard. Walk on L C_N, N >= 4.
CoinedWalk build_qwm1(std::size_t n);

/// QWM2: transmit/reflect partition, identity coin shift, Hadamard.
CoinedWalk build_qwm2(std::size_t n);

/// Memory-d walk on C_N with the transmit/reflect partition and shift and a
/// uniform coin.
CoinedWalk build_transmit_reflect_walk(std::size_t n, std::size_t depth, const CMatrix& coin);

/// Amplitudes (a, b, a2, b2) on |x-1, x, 1>, |x-1, x, -1>, |x+1, x, 1>,
/// |x+1, x, -1> of a memory-1 walk on C_N.
CoinedState line_initial_state(const CoinedWalk& walk, Vertex x, const std::array<Complex, 4>& amplitudes);

/// The QWM1 starting state for (a, b, a2, b2).
CoinedState qwm1_initial_state(const CoinedWalk& walk, Vertex x, const std::array<Complex, 4>& amplitudes);

/// The matching QWM2 starting state: a2 and b2 change places.
CoinedState qwm2_initial_state(const CoinedWalk& walk, Vertex x, const std::array<Complex, 4>& amplitudes);

}  // namespace qwalk

#endif  // QWALK_COINED_WALK_HPP
