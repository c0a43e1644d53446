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

#ifndef QWALK_SZEGEDY_WALK_HPP
#define QWALK_SZEGEDY_WALK_HPP

#include <memory>
#include <optional>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/**
 * Per-vertex amplitude vectors alpha_v over the out-neighbors of v, in
 * out-arc order. psi_v = |v> (x) sum_w alpha_vw |w>. The real case
 * alpha_vw = sqrt(q_vw) comes from a row-stochastic transition table.
 */
class TransitionAmplitudes {
 public:
  /// Rows must have length m and unit norm (within 1e-12).
  static TransitionAmplitudes from_complex(std::vector<CVector> rows);
  /// q[v][k] is the probability of leaving v along its k-th out-arc.
  static TransitionAmplitudes from_probabilities(const std::vector<std::vector<double>>& q);
  /// Dense n x n transition matrix; mass on a non-arc (v, w) is rejected.
  static TransitionAmplitudes from_transition_matrix(const RegularDigraph& g, const Eigen::MatrixXd& q);
  /// Equal weight 1/sqrt(m) on every out-arc.
  static TransitionAmplitudes uniform(std::size_t num_vertices, std::size_t degree);
  /// No normalization check. For diagnosing non-reflections only.
  static TransitionAmplitudes unchecked(std::vector<CVector> rows);

  std::size_t num_vertices() const { return rows_.size(); }
  std::size_t degree() const { return rows_.empty() ? 0 : static_cast<std::size_t>(rows_.front().size()); }
  const CVector& at(Vertex v) const { return rows_[v]; }
  const std::vector<CVector>& rows() const { return rows_; }

  /// The reflection block 2 alpha_v alpha_v^dagger - I in out-arc order.
  CMatrix reflection_block(Vertex v) const;

 private:
  explicit TransitionAmplitudes(std::vector<CVector> rows) : rows_(std::move(rows)) {}
  std::vector<CVector> rows_;
};

/// Largest |(R^2 - I)_ij| for R built from the given amplitudes, swept over
/// each vertex's out-arc basis states.
double reflection_square_deviation(const TransitionAmplitudes& amplitudes);

/**
 * Szegedy walk with memory on the arcs of L^d G: U = S * R.
 *
 * R acts on each block of out-arcs of a vertex. Normally that block is the
 * reflection about alpha_v; a walk transported from a coined walk whose coin
 * is not a reflection instead carries the coin's arc-space block verbatim
 * (local_blocks), and has no amplitudes.
 */
class SzegedyWalk {
 public:
  SzegedyWalk(std::shared_ptr<const LineDigraph> space, ArcSuccessor successor, TransitionAmplitudes amplitudes);

  /// Walk whose local operator at v is blocks[v] (m x m, out-arc order,
  /// unitary).
  static SzegedyWalk with_local_blocks(std::shared_ptr<const LineDigraph> space, ArcSuccessor successor,
                                       std::vector<CMatrix> blocks);

  const LineDigraph& space() const { return *space_; }
  const std::shared_ptr<const LineDigraph>& space_ptr() const { return space_; }
  const RegularDigraph& graph() const { return space_->graph; }
  const ArcSuccessor& successor() const { return successor_; }
  const std::optional<TransitionAmplitudes>& amplitudes() const { return amplitudes_; }
  /// Local operator at v in out-arc order.
  const CMatrix& local_block(Vertex v) const { return blocks_[v]; }
  bool is_reflection_walk() const { return amplitudes_.has_value(); }

  std::size_t dimension() const { return graph().num_arcs(); }

  SzegedyState apply_reflection(const SzegedyState& s) const;
  SzegedyState apply_arc_shift(const SzegedyState& s) const;
  SzegedyState step(const SzegedyState& s) const { return apply_arc_shift(apply_reflection(s)); }
  SzegedyState evolve(SzegedyState s, std::size_t steps) const;

  /// Largest |(R^2 - I)_ij| over a sweep of arc basis states.
  double r_squared_check() const;

 private:
  SzegedyWalk(std::shared_ptr<const LineDigraph> space, ArcSuccessor successor,
              std::optional<TransitionAmplitudes> amplitudes, std::vector<CMatrix> blocks);
  void check_dimension(const SzegedyState& s) const;

  std::shared_ptr<const LineDigraph> space_;
  ArcSuccessor successor_;
  std::optional<TransitionAmplitudes> amplitudes_;
  std::vector<CMatrix> blocks_;
};

/// Walker position of an arc state is the position of the arc's tail.
std::vector<double> position_distribution(const SzegedyState& s, const LineDigraph& space);

}  // namespace qwalk

#endif  // QWALK_SZEGEDY_WALK_HPP
