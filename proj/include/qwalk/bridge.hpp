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

#ifndef QWALK_BRIDGE_HPP
#define QWALK_BRIDGE_HPP

#include <optional>
#include <span>
#include <vector>

#include "qwalk/coined_walk.hpp"
#include "qwalk/szegedy_walk.hpp"

namespace qwalk {

/**
 * Bijection between the vertex-coin basis and the arc basis of one walked
 * graph: |v, c_j> is the arc from v along partition class C'_j.
 */
class BasisCorrespondence {
 public:
  explicit BasisCorrespondence(const VertexPartition& partition);

  std::size_t dimension() const { return coin_to_arc_.size(); }
  Arc arc_of(std::size_t coined_index) const { return coin_to_arc_[coined_index]; }
  std::size_t coined_index_of(Arc a) const { return arc_to_coin_[a]; }

 private:
  std::vector<Arc> coin_to_arc_;
  std::vector<std::size_t> arc_to_coin_;
};

SzegedyState map_state(const CoinedState& s, const BasisCorrespondence& correspondence);
CoinedState map_state(const SzegedyState& s, const BasisCorrespondence& correspondence);

/// Some vertex's coin is not of the form 2 a a^dagger - I.
class CoinNotReflectionForm : public std::runtime_error {
 public:
  CoinNotReflectionForm(const std::string& what, std::vector<Vertex> vertices)
      : std::runtime_error(what), vertices_(std::move(vertices)) {}
  const std::vector<Vertex>& vertices() const { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

struct SzegedyForm {
  SzegedyWalk walk;
  BasisCorrespondence correspondence;
  /// Vertices whose coin could not be written as a reflection; there the
  /// coin's arc-space block is carried verbatim. Empty means walk is a
  /// genuine S * R walk with amplitudes.
  std::vector<Vertex> non_reflection_vertices;

  bool is_reflection_form() const { return non_reflection_vertices.empty(); }
  /// Throws CoinNotReflectionForm unless is_reflection_form().
  const SzegedyWalk& require_reflection_form() const;
};

/// Transports a coined walk to the arc space. The shift D becomes the arc
/// permutation f and each coin block, conjugated into out-arc order, becomes
/// the local operator at that vertex.
SzegedyForm coined_to_szegedy(const CoinedWalk& walk);

/// Re-expresses a Szegedy walk as a coined walk on the given partition of
/// the same graph.
CoinedWalk szegedy_to_coined(const SzegedyWalk& walk, const VertexPartition& target);

/**
 * Coin matrix equal to the reflection about alpha seen from a coin frame:
 * coin j is out-arc orientation[j], and A_jk = 2 alpha_{o_j} conj(alpha_{o_k})
 * - delta_jk (column-vector convention, A acts as psi -> A psi).
 * An empty orientation means the identity frame.
 */
CMatrix coin_from_reflection(const CVector& alpha, std::span<const std::size_t> orientation = {});

/// Out-arc position of each coin of `partition` at v.
std::vector<std::size_t> coin_orientation(const VertexPartition& partition, Vertex v);

/// alpha with block = 2 alpha alpha^dagger - I within tolerance, if one
/// exists. The returned vector has its largest entry real and positive.
std::optional<CVector> reflection_vector(const CMatrix& block, double tolerance = kOperatorTolerance);

}  // namespace qwalk

#endif  // QWALK_BRIDGE_HPP
