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

#include "qwalk/bridge.hpp"

#include <cmath>

namespace qwalk {

BasisCorrespondence::BasisCorrespondence(const VertexPartition& partition) {
  const auto& g = partition.graph();
  const std::size_t m = partition.num_classes();
  coin_to_arc_.resize(g.num_vertices() * m);
  arc_to_coin_.assign(g.num_arcs(), g.num_arcs());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Coin j = 0; j < m; ++j) {
      const Arc a = partition.arc_of(j, v);
      if (arc_to_coin_[a] != g.num_arcs()) {
        throw std::invalid_argument("partition uses arc " + std::to_string(a) + " twice at vertex " +
                                    std::to_string(v));
      }
      coin_to_arc_[v * m + j] = a;
      arc_to_coin_[a] = v * m + j;
    }
  }
}

SzegedyState map_state(const CoinedState& s, const BasisCorrespondence& correspondence) {
  if (s.size() != correspondence.dimension()) throw DimensionError("state does not match the correspondence");
  SzegedyState out = SzegedyState::zero(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[correspondence.arc_of(i)] = s[i];
  return out;
}

CoinedState map_state(const SzegedyState& s, const BasisCorrespondence& correspondence) {
  if (s.size() != correspondence.dimension()) throw DimensionError("state does not match the correspondence");
  CoinedState out = CoinedState::zero(s.size());
  for (Arc a = 0; a < s.size(); ++a) out[correspondence.coined_index_of(a)] = s[a];
  return out;
}

const SzegedyWalk& SzegedyForm::require_reflection_form() const {
  if (!is_reflection_form()) {
    throw CoinNotReflectionForm("coin at vertex " + std::to_string(non_reflection_vertices.front()) +
                                    " is not of the form 2 a a^dagger - I (" +
                                    std::to_string(non_reflection_vertices.size()) + " vertices affected)",
                                non_reflection_vertices);
  }
  return walk;
}

std::vector<std::size_t> coin_orientation(const VertexPartition& partition, Vertex v) {
  std::vector<std::size_t> orientation(partition.num_classes());
  for (Coin j = 0; j < partition.num_classes(); ++j) {
    orientation[j] = partition.graph().out_position(partition.arc_of(j, v));
  }
  return orientation;
}

CMatrix coin_from_reflection(const CVector& alpha, std::span<const std::size_t> orientation) {
  const auto m = alpha.size();
  if (!orientation.empty() && static_cast<Eigen::Index>(orientation.size()) != m) {
    throw DimensionError("orientation must list one out-arc per coin");
  }
  auto slot = [&](Eigen::Index j) {
    return orientation.empty() ? j : static_cast<Eigen::Index>(orientation[static_cast<std::size_t>(j)]);
  };
  CMatrix a(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      a(j, k) = 2.0 * alpha(slot(j)) * std::conj(alpha(slot(k))) - (j == k ? 1.0 : 0.0);
    }
  }
  return a;
}

std::optional<CVector> reflection_vector(const CMatrix& block, double tolerance) {
  const auto m = block.rows();
  if (m == 0 || block.cols() != m) return std::nullopt;
  // 2 a a^dagger - I = B  <=>  (B + I) / 2 = a a^dagger.
  const CMatrix projector = 0.5 * (block + CMatrix::Identity(m, m));
  Eigen::Index k = 0;
  projector.diagonal().real().maxCoeff(&k);
  const double peak = projector(k, k).real();
  if (peak <= tolerance) return std::nullopt;
  CVector alpha = projector.col(k) / std::sqrt(peak);
  alpha.normalize();
  const CMatrix rebuilt = 2.0 * alpha * alpha.adjoint() - CMatrix::Identity(m, m);
  if ((rebuilt - block).cwiseAbs().maxCoeff() > tolerance) return std::nullopt;
  return alpha;
}

SzegedyForm coined_to_szegedy(const CoinedWalk& walk) {
  const auto& p = walk.partition();
  const auto& g = walk.graph();
  const std::size_t m = walk.num_coins();

  std::vector<CMatrix> blocks;
  blocks.reserve(g.num_vertices());
  std::vector<CVector> alphas;
  std::vector<Vertex> non_reflection;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto orientation = coin_orientation(p, v);
    const CMatrix& coin = walk.coin().at(v);
    CMatrix block(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        block(static_cast<Eigen::Index>(orientation[j]), static_cast<Eigen::Index>(orientation[k])) =
            coin(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
      }
    }
    if (auto alpha = reflection_vector(block)) {
      alphas.push_back(std::move(*alpha));
    } else {
      non_reflection.push_back(v);
    }
    blocks.push_back(std::move(block));
  }

  ArcSuccessor f = induced_arc_successor(p, walk.shift());
  BasisCorrespondence correspondence(p);
  if (non_reflection.empty()) {
    return SzegedyForm{SzegedyWalk(walk.space_ptr(), std::move(f), TransitionAmplitudes::from_complex(std::move(alphas))),
                       std::move(correspondence), {}};
  }
  return SzegedyForm{SzegedyWalk::with_local_blocks(walk.space_ptr(), std::move(f), std::move(blocks)),
                     std::move(correspondence), std::move(non_reflection)};
}

CoinedWalk szegedy_to_coined(const SzegedyWalk& walk, const VertexPartition& target) {
  const auto& g = walk.graph();
  if (!(target.graph() == g)) throw DimensionError("target partition belongs to a different graph");
  ValidationReport report = validate_vertex_partition(target);
  if (!report.ok()) throw ValidationError("target partition is invalid", std::move(report));

  const std::size_t m = target.num_classes();
  std::vector<std::vector<Coin>> table(g.num_vertices(), std::vector<Coin>(m));
  std::vector<CMatrix> coins;
  coins.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Coin j = 0; j < m; ++j) {
      const Vertex w = target.successor(j, v);
      const Vertex u = g.head(walk.successor()(target.arc_of(j, v)));
      Coin k = 0;
      while (k < m && target.successor(k, w) != u) ++k;
      if (k == m) throw std::logic_error("arc successor leaves the graph at vertex " + std::to_string(w));
      table[v][j] = k;
    }
    const auto orientation = coin_orientation(target, v);
    const CMatrix& block = walk.local_block(v);
    CMatrix coin(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        coin(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
            block(static_cast<Eigen::Index>(orientation[j]), static_cast<Eigen::Index>(orientation[k]));
      }
    }
    coins.push_back(std::move(coin));
  }
  return CoinedWalk(walk.space_ptr(), target, CoinShiftFunction(m, std::move(table)),
                    CoinOperator::per_vertex(std::move(coins)));
}

}  // namespace qwalk
