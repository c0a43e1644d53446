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

// Random fixtures and brute-force oracles shared by the unit and acceptance
// tests. The dense operators here are assembled straight from the walk
// definitions (successor tables, coin-shift tables, psi projectors), never
// from the step functions they are used to check.

#ifndef QWALK_TESTS_TEST_SUPPORT_HPP
#define QWALK_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qwalk/bridge.hpp"
#include "qwalk/coined_walk.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/partition.hpp"
#include "qwalk/szegedy_walk.hpp"

namespace qwalk::fixtures {

using Rng = std::mt19937_64;

/// Simple m-regular digraph on n vertices: the union of m permutations with
/// no fixed points that disagree everywhere. Rejection-sampled.
inline RegularDigraph random_regular_digraph(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (;;) {
    std::vector<std::vector<Vertex>> out(n);
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) {
      bool placed = false;
      for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        placed = true;
        for (Vertex v = 0; v < n && placed; ++v) {
          if (perm[v] == v || std::find(out[v].begin(), out[v].end(), perm[v]) != out[v].end()) placed = false;
        }
      }
      if (!placed) {
        ok = false;
        break;
      }
      for (Vertex v = 0; v < n; ++v) out[v].push_back(perm[v]);
    }
    if (ok) return RegularDigraph::from_adjacency(out);
  }
}

inline std::shared_ptr<const LineDigraph> random_space(Rng& rng, std::size_t min_n, std::size_t max_n, std::size_t m,
                                                       std::size_t depth) {
  std::uniform_int_distribution<std::size_t> pick(min_n, max_n);
  const RegularDigraph g = random_regular_digraph(pick(rng), m, rng);
  return std::make_shared<const LineDigraph>(depth == 0 ? base_line_digraph(g) : iterated_line_digraph(g, depth));
}

inline std::shared_ptr<const RegularDigraph> graph_ptr(const std::shared_ptr<const LineDigraph>& space) {
  return {space, &space->graph};
}

/// Random valid partition: each vertex assigns its out-arcs to classes by a
/// random permutation.
inline VertexPartition random_partition(const std::shared_ptr<const LineDigraph>& space, Rng& rng) {
  const auto& g = space->graph;
  const std::size_t m = g.degree();
  std::vector<std::vector<Vertex>> succ(m, std::vector<Vertex>(g.num_vertices()));
  std::vector<std::size_t> order(m);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (Coin k = 0; k < m; ++k) succ[k][v] = g.out_neighbors(v)[order[k]];
  }
  return VertexPartition(graph_ptr(space), std::move(succ));
}

/// Random coin shift satisfying the arrival-multiset constraint for p: the
/// m (vertex, coin) pairs arriving at each vertex get a random permutation.
inline CoinShiftFunction random_valid_shift(const VertexPartition& p, Rng& rng) {
  const auto& g = p.graph();
  const std::size_t m = p.num_classes();
  std::vector<std::vector<std::pair<Vertex, Coin>>> arriving(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Coin k = 0; k < m; ++k) arriving[p.successor(k, v)].push_back({v, k});
  }
  std::vector<std::vector<Coin>> table(g.num_vertices(), std::vector<Coin>(m));
  std::vector<Coin> coins(m);
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    std::iota(coins.begin(), coins.end(), Coin{0});
    std::shuffle(coins.begin(), coins.end(), rng);
    for (std::size_t i = 0; i < arriving[w].size(); ++i) table[arriving[w][i].first][arriving[w][i].second] = coins[i];
  }
  return CoinShiftFunction(m, std::move(table));
}

/// Uniformly random table, valid or not.
inline CoinShiftFunction random_any_shift(std::size_t n, std::size_t m, Rng& rng) {
  std::uniform_int_distribution<Coin> pick(0, m - 1);
  std::vector<std::vector<Coin>> table(n, std::vector<Coin>(m));
  for (auto& row : table) {
    for (auto& c : row) c = pick(rng);
  }
  return CoinShiftFunction(m, std::move(table));
}

inline CVector random_complex_vector(std::size_t m, Rng& rng) {
  std::normal_distribution<double> normal;
  CVector v(static_cast<Eigen::Index>(m));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
  return v;
}

inline CVector random_unit_vector(std::size_t m, Rng& rng) { return random_complex_vector(m, rng).normalized(); }

/// Haar-ish unitary: Q of a complex Gaussian matrix with R's phases removed.
inline CMatrix random_unitary(std::size_t m, Rng& rng) {
  const auto k = static_cast<Eigen::Index>(m);
  CMatrix z(k, k);
  for (Eigen::Index c = 0; c < k; ++c) z.col(c) = random_complex_vector(m, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(k, k);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < k; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

inline TransitionAmplitudes random_amplitudes(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<CVector> rows;
  for (std::size_t v = 0; v < n; ++v) rows.push_back(random_unit_vector(m, rng));
  return TransitionAmplitudes::from_complex(std::move(rows));
}

inline CoinOperator random_unitary_coins(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<CMatrix> blocks;
  for (std::size_t v = 0; v < n; ++v) blocks.push_back(random_unitary(m, rng));
  return CoinOperator::per_vertex(std::move(blocks));
}

/// Coins of the form 2 a a^dagger - I with random unit a.
inline CoinOperator random_reflection_coins(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<CMatrix> blocks;
  const auto k = static_cast<Eigen::Index>(m);
  for (std::size_t v = 0; v < n; ++v) {
    const CVector a = random_unit_vector(m, rng);
    blocks.push_back(2.0 * a * a.adjoint() - CMatrix::Identity(k, k));
  }
  return CoinOperator::per_vertex(std::move(blocks));
}

inline CoinedWalk random_coined_walk(Rng& rng, bool reflection_coins, std::size_t m = 3, std::size_t max_n = 8) {
  auto space = random_space(rng, m + 1, max_n, m, 1);
  VertexPartition p = random_partition(space, rng);
  CoinShiftFunction gc = random_valid_shift(p, rng);
  const std::size_t n = space->graph.num_vertices();
  CoinOperator coin = reflection_coins ? random_reflection_coins(n, m, rng) : random_unitary_coins(n, m, rng);
  return CoinedWalk(space, std::move(p), std::move(gc), std::move(coin));
}

// --- independent dense oracles ------------------------------------------------

/// D from the successor and coin-shift tables: |v, j> -> |f'_j(v), gc(v, j)>.
inline CMatrix oracle_shift_matrix(const CoinedWalk& walk) {
  const auto& p = walk.partition();
  const std::size_t m = walk.num_coins();
  const auto dim = static_cast<Eigen::Index>(walk.dimension());
  CMatrix d = CMatrix::Zero(dim, dim);
  for (Vertex v = 0; v < walk.graph().num_vertices(); ++v) {
    for (Coin j = 0; j < m; ++j) {
      const auto from = static_cast<Eigen::Index>(v * m + j);
      const auto to = static_cast<Eigen::Index>(p.successor(j, v) * m + walk.shift()(v, j));
      d(to, from) += 1.0;
    }
  }
  return d;
}

/// Block-diagonal coin operator.
inline CMatrix oracle_coin_matrix(const CoinedWalk& walk) {
  const auto m = static_cast<Eigen::Index>(walk.num_coins());
  const auto dim = static_cast<Eigen::Index>(walk.dimension());
  CMatrix c = CMatrix::Zero(dim, dim);
  for (Vertex v = 0; v < walk.graph().num_vertices(); ++v) {
    c.block(static_cast<Eigen::Index>(v) * m, static_cast<Eigen::Index>(v) * m, m, m) = walk.coin().at(v);
  }
  return c;
}

inline CMatrix oracle_step_matrix(const CoinedWalk& walk) { return oracle_shift_matrix(walk) * oracle_coin_matrix(walk); }

/// S = sum_a |f(a)><a|.
inline CMatrix oracle_arc_shift_matrix(const ArcSuccessor& f) {
  const auto dim = static_cast<Eigen::Index>(f.size());
  CMatrix s = CMatrix::Zero(dim, dim);
  for (Arc a = 0; a < f.size(); ++a) s(static_cast<Eigen::Index>(f(a)), static_cast<Eigen::Index>(a)) += 1.0;
  return s;
}

/// R = 2 sum_v |psi_v><psi_v| - I with psi_v = sum_w alpha_vw |v, w> built
/// as full arc-space vectors.
inline CMatrix oracle_reflection_matrix(const RegularDigraph& g, const TransitionAmplitudes& amplitudes) {
  const auto dim = static_cast<Eigen::Index>(g.num_arcs());
  CMatrix r = -CMatrix::Identity(dim, dim);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    CVector psi = CVector::Zero(dim);
    for (std::size_t k = 0; k < g.degree(); ++k) {
      const auto arc = g.find_arc(v, g.out_neighbors(v)[k]);
      psi(static_cast<Eigen::Index>(*arc)) = amplitudes.at(v)(static_cast<Eigen::Index>(k));
    }
    r += 2.0 * psi * psi.adjoint();
  }
  return r;
}

/// Permutation matrix taking coined basis index i to arc index arc_of(i).
inline CMatrix correspondence_matrix(const BasisCorrespondence& c) {
  const auto dim = static_cast<Eigen::Index>(c.dimension());
  CMatrix p = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < c.dimension(); ++i) p(static_cast<Eigen::Index>(c.arc_of(i)), static_cast<Eigen::Index>(i)) = 1.0;
  return p;
}

inline double max_abs(const CMatrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

/// Arc id of the arc of L C_N's underlying C_N: (x, x+1) is 2x, (x, x-1) is 2x+1.
/// In L C_N these arc ids are the vertex ids.
inline Vertex line_vertex(std::size_t n, Vertex from, Vertex to) {
  if (to == (from + 1) % n) return 2 * from;
  if (to == (from + n - 1) % n) return 2 * from + 1;
  throw std::invalid_argument("not a cycle step");
}

}  // namespace qwalk::fixtures

#endif  // QWALK_TESTS_TEST_SUPPORT_HPP
