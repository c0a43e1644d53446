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

#include "qwalk/coined_walk.hpp"

#include <cmath>

namespace qwalk {

CoinOperator CoinOperator::uniform(CMatrix a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DimensionError("coin matrix must be square and non-empty");
  return CoinOperator({std::move(a)});
}

CoinOperator CoinOperator::per_vertex(std::vector<CMatrix> blocks) {
  if (blocks.empty()) throw DimensionError("coin operator needs at least one block");
  const auto m = blocks.front().rows();
  for (const auto& b : blocks) {
    if (b.rows() != m || b.cols() != m || m == 0) throw DimensionError("coin blocks must all be m x m");
  }
  return CoinOperator(std::move(blocks));
}

double CoinOperator::unitarity_deviation() const {
  double worst = 0;
  for (const auto& b : blocks_) worst = std::max(worst, qwalk::unitarity_deviation(b));
  return worst;
}

CoinedWalk::CoinedWalk(std::shared_ptr<const LineDigraph> space, VertexPartition partition, CoinShiftFunction shift,
                       CoinOperator coin)
    : space_(std::move(space)), partition_(std::move(partition)), shift_(std::move(shift)), coin_(std::move(coin)) {
  if (!space_) throw std::invalid_argument("coined walk needs a graph");
  const auto& g = space_->graph;
  if (!(partition_.graph() == g)) throw DimensionError("partition was built for a different graph");
  const std::size_t m = g.degree();
  if (coin_.num_coins() != m) {
    throw DimensionError("coin is " + std::to_string(coin_.num_coins()) + "x" + std::to_string(coin_.num_coins()) +
                         ", graph degree is " + std::to_string(m));
  }
  if (!coin_.is_uniform() && coin_.num_blocks() != g.num_vertices()) {
    throw DimensionError("coin has " + std::to_string(coin_.num_blocks()) + " blocks for " +
                         std::to_string(g.num_vertices()) + " vertices");
  }

  ValidationReport report = validate_vertex_partition(partition_);
  if (report.ok()) {
    for (auto& v : validate_coin_shift(shift_, partition_).violations) report.violations.push_back(std::move(v));
  }
  for (Vertex v = 0; v < coin_.num_blocks(); ++v) {
    const double dev = qwalk::unitarity_deviation(coin_.at(v));
    if (dev > kOperatorTolerance) {
      report.add("coin-not-unitary", coin_.is_uniform() ? std::nullopt : std::optional<Vertex>(v),
                 "max |A^dagger A - I| = " + std::to_string(dev));
    }
  }
  if (!report.ok()) throw ValidationError("invalid coined walk", std::move(report));

  shift_targets_.resize(dimension());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Coin j = 0; j < m; ++j) {
      shift_targets_[basis_index(v, j)] = basis_index(partition_.successor(j, v), shift_(v, j));
    }
  }
}

void CoinedWalk::check_dimension(const CoinedState& s) const {
  if (s.size() != dimension()) {
    throw DimensionError("state has " + std::to_string(s.size()) + " amplitudes, walk needs " +
                         std::to_string(dimension()));
  }
}

CoinedState CoinedWalk::apply_coin(const CoinedState& s) const {
  check_dimension(s);
  const auto m = static_cast<Eigen::Index>(num_coins());
  CoinedState out = CoinedState::zero(dimension());
  for (Vertex v = 0; v < graph().num_vertices(); ++v) {
    const auto offset = static_cast<Eigen::Index>(v) * m;
    out.amplitudes.segment(offset, m).noalias() = coin_.at(v) * s.amplitudes.segment(offset, m);
  }
  return out;
}

CoinedState CoinedWalk::apply_shift(const CoinedState& s) const {
  check_dimension(s);
  CoinedState out = CoinedState::zero(dimension());
  for (std::size_t i = 0; i < shift_targets_.size(); ++i) out[shift_targets_[i]] = s[i];
  return out;
}

CoinedState CoinedWalk::evolve(CoinedState s, std::size_t steps) const {
  for (std::size_t t = 0; t < steps; ++t) s = step(s);
  return s;
}

std::vector<double> position_distribution(const CoinedState& s, const LineDigraph& space) {
  const std::size_t n = space.graph.num_vertices();
  if (n == 0 || s.size() % n != 0) throw DimensionError("state size does not match the walked graph");
  const std::size_t m = s.size() / n;
  std::vector<double> p(space.base_vertices, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    double mass = 0;
    for (Coin c = 0; c < m; ++c) mass += std::norm(s[v * m + c]);
    p[space.position(v)] += mass;
  }
  return p;
}

int last_move(const LineDigraph& space, Vertex v) {
  const auto& path = space.paths[v];
  if (path.size() < 2) throw std::invalid_argument("direction needs a walk with memory");
  const std::size_t n = space.base_vertices;
  const Vertex from = path[path.size() - 2];
  const Vertex to = path.back();
  if (to == (from + 1) % n) return 1;
  if (to == (from + n - 1) % n) return -1;
  throw std::invalid_argument("walk step " + std::to_string(from) + "->" + std::to_string(to) +
                              " is not a cycle step");
}

Vertex move_from(const LineDigraph& space, Vertex v, int direction) {
  const std::size_t n = space.base_vertices;
  const Vertex x = space.position(v);
  const Vertex target = direction > 0 ? (x + 1) % n : (x + n - 1) % n;
  for (Vertex w : space.graph.out_neighbors(v)) {
    if (space.position(w) == target) return w;
  }
  throw std::invalid_argument("vertex " + std::to_string(v) + " has no move to position " + std::to_string(target));
}

namespace {

void require_cycle_memory(const LineDigraph& space) {
  if (space.depth < 1) throw std::invalid_argument("line walks need memory depth >= 1");
  if (space.graph.degree() != 2 || space.base_vertices < 4) {
    throw std::invalid_argument("line walks need C_N with N >= 4 as the base graph");
  }
}

}  // namespace

VertexPartition absolute_direction_partition(const std::shared_ptr<const LineDigraph>& space) {
  require_cycle_memory(*space);
  const std::size_t n = space->graph.num_vertices();
  std::vector<std::vector<Vertex>> succ(2, std::vector<Vertex>(n));
  for (Vertex v = 0; v < n; ++v) {
    succ[0][v] = move_from(*space, v, +1);
    succ[1][v] = move_from(*space, v, -1);
  }
  return VertexPartition(std::shared_ptr<const RegularDigraph>(space, &space->graph), std::move(succ));
}

VertexPartition transmit_reflect_partition(const std::shared_ptr<const LineDigraph>& space) {
  require_cycle_memory(*space);
  const std::size_t n = space->graph.num_vertices();
  std::vector<std::vector<Vertex>> succ(2, std::vector<Vertex>(n));
  for (Vertex v = 0; v < n; ++v) {
    const int dir = last_move(*space, v);
    succ[0][v] = move_from(*space, v, dir);
    succ[1][v] = move_from(*space, v, -dir);
  }
  return VertexPartition(std::shared_ptr<const RegularDigraph>(space, &space->graph), std::move(succ));
}

CoinShiftFunction recorded_direction_shift(const LineDigraph& space) {
  require_cycle_memory(space);
  const std::size_t n = space.graph.num_vertices();
  std::vector<std::vector<Coin>> table(n);
  for (Vertex v = 0; v < n; ++v) {
    const Coin c = last_move(space, v) > 0 ? 0 : 1;
    table[v] = {c, c};
  }
  return CoinShiftFunction(2, std::move(table));
}

CoinShiftFunction transmit_reflect_shift(const LineDigraph& space) {
  require_cycle_memory(space);
  const std::size_t count = space.graph.num_vertices();
  if (space.depth == 1) return CoinShiftFunction::identity(count, 2);
  const std::size_t n = space.base_vertices;
  std::vector<std::vector<Coin>> table(count);
  for (Vertex v = 0; v < count; ++v) {
    const auto& path = space.paths[v];
    const bool kept = (path[1] + n - path[0]) % n == (path[2] + n - path[1]) % n;
    const Coin c = kept ? 0 : 1;
    table[v] = {c, c};
  }
  return CoinShiftFunction(2, std::move(table));
}

CMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2);
  h << s, s, s, -s;
  return h;
}

CMatrix swapped_hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2);
  h << -s, s, s, s;
  return h;
}

CoinOperator direction_dependent_hadamard(const LineDigraph& space) {
  require_cycle_memory(space);
  std::vector<CMatrix> blocks;
  blocks.reserve(space.graph.num_vertices());
  for (Vertex v = 0; v < space.graph.num_vertices(); ++v) {
    blocks.push_back(last_move(space, v) > 0 ? hadamard() : swapped_hadamard());
  }
  return CoinOperator::per_vertex(std::move(blocks));
}

namespace {

std::shared_ptr<const LineDigraph> line_of_cycle(std::size_t n, std::size_t depth) {
  if (n < 4) throw GraphError("line walks need N >= 4, got " + std::to_string(n));
  return std::make_shared<const LineDigraph>(iterated_line_digraph(cycle_graph(n), depth));
}

}  // namespace

CoinedWalk build_qwm1(std::size_t n) {
  auto space = line_of_cycle(n, 1);
  return CoinedWalk(space, absolute_direction_partition(space), recorded_direction_shift(*space),
                    direction_dependent_hadamard(*space));
}

CoinedWalk build_qwm2(std::size_t n) { return build_transmit_reflect_walk(n, 1, hadamard()); }

CoinedWalk build_transmit_reflect_walk(std::size_t n, std::size_t depth, const CMatrix& coin) {
  auto space = line_of_cycle(n, depth);
  return CoinedWalk(space, transmit_reflect_partition(space), transmit_reflect_shift(*space),
                    CoinOperator::uniform(coin));
}

CoinedState line_initial_state(const CoinedWalk& walk, Vertex x, const std::array<Complex, 4>& amplitudes) {
  const auto& space = walk.space();
  if (space.depth != 1 || space.graph.degree() != 2) {
    throw std::invalid_argument("line initial states need a memory-1 walk on a cycle");
  }
  const std::size_t n = space.base_vertices;
  // Vertices of L C_N are the arcs of C_N: arc 2y is (y, y+1), arc 2y+1 is (y, y-1).
  const Vertex from_left = 2 * ((x + n - 1) % n);  // (x-1, x)
  const Vertex from_right = 2 * ((x + 1) % n) + 1;  // (x+1, x)
  if (space.position(from_left) != x || space.position(from_right) != x) {
    throw std::logic_error("unexpected vertex layout of L C_N");
  }
  CoinedState s = CoinedState::zero(walk.dimension());
  s[walk.basis_index(from_left, 0)] = amplitudes[0];
  s[walk.basis_index(from_left, 1)] = amplitudes[1];
  s[walk.basis_index(from_right, 0)] = amplitudes[2];
  s[walk.basis_index(from_right, 1)] = amplitudes[3];
  return s;
}

CoinedState qwm1_initial_state(const CoinedWalk& walk, Vertex x, const std::array<Complex, 4>& amplitudes) {
  return line_initial_state(walk, x, amplitudes);
}

CoinedState qwm2_initial_state(const CoinedWalk& walk, Vertex x, const std::array<Complex, 4>& amplitudes) {
  return line_initial_state(walk, x, {amplitudes[0], amplitudes[1], amplitudes[3], amplitudes[2]});
}

}  // namespace qwalk
