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

#include "qwalk/szegedy_walk.hpp"

#include <cmath>

namespace qwalk {

namespace {

void check_rows(const std::vector<CVector>& rows) {
  if (rows.empty()) throw DimensionError("amplitudes need at least one vertex");
  const auto m = rows.front().size();
  if (m == 0) throw DimensionError("amplitude rows must be non-empty");
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (rows[v].size() != m) {
      throw DimensionError("amplitude row " + std::to_string(v) + " has " + std::to_string(rows[v].size()) +
                           " entries, expected " + std::to_string(m));
    }
  }
}

}  // namespace

TransitionAmplitudes TransitionAmplitudes::from_complex(std::vector<CVector> rows) {
  check_rows(rows);
  ValidationReport report;
  for (Vertex v = 0; v < rows.size(); ++v) {
    const double norm2 = rows[v].squaredNorm();
    if (std::abs(norm2 - 1.0) > kOperatorTolerance) {
      report.add("amplitude-norm", v, "sum |alpha_vw|^2 = " + std::to_string(norm2));
    }
  }
  if (!report.ok()) throw ValidationError("amplitudes are not normalized", std::move(report));
  return TransitionAmplitudes(std::move(rows));
}

TransitionAmplitudes TransitionAmplitudes::from_probabilities(const std::vector<std::vector<double>>& q) {
  std::vector<CVector> rows;
  rows.reserve(q.size());
  ValidationReport report;
  for (Vertex v = 0; v < q.size(); ++v) {
    CVector row(static_cast<Eigen::Index>(q[v].size()));
    for (std::size_t k = 0; k < q[v].size(); ++k) {
      if (!(q[v][k] >= 0.0)) report.add("negative-probability", v, "q = " + std::to_string(q[v][k]));
      row(static_cast<Eigen::Index>(k)) = std::sqrt(std::max(q[v][k], 0.0));
    }
    rows.push_back(std::move(row));
  }
  if (!report.ok()) throw ValidationError("transition probabilities are invalid", std::move(report));
  return from_complex(std::move(rows));
}

TransitionAmplitudes TransitionAmplitudes::from_transition_matrix(const RegularDigraph& g, const Eigen::MatrixXd& q) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  if (q.rows() != n || q.cols() != n) throw DimensionError("transition matrix must be n x n");
  ValidationReport report;
  std::vector<std::vector<double>> rows(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
      const double p = q(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(w));
      if (p != 0.0 && !g.has_arc(v, w)) {
        report.add("off-graph-probability", v,
                   "q(" + std::to_string(v) + "," + std::to_string(w) + ") = " + std::to_string(p) +
                       " but there is no arc");
      }
    }
    for (Vertex w : g.out_neighbors(v)) {
      rows[v].push_back(q(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(w)));
    }
  }
  if (!report.ok()) throw ValidationError("transition matrix does not fit the graph", std::move(report));
  return from_probabilities(rows);
}

TransitionAmplitudes TransitionAmplitudes::uniform(std::size_t num_vertices, std::size_t degree) {
  const CVector row = CVector::Constant(static_cast<Eigen::Index>(degree), 1.0 / std::sqrt(double(degree)));
  return TransitionAmplitudes(std::vector<CVector>(num_vertices, row));
}

TransitionAmplitudes TransitionAmplitudes::unchecked(std::vector<CVector> rows) {
  check_rows(rows);
  return TransitionAmplitudes(std::move(rows));
}

CMatrix TransitionAmplitudes::reflection_block(Vertex v) const {
  const CVector& a = rows_[v];
  return 2.0 * a * a.adjoint() - CMatrix::Identity(a.size(), a.size());
}

double reflection_square_deviation(const TransitionAmplitudes& amplitudes) {
  double worst = 0;
  const auto m = static_cast<Eigen::Index>(amplitudes.degree());
  for (Vertex v = 0; v < amplitudes.num_vertices(); ++v) {
    const CMatrix r = amplitudes.reflection_block(v);
    for (Eigen::Index k = 0; k < m; ++k) {
      CVector e = CVector::Zero(m);
      e(k) = 1.0;
      const CVector back = r * (r * e);
      worst = std::max(worst, (back - e).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

SzegedyWalk::SzegedyWalk(std::shared_ptr<const LineDigraph> space, ArcSuccessor successor,
                         TransitionAmplitudes amplitudes)
    : SzegedyWalk(std::move(space), std::move(successor), std::optional<TransitionAmplitudes>(std::move(amplitudes)),
                  {}) {}

SzegedyWalk SzegedyWalk::with_local_blocks(std::shared_ptr<const LineDigraph> space, ArcSuccessor successor,
                                           std::vector<CMatrix> blocks) {
  return SzegedyWalk(std::move(space), std::move(successor), std::nullopt, std::move(blocks));
}

SzegedyWalk::SzegedyWalk(std::shared_ptr<const LineDigraph> space, ArcSuccessor successor,
                         std::optional<TransitionAmplitudes> amplitudes, std::vector<CMatrix> blocks)
    : space_(std::move(space)),
      successor_(std::move(successor)),
      amplitudes_(std::move(amplitudes)),
      blocks_(std::move(blocks)) {
  if (!space_) throw std::invalid_argument("Szegedy walk needs a graph");
  const auto& g = space_->graph;
  if (!(successor_.graph() == g)) throw DimensionError("arc successor was built for a different graph");
  const auto m = static_cast<Eigen::Index>(g.degree());

  ValidationReport report = validate_arc_successor(successor_);
  if (amplitudes_) {
    if (amplitudes_->num_vertices() != g.num_vertices() || amplitudes_->degree() != g.degree()) {
      throw DimensionError("amplitudes do not match the graph's vertex count and degree");
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const double norm2 = amplitudes_->at(v).squaredNorm();
      if (std::abs(norm2 - 1.0) > kOperatorTolerance) {
        report.add("amplitude-norm", v, "sum |alpha_vw|^2 = " + std::to_string(norm2));
      }
    }
    blocks_.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) blocks_.push_back(amplitudes_->reflection_block(v));
  } else {
    if (blocks_.size() != g.num_vertices()) throw DimensionError("need one local block per vertex");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (blocks_[v].rows() != m || blocks_[v].cols() != m) throw DimensionError("local blocks must be m x m");
      const double dev = unitarity_deviation(blocks_[v]);
      if (dev > kOperatorTolerance) report.add("block-not-unitary", v, "max |B^dagger B - I| = " + std::to_string(dev));
    }
  }
  if (!report.ok()) throw ValidationError("invalid Szegedy walk", std::move(report));
}

void SzegedyWalk::check_dimension(const SzegedyState& s) const {
  if (s.size() != dimension()) {
    throw DimensionError("state has " + std::to_string(s.size()) + " amplitudes, walk needs " +
                         std::to_string(dimension()));
  }
}

SzegedyState SzegedyWalk::apply_reflection(const SzegedyState& s) const {
  check_dimension(s);
  const auto m = static_cast<Eigen::Index>(graph().degree());
  SzegedyState out = SzegedyState::zero(dimension());
  // Out-arcs of v occupy ids v*m .. v*m + m - 1.
  for (Vertex v = 0; v < graph().num_vertices(); ++v) {
    const auto offset = static_cast<Eigen::Index>(v) * m;
    const auto u = s.amplitudes.segment(offset, m);
    if (amplitudes_) {
      const CVector& a = amplitudes_->at(v);
      const Complex overlap = a.dot(u);  // alpha^dagger u
      out.amplitudes.segment(offset, m) = 2.0 * overlap * a - u;
    } else {
      out.amplitudes.segment(offset, m).noalias() = blocks_[v] * u;
    }
  }
  return out;
}

SzegedyState SzegedyWalk::apply_arc_shift(const SzegedyState& s) const {
  check_dimension(s);
  SzegedyState out = SzegedyState::zero(dimension());
  for (Arc a = 0; a < dimension(); ++a) out[successor_(a)] = s[a];
  return out;
}

SzegedyState SzegedyWalk::evolve(SzegedyState s, std::size_t steps) const {
  for (std::size_t t = 0; t < steps; ++t) s = step(s);
  return s;
}

double SzegedyWalk::r_squared_check() const {
  if (amplitudes_) return reflection_square_deviation(*amplitudes_);
  double worst = 0;
  const auto m = static_cast<Eigen::Index>(graph().degree());
  for (const auto& b : blocks_) {
    worst = std::max(worst, (b * b - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<double> position_distribution(const SzegedyState& s, const LineDigraph& space) {
  if (s.size() != space.graph.num_arcs()) throw DimensionError("state size does not match the walked graph");
  std::vector<double> p(space.base_vertices, 0.0);
  for (Arc a = 0; a < s.size(); ++a) p[space.position(space.graph.tail(a))] += std::norm(s[a]);
  return p;
}

}  // namespace qwalk
