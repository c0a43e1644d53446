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

#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwalk {

namespace {

template <class Walk, class State>
DenseOperator assemble(const Walk& walk, std::size_t max_basis) {
  const std::size_t dim = walk.dimension();
  if (dim > max_basis) {
    throw ResourceError("dense operator needs " + std::to_string(dim) + " basis states, cap is " +
                        std::to_string(max_basis));
  }
  DenseOperator out;
  out.matrix = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    out.matrix.col(static_cast<Eigen::Index>(col)) = walk.step(State::basis(dim, col)).amplitudes;
  }
  out.unitarity_deviation = unitarity_deviation(out.matrix);
  return out;
}

void check_sum(const std::vector<double>& p) {
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-8) {
    throw std::invalid_argument("probability vector sums to " + std::to_string(total));
  }
}

}  // namespace

DenseOperator dense_operator(const CoinedWalk& walk, std::size_t max_basis) {
  return assemble<CoinedWalk, CoinedState>(walk, max_basis);
}

DenseOperator dense_operator(const SzegedyWalk& walk, std::size_t max_basis) {
  return assemble<SzegedyWalk, SzegedyState>(walk, max_basis);
}

double phase_aligned_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrices differ in shape");
  if (a.size() == 0) return 0;
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  Complex phase = 1.0;
  if (std::abs(b(r, c)) > 0) {
    const Complex ratio = a(r, c) / b(r, c);
    phase = ratio / std::abs(ratio);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

DistributionDistance compare_distributions(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw DimensionError("distributions have lengths " + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()));
  }
  check_sum(p);
  check_sum(q);
  DistributionDistance d;
  double l1 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = std::abs(p[i] - q[i]);
    d.max_abs = std::max(d.max_abs, diff);
    l1 += diff;
  }
  d.total_variation = 0.5 * l1;
  return d;
}

Moments moments(const std::vector<double>& p, Vertex origin) {
  check_sum(p);
  const auto n = static_cast<long long>(p.size());
  if (origin >= p.size()) throw std::invalid_argument("origin outside the cycle");
  double mean = 0;
  double second = 0;
  for (long long x = 0; x < n; ++x) {
    long long disp = ((x - static_cast<long long>(origin)) % n + n) % n;  // [0, n)
    if (2 * disp > n) disp -= n;                                         // (-n/2, n/2]
    const double px = p[static_cast<std::size_t>(x)];
    mean += px * double(disp);
    second += px * double(disp) * double(disp);
  }
  return {mean, std::sqrt(std::max(second - mean * mean, 0.0))};
}

Moments moments(const std::vector<double>& p, Vertex origin, const RegularDigraph& base) {
  if (!is_cycle_layout(base)) throw std::invalid_argument("displacement moments need a cycle graph");
  if (base.num_vertices() != p.size()) throw DimensionError("distribution does not match the cycle");
  return moments(p, origin);
}

double EquivalenceReport::worst() const {
  return max_abs_diff.empty() ? 0.0 : *std::max_element(max_abs_diff.begin(), max_abs_diff.end());
}

EquivalenceReport qwm_equivalence_experiment(std::size_t n, std::size_t steps,
                                             const std::array<Complex, 4>& amplitudes) {
  double norm2 = 0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kStateTolerance) {
    throw std::invalid_argument("initial amplitudes have squared norm " + std::to_string(norm2));
  }
  if (n <= 2 * steps + 2) {
    throw std::invalid_argument("need N > 2t + 2 so the cycle models the line exactly (N = " + std::to_string(n) +
                                ", t = " + std::to_string(steps) + ")");
  }

  const CoinedWalk qwm1 = build_qwm1(n);
  const CoinedWalk qwm2 = build_qwm2(n);
  EquivalenceReport report;
  report.n = n;
  report.steps = steps;
  report.origin = n / 2;
  report.amplitudes = amplitudes;

  CoinedState s1 = qwm1_initial_state(qwm1, report.origin, amplitudes);
  CoinedState s2 = qwm2_initial_state(qwm2, report.origin, amplitudes);
  for (std::size_t t = 0;; ++t) {
    const auto d = compare_distributions(position_distribution(s1, qwm1.space()),
                                         position_distribution(s2, qwm2.space()));
    report.max_abs_diff.push_back(d.max_abs);
    report.total_variation.push_back(d.total_variation);
    if (t == steps) break;
    s1 = qwm1.step(s1);
    s2 = qwm2.step(s2);
  }
  return report;
}

}  // namespace qwalk
