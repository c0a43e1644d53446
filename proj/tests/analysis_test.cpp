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

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace qwalk;
using qwalk::fixtures::Rng;

TEST(analysis, dense_operator_matches_oracle) {
  const CoinedWalk w = build_qwm2(8);
  const DenseOperator u = dense_operator(w);
  EXPECT_EQ(u.matrix.rows(), 32);
  EXPECT_LE(u.unitarity_deviation, 1e-12);
  EXPECT_LE(fixtures::max_abs(u.matrix - fixtures::oracle_step_matrix(w)), 1e-15);
}

TEST(analysis, dense_operator_of_a_permutation_walk_is_a_permutation) {
  auto space = std::make_shared<const LineDigraph>(iterated_line_digraph(cycle_graph(5), 1));
  const ArcSuccessor f = induced_arc_successor(transmit_reflect_partition(space), CoinShiftFunction::identity(10, 2));
  std::vector<std::vector<double>> q(10, {1.0, 0.0});
  // R fixes the first out-arc and negates the second.
  const SzegedyWalk w(space, f, TransitionAmplitudes::from_probabilities(q));
  const CMatrix u = dense_operator(w).matrix;
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    EXPECT_NEAR(u.col(c).cwiseAbs().sum(), 1.0, 0);
    EXPECT_NEAR(u.col(c).cwiseAbs().maxCoeff(), 1.0, 0);
  }
}

TEST(analysis, dense_operator_cap) {
  EXPECT_THROW(dense_operator(build_qwm2(8), 31), ResourceError);
  EXPECT_NO_THROW(dense_operator(build_qwm2(8), 32));
}

TEST(analysis, dense_power_matches_iterated_step) {
  const CoinedWalk w = build_transmit_reflect_walk(6, 2, hadamard());
  const CMatrix u = dense_operator(w).matrix;
  Rng rng(21);
  const CoinedState s(fixtures::random_unit_vector(w.dimension(), rng));
  CVector dense = s.amplitudes;
  for (int t = 0; t < 50; ++t) dense = u * dense;
  EXPECT_LE((w.evolve(s, 50).amplitudes - dense).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(analysis, phase_aligned_distance_ignores_global_phase) {
  Rng rng(22);
  const CMatrix a = fixtures::random_unitary(4, rng);
  const Complex phase = std::polar(1.0, 0.7);
  EXPECT_LE(phase_aligned_distance(a, phase * a), 1e-15);
  EXPECT_GT(phase_aligned_distance(a, a.transpose()), 1e-3);
  EXPECT_THROW(phase_aligned_distance(a, CMatrix::Identity(3, 3)), DimensionError);
}

TEST(analysis, compare_distributions_cases) {
  const auto same = compare_distributions({0.25, 0.75}, {0.25, 0.75});
  EXPECT_EQ(same.max_abs, 0);
  EXPECT_EQ(same.total_variation, 0);
  const auto apart = compare_distributions({1, 0, 0}, {0, 0, 1});
  EXPECT_EQ(apart.max_abs, 1);
  EXPECT_EQ(apart.total_variation, 1);
  const auto partial = compare_distributions({0.5, 0.5}, {0.2, 0.8});
  EXPECT_NEAR(partial.max_abs, 0.3, 1e-15);
  EXPECT_NEAR(partial.total_variation, 0.3, 1e-15);
  EXPECT_THROW(compare_distributions({1}, {0.5, 0.5}), DimensionError);
  EXPECT_THROW(compare_distributions({0.5, 0.6}, {0.5, 0.5}), std::invalid_argument);
}

TEST(analysis, moments_cases) {
  std::vector<double> p(16, 0.0);
  p[8] = 1;
  auto m = moments(p, 8);
  EXPECT_EQ(m.mean, 0);
  EXPECT_EQ(m.stddev, 0);
  p[8] = 0;
  p[5] = 0.5;
  p[11] = 0.5;
  m = moments(p, 8);
  EXPECT_NEAR(m.mean, 0, 1e-15);
  EXPECT_NEAR(m.stddev, 3, 1e-15);
  // Displacement wraps around the cycle.
  std::vector<double> q(10, 0.0);
  q[9] = 1;
  EXPECT_NEAR(moments(q, 0).mean, -1, 1e-15);
  EXPECT_THROW(moments(q, 0, directed_cycle(10)), std::invalid_argument);
  EXPECT_NO_THROW(moments(q, 0, cycle_graph(10)));
}

TEST(analysis, spreading_is_ballistic) {
  const std::size_t n = 256;
  const CoinedWalk w = build_qwm1(n);
  const double r = 1.0 / std::sqrt(2.0);
  CoinedState s = qwm1_initial_state(w, n / 2, {r, Complex(0, r), 0, 0});
  s = w.evolve(s, 25);
  const double s25 = moments(position_distribution(s, w.space()), n / 2).stddev;
  s = w.evolve(s, 25);
  const double s50 = moments(position_distribution(s, w.space()), n / 2).stddev;
  EXPECT_NEAR(s50 / s25, 2.0, 0.2);
}

TEST(analysis, equivalence_experiment_examples) {
  const auto one = qwm_equivalence_experiment(64, 25, {1, 0, 0, 0});
  EXPECT_EQ(one.max_abs_diff.size(), 26u);
  EXPECT_LE(one.worst(), 1e-10);
  EXPECT_EQ(one.origin, 32u);
  const auto half = qwm_equivalence_experiment(64, 25, {0.5, 0.5, 0.5, 0.5});
  EXPECT_LE(half.worst(), 1e-10);
  const auto zero = qwm_equivalence_experiment(64, 0, {0, 0, 0, 1});
  EXPECT_EQ(zero.max_abs_diff, std::vector<double>{0.0});
}

TEST(analysis, equivalence_on_random_quadruples) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const CVector v = fixtures::random_unit_vector(4, rng);
    const auto r = qwm_equivalence_experiment(32, 12, {v(0), v(1), v(2), v(3)});
    EXPECT_LE(r.worst(), 1e-10);
    for (double tv : r.total_variation) EXPECT_LE(tv, 1e-10);
  }
}

TEST(analysis, equivalence_preconditions) {
  EXPECT_THROW(qwm_equivalence_experiment(64, 25, {1, 1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(qwm_equivalence_experiment(50, 24, {1, 0, 0, 0}), std::invalid_argument);
  EXPECT_NO_THROW(qwm_equivalence_experiment(51, 24, {1, 0, 0, 0}));
}

TEST(analysis, light_cone) {
  const std::size_t n = 64;
  const CoinedWalk w = build_qwm2(n);
  CoinedState s = qwm2_initial_state(w, 32, {0.5, 0.5, 0.5, 0.5});
  for (std::size_t t = 1; t <= 25; ++t) {
    s = w.step(s);
    const auto p = position_distribution(s, w.space());
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t dist = x > 32 ? x - 32 : 32 - x;
      if (dist > t + 1) ASSERT_EQ(p[x], 0.0) << "t=" << t << " x=" << x;
    }
  }
}

TEST(analysis, sparse_and_dense_unitarity_agree) {
  Rng rng(24);
  const CMatrix u = dense_operator(build_transmit_reflect_walk(16, 2, hadamard())).matrix;
  ASSERT_EQ(u.rows(), 128);
  EXPECT_LE(unitarity_deviation(u), 1e-12);
  CMatrix bent = u;
  bent(3, 5) += 0.25;
  bent(7, 7) = 0.0;
  const CMatrix exact = bent.adjoint() * bent - CMatrix::Identity(128, 128);
  EXPECT_NEAR(unitarity_deviation(bent), exact.cwiseAbs().maxCoeff(), 1e-15);
  // A zero column leaves a missing diagonal entry in the sparse Gram matrix.
  CMatrix holed = u;
  holed.col(9).setZero();
  EXPECT_EQ(unitarity_deviation(holed), 1.0);
  const CMatrix dense = fixtures::random_unitary(96, rng);
  EXPECT_LE(unitarity_deviation(dense), 1e-12);
}
