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

#ifndef QWALK_ANALYSIS_HPP
#define QWALK_ANALYSIS_HPP

#include <array>
#include <vector>

#include "qwalk/coined_walk.hpp"
#include "qwalk/szegedy_walk.hpp"

namespace qwalk {

inline constexpr std::size_t kDefaultDenseCap = 4096;

struct DenseOperator {
  CMatrix matrix;
  double unitarity_deviation = 0;
};

/// U assembled column by column from step() on each basis state. Throws
/// ResourceError when the basis is larger than max_basis.
DenseOperator dense_operator(const CoinedWalk& walk, std::size_t max_basis = kDefaultDenseCap);
DenseOperator dense_operator(const SzegedyWalk& walk, std::size_t max_basis = kDefaultDenseCap);

/// max |A_ij - e^{i phi} B_ij| with phi chosen so the largest-magnitude
/// entry of A lines up with the same entry of B.
double phase_aligned_distance(const CMatrix& a, const CMatrix& b);

struct DistributionDistance {
  double max_abs = 0;
  double total_variation = 0;
};

/// Throws DimensionError on length mismatch, std::invalid_argument if a
/// vector does not sum to 1 within 1e-8.
DistributionDistance compare_distributions(const std::vector<double>& p, const std::vector<double>& q);

struct Moments {
  double mean = 0;
  double stddev = 0;
};

/// Mean and standard deviation of the signed displacement from origin on
/// C_N, with displacements taken in (-N/2, N/2].
Moments moments(const std::vector<double>& p, Vertex origin);
/// As above, but first checks that `base` is a cycle laid out like
/// cycle_graph; throws std::invalid_argument otherwise.
Moments moments(const std::vector<double>& p, Vertex origin, const RegularDigraph& base);

struct EquivalenceReport {
  std::size_t n = 0;
  std::size_t steps = 0;
  Vertex origin = 0;
  std::array<Complex, 4> amplitudes{};
  /// Entry t compares the position distributions after t steps.
  std::vector<double> max_abs_diff;
  std::vector<double> total_variation;

  double worst() const;
};

/**
 * Runs QWM1 from a|x-1,x,1> + b|x-1,x,-1> + a2|x+1,x,1> + b2|x+1,x,-1>
 * and QWM2 from the state with a2 and b2 exchanged, on C_N with x = N/2,
 * comparing position distributions after every step 0..steps.
 * Requires unit total norm and N > 2*steps + 2.
 */
EquivalenceReport qwm_equivalence_experiment(std::size_t n, std::size_t steps, const std::array<Complex, 4>& amplitudes);

}  // namespace qwalk

#endif  // QWALK_ANALYSIS_HPP
