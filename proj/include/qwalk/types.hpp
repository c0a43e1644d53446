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

#ifndef QWALK_TYPES_HPP
#define QWALK_TYPES_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Vertex = std::size_t;
using Arc = std::size_t;
/// Coins are 0-based internally; file formats and reports print them 1-based.
using Coin = std::size_t;

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Operator identities (unitarity, R^2 = I, operator equality).
inline constexpr double kOperatorTolerance = 1e-12;
/// Iterated-state comparisons (distributions after many steps).
inline constexpr double kStateTolerance = 1e-10;

/// Malformed graph input: wrong degree, duplicate arc, self-loop, bad id.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector or matrix sizes do not agree with the walk they are used with.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  std::string kind;
  std::optional<Vertex> vertex;
  std::string message;
};

/// Collected invariant violations; empty means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::optional<Vertex> vertex, std::string message) {
    violations.push_back({std::move(kind), vertex, std::move(message)});
  }
  std::string summary() const;
};

/// Thrown when a walk is assembled from components that fail validation.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : std::invalid_argument(what + ": " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// State vector tagged with the basis it lives in, so arc-space and
/// vertex-coin-space amplitudes cannot be mixed up.
template <class Basis>
struct WalkState {
  CVector amplitudes;

  WalkState() = default;
  explicit WalkState(CVector a) : amplitudes(std::move(a)) {}
  static WalkState zero(std::size_t dim) { return WalkState(CVector::Zero(static_cast<Eigen::Index>(dim))); }
  static WalkState basis(std::size_t dim, std::size_t index) {
    WalkState s = zero(dim);
    s.amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
    return s;
  }

  std::size_t size() const { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
  Complex& operator[](std::size_t i) { return amplitudes(static_cast<Eigen::Index>(i)); }
  const Complex& operator[](std::size_t i) const { return amplitudes(static_cast<Eigen::Index>(i)); }
};

struct VertexCoinBasis {};
struct ArcBasis {};

/// Amplitudes over |v, c> with index v*m + c.
using CoinedState = WalkState<VertexCoinBasis>;
/// Amplitudes over arcs |v, w> of the walked graph, indexed by arc id.
using SzegedyState = WalkState<ArcBasis>;

/// Largest |(A^dagger A - I)_ij|.
double unitarity_deviation(const CMatrix& a);

}  // namespace qwalk

#endif  // QWALK_TYPES_HPP
