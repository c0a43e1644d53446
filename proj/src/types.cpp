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

#include "qwalk/types.hpp"

#include <Eigen/SparseCore>

#include <algorithm>
#include <limits>
#include <sstream>

namespace qwalk {

namespace {

// Walk operators have a handful of nonzeros per column; the Gram matrix of
// the exact-zero-pruned sparse form is the same matrix at a fraction of the
// dense cost.
double sparse_unitarity_deviation(const CMatrix& a) {
  const Eigen::SparseMatrix<Complex> s = a.sparseView(Complex(0), 0.0);
  const Eigen::SparseMatrix<Complex> gram = Eigen::SparseMatrix<Complex>(s.adjoint()) * s;
  double worst = 0;
  std::vector<bool> diagonal_seen(static_cast<std::size_t>(a.rows()), false);
  for (Eigen::Index k = 0; k < gram.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(gram, k); it; ++it) {
      const bool diagonal = it.row() == it.col();
      if (diagonal) diagonal_seen[static_cast<std::size_t>(it.row())] = true;
      worst = std::max(worst, std::abs(it.value() - (diagonal ? 1.0 : 0.0)));
    }
  }
  if (std::find(diagonal_seen.begin(), diagonal_seen.end(), false) != diagonal_seen.end()) worst = std::max(worst, 1.0);
  return worst;
}

}  // namespace

double unitarity_deviation(const CMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0;
  const Eigen::Index nonzeros = (a.array() != Complex(0)).count();
  if (a.rows() >= 64 && nonzeros * 8 < a.size()) return sparse_unitarity_deviation(a);
  const CMatrix gram = a.adjoint() * a - CMatrix::Identity(a.rows(), a.cols());
  return gram.cwiseAbs().maxCoeff();
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
    out << "; " << violations[i].kind;
    if (violations[i].vertex) out << " at vertex " << *violations[i].vertex;
    out << ": " << violations[i].message;
  }
  if (violations.size() > 5) out << "; ...";
  return out.str();
}

}  // namespace qwalk
