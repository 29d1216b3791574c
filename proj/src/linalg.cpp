// Copyright 2026 The spincoherence Authors
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

#include "scs/linalg.hpp"

#include <cmath>

namespace scs {

Matrix hermitian_phase_exp(const Matrix &h, double scale) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd &evals = solver.eigenvalues();
  const Matrix &vecs = solver.eigenvectors();
  Vector phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    phases(i) = std::polar(1.0, scale * evals(i));
  }
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

double hermiticity_defect(const Matrix &a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Complex trace_product(const Matrix &a, const Matrix &b) {
  return a.transpose().cwiseProduct(b).sum();
}

} // namespace scs
