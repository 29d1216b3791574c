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

#include "scs/types.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace scs {

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) {
    throw ValidationError("StateVector: empty amplitude vector");
  }
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "StateVector: amplitudes must have unit norm, got " << norm;
    throw ValidationError(msg.str());
  }
}

DensityMatrix::DensityMatrix(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw ValidationError("DensityMatrix: entries must form a nonempty square matrix");
  }
  const double herm_defect = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > 1e-12) {
    std::ostringstream msg;
    msg << "DensityMatrix: hermiticity violated (max |rho - rho^dag| = "
        << herm_defect << ")";
    throw ValidationError(msg.str());
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-12) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace must equal 1, got (" << tr.real() << ", "
        << tr.imag() << ")";
    throw ValidationError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-10) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << min_eig
        << " below the positivity tolerance";
    throw ValidationError(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
  Matrix proj = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(std::move(proj));
}

} // namespace scs
