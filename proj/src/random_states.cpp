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

#include "scs/random_states.hpp"

#include <cmath>

namespace scs {

DensityMatrix ginibre_state(int dim, Rng &rng) {
  if (dim < 1) {
    throw ValidationError("ginibre_state: dimension must be positive");
  }
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g(r, c) = rng.complex_normal();
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

StateVector haar_pure_state(int dim, Rng &rng) {
  if (dim < 1) {
    throw ValidationError("haar_pure_state: dimension must be positive");
  }
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = rng.complex_normal();
  }
  v /= v.norm();
  return StateVector(std::move(v));
}

Matrix haar_special_unitary(int n, Rng &rng) {
  if (n < 1) {
    throw ValidationError("haar_special_unitary: n must be positive");
  }
  Matrix a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a(r, c) = rng.complex_normal();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the row phases so the distribution is exactly Haar, then divide out
  // the determinant phase to land in SU(n).
  for (int i = 0; i < n; ++i) {
    Complex rii = r(i, i);
    Complex phase = (std::abs(rii) > 0.0) ? rii / std::abs(rii) : Complex(1.0, 0.0);
    q.col(i) *= phase;
  }
  Complex det = q.determinant();
  const double arg = std::arg(det);
  q *= std::polar(1.0, -arg / static_cast<double>(n));
  return q;
}

} // namespace scs
