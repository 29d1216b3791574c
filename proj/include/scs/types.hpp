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

#ifndef SCS_TYPES_HPP
#define SCS_TYPES_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "scs/errors.hpp"

namespace scs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Spin label storing 2J as an integer so half-integer spins stay exact.
struct SpinLabel {
  int two_j;

  explicit SpinLabel(int two_j_in) : two_j(two_j_in) {
    if (two_j < 0) {
      throw ValidationError("SpinLabel: 2J must be a nonnegative integer");
    }
  }

  double j() const { return 0.5 * static_cast<double>(two_j); }
  int dimension() const { return two_j + 1; }
};

/// Axis-angle rotation parameters; the axis must be a unit 3-vector.
struct RotationSpec {
  double theta;
  Eigen::Vector3d axis;

  RotationSpec(double theta_in, const Eigen::Vector3d &axis_in)
      : theta(theta_in), axis(axis_in) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) {
      throw ValidationError("RotationSpec: rotation axis must have unit norm");
    }
  }
};

/// Ordered list of Hermitian generators for the active algebra.
struct GeneratorSet {
  std::vector<Matrix> ops;

  int size() const { return static_cast<int>(ops.size()); }
  const Matrix &operator[](int i) const { return ops.at(static_cast<std::size_t>(i)); }
};

/// Normalized pure state in the basis fixed by its producer (Dicke or Fock).
class StateVector {
public:
  explicit StateVector(Vector amplitudes);

  const Vector &amplitudes() const { return amps_; }
  int dim() const { return static_cast<int>(amps_.size()); }

private:
  Vector amps_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix in the J3 (Dicke)
/// basis for SU(2), or in the symmetric-irrep Fock basis for SU(n).
class DensityMatrix {
public:
  /// Validates hermiticity (1e-12), trace (1e-12), eigenvalues >= -1e-10.
  explicit DensityMatrix(Matrix entries);

  /// Rank-one projector |psi><psi|.
  static DensityMatrix pure(const StateVector &psi);

  const Matrix &entries() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  /// Tr(rho^2), real and in (0, 1] for valid states.
  double purity() const { return m_.squaredNorm(); }

private:
  Matrix m_;
};

} // namespace scs

#endif // SCS_TYPES_HPP
