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

#ifndef SCS_METROLOGY_HPP
#define SCS_METROLOGY_HPP

#include <functional>

#include "scs/types.hpp"

namespace scs {

/// Angular-momentum covariance of a pure state:
/// Cov_ij = Re<psi| J_i J_j |psi> - <J_i><J_j> (real symmetric 3x3).
Eigen::Matrix3d covariance_matrix(const StateVector &psi, const SpinLabel &label);

/// Quantum Fisher information for rotation about the unit axis n:
/// Q = 4 Var_psi(J . n).
double qfi_axis(const StateVector &psi, const SpinLabel &label,
                const Eigen::Vector3d &axis);

/// Mean of Q over the uniform sphere of rotation axes, evaluated by
/// quadrature; equals (4/3) Tr Cov exactly.
double axis_averaged_qfi(const StateVector &psi, const SpinLabel &label,
                         int n_theta = 32, int n_phi = 64);

struct AxisAverageResult {
  double value = 0.0;
  /// The integrand 1/Q diverges on some axis: Cov has a near-zero
  /// eigenvalue, so the average does not exist.
  bool diverged = false;
  Eigen::Vector3d divergent_axis = Eigen::Vector3d::Zero();
};

/// Mean of the single-axis Cramer-Rao bound 1/Q over the sphere of axes.
/// Divergence is detected from the covariance spectrum rather than from
/// quadrature-node values, since fixed grids can miss the singular axis.
AxisAverageResult axis_averaged_crb(const StateVector &psi, const SpinLabel &label,
                                    int n_theta = 32, int n_phi = 64);

struct MultiparameterBound {
  double inverse_trace_cov = 0.0; // 1 / Tr Cov = 1 / (J A^2)
  double trace_inv_cov = 0.0;     // Tr Cov^{-1}; +inf when Cov is singular
  bool singular = false;
};

/// Scalar three-axis bounds: 1/Tr Cov, which is always finite for a pure
/// state with J > 0, and Tr Cov^{-1}, which satisfies
/// Tr Cov^{-1} >= 9 / Tr Cov and blows up on rank-deficient covariance.
MultiparameterBound multiparameter_bound(const StateVector &psi,
                                         const SpinLabel &label);

struct SensingReport {
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
  double scs = 0.0;
  double trace_cov = 0.0;
  double axis_mean_qfi = 0.0;
  AxisAverageResult axis_mean_crb;
  MultiparameterBound bound;
  /// Q along a caller-chosen axis, exposed as a callable.
  std::function<double(const Eigen::Vector3d &)> qfi_of_axis;
};

/// One-stop summary tying the coherence scale to rotation sensing:
/// Tr Cov = J * A^2 and mean Q = (4J/3) A^2 for pure states.
SensingReport sensing_report(const StateVector &psi, const SpinLabel &label);

} // namespace scs

#endif // SCS_METROLOGY_HPP
