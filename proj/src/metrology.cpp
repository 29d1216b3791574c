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

#include "scs/metrology.hpp"

#include <cmath>
#include <limits>

#include "scs/coherence.hpp"
#include "scs/errors.hpp"
#include "scs/quasiprob.hpp"
#include "scs/spin.hpp"

namespace scs {

namespace {

constexpr double kSingularEigenvalue = 1e-12;

void require_match(const StateVector &psi, const SpinLabel &label) {
  if (psi.amplitudes().size() != label.dimension()) {
    throw ValidationError("state dimension does not match the spin label");
  }
}

} // namespace

Eigen::Matrix3d covariance_matrix(const StateVector &psi, const SpinLabel &label) {
  require_match(psi, label);
  const GeneratorSet js = angular_momentum_ops(label);
  const Vector &v = psi.amplitudes();
  Vector jv[3];
  double means[3];
  for (int i = 0; i < 3; ++i) {
    jv[i] = js[i] * v;
    means[i] = v.dot(jv[i]).real();
  }
  Eigen::Matrix3d cov;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      // Re<J_i psi | J_j psi> = <{J_i, J_j}>/2 for Hermitian generators.
      const double symm = jv[i].dot(jv[j]).real();
      cov(i, j) = symm - means[i] * means[j];
      cov(j, i) = cov(i, j);
    }
  }
  return cov;
}

double qfi_axis(const StateVector &psi, const SpinLabel &label,
                const Eigen::Vector3d &axis) {
  const double norm = axis.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw ValidationError("qfi_axis: axis must be a unit vector");
  }
  const Eigen::Matrix3d cov = covariance_matrix(psi, label);
  return 4.0 * axis.dot(cov * axis);
}

double axis_averaged_qfi(const StateVector &psi, const SpinLabel &label,
                         int n_theta, int n_phi) {
  const Eigen::Matrix3d cov = covariance_matrix(psi, label);
  auto grid = make_sphere_grid(n_theta, n_phi);
  double sum = 0.0;
  double total_weight = 0.0;
  for (std::size_t k = 0; k < grid->size(); ++k) {
    const Eigen::Vector3d n = sphere_direction(grid->theta[k], grid->phi[k]);
    sum += grid->weight[k] * 4.0 * n.dot(cov * n);
    total_weight += grid->weight[k];
  }
  return sum / total_weight;
}

AxisAverageResult axis_averaged_crb(const StateVector &psi, const SpinLabel &label,
                                    int n_theta, int n_phi) {
  const Eigen::Matrix3d cov = covariance_matrix(psi, label);
  AxisAverageResult out;

  // A zero-variance direction makes 1/Q singular somewhere on the sphere
  // even if no quadrature node lands on it, so detect it spectrally.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  const double scale = std::max(cov.trace(), 1.0);
  int min_index = 0;
  eig.eigenvalues().minCoeff(&min_index);
  if (eig.eigenvalues()(min_index) < kSingularEigenvalue * scale) {
    out.diverged = true;
    out.divergent_axis = eig.eigenvectors().col(min_index);
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }

  auto grid = make_sphere_grid(n_theta, n_phi);
  double sum = 0.0;
  double total_weight = 0.0;
  for (std::size_t k = 0; k < grid->size(); ++k) {
    const Eigen::Vector3d n = sphere_direction(grid->theta[k], grid->phi[k]);
    const double q = 4.0 * n.dot(cov * n);
    sum += grid->weight[k] / q;
    total_weight += grid->weight[k];
  }
  out.value = sum / total_weight;
  return out;
}

MultiparameterBound multiparameter_bound(const StateVector &psi,
                                         const SpinLabel &label) {
  const Eigen::Matrix3d cov = covariance_matrix(psi, label);
  MultiparameterBound out;
  const double trace = cov.trace();
  if (!(trace > 0.0)) {
    throw DegenerateStateError("covariance trace vanished; J = 0 or invalid state");
  }
  out.inverse_trace_cov = 1.0 / trace;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  double inv_trace = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double lambda = eig.eigenvalues()(i);
    if (lambda < kSingularEigenvalue * std::max(trace, 1.0)) {
      out.singular = true;
      out.trace_inv_cov = std::numeric_limits<double>::infinity();
      return out;
    }
    inv_trace += 1.0 / lambda;
  }
  out.trace_inv_cov = inv_trace;
  return out;
}

SensingReport sensing_report(const StateVector &psi, const SpinLabel &label) {
  SensingReport report;
  report.covariance = covariance_matrix(psi, label);
  report.trace_cov = report.covariance.trace();
  report.scs = scs_pure(psi, label);
  report.axis_mean_qfi = axis_averaged_qfi(psi, label);
  report.axis_mean_crb = axis_averaged_crb(psi, label);
  report.bound = multiparameter_bound(psi, label);
  const Eigen::Matrix3d cov = report.covariance;
  report.qfi_of_axis = [cov](const Eigen::Vector3d &axis) {
    const double norm = axis.norm();
    if (std::abs(norm - 1.0) > 1e-9) {
      throw ValidationError("qfi handle: axis must be a unit vector");
    }
    return 4.0 * axis.dot(cov * axis);
  };
  return report;
}

} // namespace scs
