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

#include "scs/spin.hpp"

#include <cmath>

#include "scs/linalg.hpp"

namespace scs {

namespace {

constexpr double half_pi = 1.5707963267948966192313216916398;

Matrix j_dot_n(const SpinLabel &label, const Eigen::Vector3d &n) {
  const GeneratorSet gens = angular_momentum_ops(label);
  return n(0) * gens[0] + n(1) * gens[1] + n(2) * gens[2];
}

} // namespace

GeneratorSet angular_momentum_ops(const SpinLabel &label) {
  const int dim = label.dimension();
  const double j = label.j();
  Matrix jp = Matrix::Zero(dim, dim);
  // Row index k holds m = J - k. J+ connects |J,m> to |J,m+1>.
  for (int k = 1; k < dim; ++k) {
    const double m = j - static_cast<double>(k);
    jp(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Matrix jm = jp.adjoint();
  GeneratorSet gens;
  gens.ops.resize(3);
  gens.ops[0] = 0.5 * (jp + jm);
  gens.ops[1] = Complex(0.0, -0.5) * (jp - jm);
  Matrix j3 = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    j3(k, k) = j - static_cast<double>(k);
  }
  gens.ops[2] = j3;
  return gens;
}

Matrix rotation_unitary(const SpinLabel &label, const RotationSpec &rot) {
  return hermitian_phase_exp(j_dot_n(label, rot.axis), rot.theta);
}

std::vector<StateVector> eigenbasis(const SpinLabel &label, int axis_index) {
  if (axis_index < 1 || axis_index > 3) {
    throw ValidationError("eigenbasis: axis index must be 1, 2 or 3");
  }
  const int dim = label.dimension();
  Matrix basis;
  switch (axis_index) {
  case 1:
    // exp(-i (pi/2) J2) maps J3 eigenvectors to J1 eigenvectors with the
    // same eigenvalue.
    basis = rotation_unitary(label, RotationSpec(-half_pi, Eigen::Vector3d(0, 1, 0)));
    break;
  case 2:
    // exp(+i (pi/2) J1) maps J3 eigenvectors to J2 eigenvectors likewise.
    basis = rotation_unitary(label, RotationSpec(half_pi, Eigen::Vector3d(1, 0, 0)));
    break;
  default:
    basis = Matrix::Identity(dim, dim);
    break;
  }
  std::vector<StateVector> vecs;
  vecs.reserve(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    Vector v = basis.col(k);
    v /= v.norm();
    vecs.emplace_back(std::move(v));
  }
  return vecs;
}

StateVector spin_coherent_state(const SpinLabel &label, double theta, double phi) {
  if (theta < 0.0 || theta > 3.14159265358979323847) {
    throw ValidationError("spin_coherent_state: theta must lie in [0, pi]");
  }
  const int dim = label.dimension();
  Vector top = Vector::Zero(dim);
  top(0) = 1.0;
  if (theta == 0.0) {
    return StateVector(std::move(top));
  }
  // exp(-i theta J.m)|J,J> with the in-plane axis m = (-sin phi, cos phi, 0)
  // is the maximal eigenstate of J.n(theta, phi).
  const Eigen::Vector3d m(-std::sin(phi), std::cos(phi), 0.0);
  const Matrix r = rotation_unitary(label, RotationSpec(-theta, m));
  Vector v = r * top;
  v /= v.norm();
  return StateVector(std::move(v));
}

Eigen::Vector3d sphere_direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

} // namespace scs
