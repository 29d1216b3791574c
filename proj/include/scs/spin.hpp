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

#ifndef SCS_SPIN_HPP
#define SCS_SPIN_HPP

#include <vector>

#include "scs/types.hpp"

namespace scs {

/// Angular momentum operators (J1, J2, J3) on the spin-J irrep in the Dicke
/// basis: J3 diagonal with entries J, J-1, ..., -J; J1 and J2 from the
/// standard ladder operators J+- with <J,m+-1|J+-|J,m> = sqrt(J(J+1)-m(m+-1)).
GeneratorSet angular_momentum_ops(const SpinLabel &label);

/// Rotation R(theta, n) = exp(i theta J.n), computed spectrally. Unitary.
Matrix rotation_unitary(const SpinLabel &label, const RotationSpec &rot);

/// Eigenbasis of J_axis (axis_index in {1,2,3}), ordered by descending
/// eigenvalue m. Built by rotating the Dicke basis, never by a numerical
/// eigensolver, so the vector phases are deterministic.
std::vector<StateVector> eigenbasis(const SpinLabel &label, int axis_index);

/// Spin coherent state |Omega(theta, phi)>: the maximal eigenstate of
/// J.n(theta, phi), realized by rotating |J, J>.
StateVector spin_coherent_state(const SpinLabel &label, double theta, double phi);

/// Cartesian unit vector for polar angles (theta, phi).
Eigen::Vector3d sphere_direction(double theta, double phi);

} // namespace scs

#endif // SCS_SPIN_HPP
