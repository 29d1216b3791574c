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

#ifndef SCS_COHERENCE_HPP
#define SCS_COHERENCE_HPP

#include <cstdint>

#include "scs/types.hpp"

namespace scs {

/// Spin coherence scale A^2 from eigenvalue-weighted off-diagonal coherences
/// over the three angular-momentum eigenbases:
/// (1/2JP) sum_i sum_{m,m'} (m - m')^2 |<Jm|rho|Jm'>_i|^2.
double scs_offdiagonal(const DensityMatrix &rho, const SpinLabel &label);

/// The same scale from commutators, (1/2JP) sum_i Tr([rho,J_i][J_i,rho]).
double scs_commutator(const DensityMatrix &rho, const SpinLabel &label);

/// The same scale in closed Casimir form,
/// J + 1 - sum_i Tr(J_i rho J_i rho) / (J P).
double scs_simple(const DensityMatrix &rho, const SpinLabel &label);

/// Pure-state reduction, (1/J) sum_i Var_psi(J_i).
double scs_pure(const StateVector &psi, const SpinLabel &label);

struct CoherenceReport {
  double scs = 0.0;
  double purity = 0.0;
  /// Strictly scs > 1; borderline states within rounding of 1 report false.
  bool witness_quantum = false;
  /// max(sqrt(scs) - 1, 0): lower bound on the distance to the classical set.
  double distance_lower = 0.0;
  /// sqrt(scs): upper bound on that distance.
  double distance_upper = 0.0;
};

/// Full nonclassicality report for a state.
CoherenceReport witness(const DensityMatrix &rho, const SpinLabel &label);

/// Convex mixture of spin coherent states with Dirichlet(1,...,1) weights
/// and Haar-uniform directions; deterministic for a fixed seed.
DensityMatrix classical_sample(const SpinLabel &label, int num_components,
                               std::uint64_t seed);

struct CoherencePair {
  double lhs = 0.0; // sum_i |<Omega1|J_i|Omega2>|^2
  double rhs = 0.0; // J^2 |<Omega1|Omega2>|^2
};

/// Both sides of the coherent-pair inequality lhs >= rhs.
CoherencePair coherent_pair_inequality(const SpinLabel &label, double theta1,
                                       double phi1, double theta2, double phi2);

/// Inner product (A, B) = (1/2J) sum_i Tr([A^dag, J_i][J_i, B]) under which
/// the purity-normalized state has squared norm A^2.
Complex coherence_inner_product(const Matrix &a, const Matrix &b, const SpinLabel &label);

/// Norm induced by coherence_inner_product.
double coherence_norm(const Matrix &a, const SpinLabel &label);

/// rho / sqrt(Tr rho^2), the unit-norm representative used in the distance
/// bounds.
Matrix purity_normalized(const DensityMatrix &rho);

} // namespace scs

#endif // SCS_COHERENCE_HPP
