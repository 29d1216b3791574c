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

#ifndef SCS_SUN_HPP
#define SCS_SUN_HPP

#include <cstdint>
#include <vector>

#include "scs/channel.hpp"
#include "scs/rng.hpp"
#include "scs/types.hpp"

namespace scs {

/// Symmetric irrep of SU(n): N excitations shared among n modes.
struct IrrepLabel {
  int n = 2;
  int big_n = 1;

  IrrepLabel(int n_in, int big_n_in);

  /// binom(N + n - 1, n - 1), computed exactly.
  Eigen::Index dimension() const;
  /// Number of generators, n^2 - 1.
  int generator_count() const { return n * n - 1; }
  /// Casimir eigenvalue C_n(N) = N(N+n)(n-1)/(2n).
  double casimir() const;
  /// Normalization scale for the coherence ratio, N(n-1)/2.
  double coherence_scale() const;
};

/// Occupation-number basis of the symmetric irrep, lexicographically
/// decreasing, so |N, 0, ..., 0> sits at index 0.
class FockBasis {
public:
  explicit FockBasis(const IrrepLabel &label);

  Eigen::Index size() const { return static_cast<Eigen::Index>(states_.size()); }
  const std::vector<int> &occupation(Eigen::Index idx) const {
    return states_[static_cast<std::size_t>(idx)];
  }
  /// Index of an occupation vector; -1 when it does not belong to the irrep.
  Eigen::Index index_of(const std::vector<int> &occ) const;

private:
  std::vector<std::vector<int>> states_;
};

/// Hopping operators a_i^dag a_j on the irrep, indexed [i * n + j].
std::vector<Matrix> transition_operators(const IrrepLabel &label);

/// The n^2 - 1 Hermitian generators on the symmetric irrep, ordered as the
/// symmetric family (a_i^dag a_j + a_j^dag a_i)/2 for i < j, then the
/// antisymmetric family (a_i^dag a_j - a_j^dag a_i)/2i, then the n - 1
/// diagonal Cartan generators. For n = 2 these are exactly the spin-J
/// matrices with J = N/2; for N = 1 they are the generalized Gell-Mann
/// matrices halved.
GeneratorSet sun_generators(const IrrepLabel &label);

/// Casimir eigenvalue from the closed formula; verifies that the generator
/// sum of squares is that multiple of the identity on the irrep.
double sun_casimir(const IrrepLabel &label);

/// Max-norm residual of sum_i J_i^2 - C_n(N) I for a prebuilt generator set.
double casimir_residual(const IrrepLabel &label, const GeneratorSet &gens);

/// SU(n) coherence scale
/// C_n(N)/scale - sum_i Tr(J_i rho J_i rho) / (scale * purity),
/// with scale = N(n-1)/2. Equals 1 on generalized coherent states, 0 on the
/// maximally mixed state.
double scs_sun(const DensityMatrix &rho, const IrrepLabel &label);

/// exp(i theta J . c) |N, 0, ..., 0> for a unit coefficient vector c over
/// the generator basis.
StateVector sun_coherent_state(const IrrepLabel &label, const Eigen::VectorXd &direction,
                               double theta);

/// Haar-random generalized coherent state: a Haar SU(n) element lifted to
/// the irrep and applied to |N, 0, ..., 0>.
StateVector random_coherent_state(const IrrepLabel &label, Rng &rng);

/// Lift a special unitary u on C^n to the symmetric irrep through the
/// generator map (second quantization of the one-body logarithm).
Matrix lift_unitary(const IrrepLabel &label, const Matrix &u);

/// Single-particle reduced density matrix <a_j^dag a_i> / N, the index
/// order that transforms as u rdm u^dag under a lifted unitary; rank one
/// exactly on generalized coherent states.
Matrix single_particle_dm(const StateVector &psi, const IrrepLabel &label);

/// Largest scs_sun over random convex mixtures of num_components Haar
/// coherent states; classicality keeps the result at or below 1.
double sun_classical_bound_check(const IrrepLabel &label, int num_components,
                                 std::uint64_t seed, int num_samples = 100);

/// Isotropic depolarization generator -(1/2) sum_i [J_i, [J_i, rho]].
Matrix sun_depol_rhs(const Matrix &rho, const IrrepLabel &label);

/// Evolve under the depolarization semigroup by spectral exponential of the
/// (Hermitian, negative semidefinite) superoperator.
DensityMatrix sun_evolve(const DensityMatrix &rho, const IrrepLabel &label,
                         ChannelTime time);

struct FundamentalEquivalence {
  /// Max residual of sum_i J_i rho J_i = I/2 - rho/(2n) over sampled states.
  double identity_residual = 0.0;
  /// Max deviation of the channel flow from (1-p) rho + p I/n with
  /// p(t) = 1 - exp(-n t / 2), over sampled states and times.
  double flow_residual = 0.0;
  /// |C_n(1) + 1/(2n) - n/2|.
  double rate_residual = 0.0;
  bool pass = false;
};

/// On the fundamental irrep (N = 1) the isotropic channel is plain
/// depolarization with initial mixing rate n/2; this measures all three
/// fingerprints of that statement.
FundamentalEquivalence fundamental_equivalence_check(int n, std::uint64_t seed = 20260819);

/// Max |scs_sun(U rho U^dag) - scs_sun(rho)| over Haar-lifted unitaries.
double scs_sun_invariance_check(const DensityMatrix &rho, const IrrepLabel &label,
                                int num_unitaries, std::uint64_t seed);

} // namespace scs

#endif // SCS_SUN_HPP
