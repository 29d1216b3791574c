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

#ifndef SCS_CHANNEL_HPP
#define SCS_CHANNEL_HPP

#include <vector>

#include "scs/types.hpp"

namespace scs {

/// Dimensionless depolarization-channel time, in units of the decay rate.
struct ChannelTime {
  double t;

  explicit ChannelTime(double t_in) : t(t_in) {
    if (!(t >= 0.0)) {
      throw ValidationError("ChannelTime: t must be nonnegative");
    }
  }
};

/// Spherical-tensor (multipole) coefficients rho_Kq = Tr(rho T_Kq^dag),
/// indexed by 0 <= K <= 2J, |q| <= K.
class MultipoleTable {
public:
  explicit MultipoleTable(int two_j);

  int two_j() const { return two_j_; }
  int max_k() const { return two_j_; }

  Complex at(int k, int q) const { return c_[index(k, q)]; }
  void set(int k, int q, Complex value) { c_[index(k, q)] = value; }

  /// Per-K power a_K = sum_q |rho_Kq|^2.
  std::vector<double> k_powers() const;

private:
  std::size_t index(int k, int q) const;

  int two_j_;
  std::vector<Complex> c_;
};

/// Spherical tensor operator T_Kq on the spin-J irrep,
/// T_Kq = sqrt((2K+1)/(2J+1)) sum_m C^{J,m+q}_{Jm,Kq} |J,m+q><J,m|.
Matrix tensor_operator(const SpinLabel &label, int k, int q);

/// Multipole coefficients of a state (or, via the matrix overload, of any
/// operator on the irrep).
MultipoleTable decompose(const DensityMatrix &rho, const SpinLabel &label);
MultipoleTable decompose_operator(const Matrix &op, const SpinLabel &label);

/// Rebuild the matrix sum_Kq rho_Kq T_Kq; validates the result as a state.
DensityMatrix reconstruct(const MultipoleTable &table, const SpinLabel &label);
Matrix reconstruct_operator(const MultipoleTable &table, const SpinLabel &label);

/// Generator of the isotropic depolarization channel, normalized so that
/// every T_Kq is an eigenvector with eigenvalue -K(K+1)/J:
/// rhs(X) = -(1/J) sum_i [J_i, [J_i, X]]. Traceless, Hermiticity-preserving.
Matrix lindblad_rhs(const Matrix &op, const SpinLabel &label);

/// Analytic channel evolution: rho_Kq(t) = rho_Kq(0) exp(-K(K+1) t / J).
DensityMatrix evolve(const DensityMatrix &rho, const SpinLabel &label, ChannelTime time);

/// Purity along the channel, P(t) = sum_Kq |rho_Kq(0)|^2 exp(-2K(K+1)t/J).
std::vector<double> purity_trajectory(const DensityMatrix &rho, const SpinLabel &label,
                                      const std::vector<double> &times);

struct PurityScs {
  double value = 0.0;
  /// Set when the state carries no K >= 1 multipole weight (maximally
  /// mixed); the value 0 is then the correct limit, not a division result.
  bool degenerate = false;
};

/// Coherence scale of the evolved state read off the purity decay,
/// equal to scs_commutator(evolve(rho, t)). See the README on the
/// normalization of the purity log-derivative.
PurityScs scs_from_purity(const DensityMatrix &rho, const SpinLabel &label, ChannelTime time);

/// Signs of channel-time derivatives along the trajectory.
struct MonotonicityReport {
  std::vector<double> times;
  /// purity_derivatives[n][i] = d^n P / dt^n at times[i], n = 0..max_order.
  std::vector<std::vector<double>> purity_derivatives;
  /// d/dt of the scaled scale P(t) * A^2(t) at each time.
  std::vector<double> scaled_scs_derivative;
  /// A^2 along the trajectory.
  std::vector<double> scs_values;
  /// d^2 ln P / dt^2 at each time.
  std::vector<double> log_purity_curvature;

  bool completely_monotone = false;
  bool scaled_scs_nonincreasing = false;
  bool scs_nonincreasing = false;
  bool log_convex = false;
};

/// Analytic derivative table of the purity exponential sum; max_order <= 6.
MonotonicityReport monotonicity_report(const DensityMatrix &rho, const SpinLabel &label,
                                       int max_order, const std::vector<double> &times);

/// A^2 read directly from a multipole table:
/// (1/2J P) sum_Kq K(K+1) |rho_Kq|^2.
double scs_multipole(const MultipoleTable &table, const SpinLabel &label);

} // namespace scs

#endif // SCS_CHANNEL_HPP
