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

#ifndef SCS_QUASIPROB_HPP
#define SCS_QUASIPROB_HPP

#include <iosfwd>
#include <memory>
#include <vector>

#include "scs/channel.hpp"
#include "scs/types.hpp"

namespace scs {

/// Product quadrature over the sphere: Gauss-Legendre in cos(theta) times a
/// uniform trapezoid in phi. Exact for spherical-harmonic products up to
/// combined degree 2 n_theta - 1 (and |q| difference up to n_phi - 1), with
/// weights summing to 4 pi.
struct SphereGrid {
  int n_theta = 0;
  int n_phi = 0;
  /// Distinct nodes: theta ascending, phi = 2 pi j / n_phi.
  std::vector<double> theta_nodes;
  std::vector<double> phi_nodes;
  /// Flattened row-major over (theta, phi): node k = i * n_phi + j.
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> weight;

  std::size_t size() const { return theta.size(); }
};

/// Build a grid; n_theta, n_phi >= 1.
std::shared_ptr<const SphereGrid> make_sphere_grid(int n_theta, int n_phi);

/// The default band-limit-exact grid for spin J: n_theta = 2J+2,
/// n_phi = 4J+3 (integrands are degree <= 2J each).
std::shared_ptr<const SphereGrid> standard_sphere_grid(const SpinLabel &label);

/// Real-valued quasiprobability samples on a grid at ordering parameter s.
struct SphereField {
  std::shared_ptr<const SphereGrid> grid;
  Eigen::VectorXd values;
  double order_s = 0.0;
  /// Some multipole coefficient exceeded 1e12 after the (C)^{-s} scaling.
  bool amplified = false;
  /// |s| > 1 was requested.
  bool nonstandard_order = false;
};

/// Orthonormal spherical harmonic Y_Kq(theta, phi) with Condon-Shortley
/// phase; stable for K up to about 80.
Complex spherical_harmonic(int k, int q, double theta, double phi);

/// s-ordered distribution of a state:
/// W^(s)(Omega) = sqrt(4pi/(2J+1)) sum_Kq (C^{JJ}_{JJ,K0})^{-s} rho_Kq Y_Kq.
/// s = -1 is the Husimi function, s = +1 the P function, s = 0 Wigner.
/// (The opposite sign convention for s also appears in the literature; this
/// library fixes s = -1 Husimi, s = +1 P throughout.)
SphereField wigner_s(const DensityMatrix &rho, const SpinLabel &label, double s,
                     std::shared_ptr<const SphereGrid> grid);

/// Same map applied to an arbitrary Hermitian operator on the irrep.
SphereField wigner_field(const Matrix &op, const SpinLabel &label, double s,
                         std::shared_ptr<const SphereGrid> grid);

/// Same map from precomputed multipoles.
SphereField wigner_from_table(const MultipoleTable &table, const SpinLabel &label,
                              double s, std::shared_ptr<const SphereGrid> grid);

/// Overlap integral (2J+1)/4pi sum_k w_k A_k B_k for fields at opposite
/// orders; reproduces Tr(AB).
double overlap(const SphereField &a, const SphereField &b, const SpinLabel &label);

/// Exact ln C^{JJ}_{JJ,K0} through the closed binomial form
/// (1/2) ln [ binom(4J+1, 2J-K) / binom(4J+1, 2J) ].
double log_cg_top(const SpinLabel &label, int k);

struct CgAsymptotics {
  double exact = 0.0;        // ln C^{JJ}_{JJ,K0}
  double first_order = 0.0;  // -K(K+1)/(4J)
  double second_order = 0.0; // -K(K+1)(2J-1)/(8J^2)
};

/// Exact top-coefficient logarithm next to its large-J expansions.
CgAsymptotics cg_asymptotics(const SpinLabel &label, int k);

struct ShiftCheck {
  /// max over the grid of |W^(s)_{rho(t)} - W^(s-4t)_rho|.
  double deviation = 0.0;
  /// Same with the improved shift s - 4tJ/(J-1/2); NaN at J = 1/2.
  double deviation_improved = 0.0;
  /// max over the grid of |W^(s)_{rho(t)} - W^(s)_rho|: the size of the
  /// evolution effect the order shift approximates. deviation / effect_scale
  /// is the dimensionless quality of the approximation; for single-multipole
  /// states it is about 1/(2J), independent of the multipole amplitude and of
  /// the grid.
  double effect_scale = 0.0;
};

/// Pointwise quality of the order-shift approximation of channel evolution.
ShiftCheck s_shift_check(const DensityMatrix &rho, const SpinLabel &label, double s,
                         ChannelTime time, std::shared_ptr<const SphereGrid> grid);

struct QuasiprobScs {
  double value = 0.0;
  /// No K >= 1 multipole weight (maximally mixed input).
  bool degenerate = false;
};

/// A^2 as a ratio of overlap integrals,
/// -(1/2) int W^(-s)_rho W^(s)_{rhs(rho)} / int W^(-s)_rho W^(s)_rho,
/// with the depolarization generator supplying the numerator field.
QuasiprobScs scs_quasiprob(const DensityMatrix &rho, const SpinLabel &label, double s,
                           std::shared_ptr<const SphereGrid> grid);

/// CSV serialization: header theta,phi,weight,value; row-major over
/// (theta, phi); 17 significant digits.
void write_csv(const SphereField &field, std::ostream &out);

} // namespace scs

#endif // SCS_QUASIPROB_HPP
