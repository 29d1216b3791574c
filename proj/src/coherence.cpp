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

#include "scs/coherence.hpp"

#include <cmath>

#include "scs/linalg.hpp"
#include "scs/rng.hpp"
#include "scs/spin.hpp"

namespace scs {

namespace {

void require_scale_defined(const SpinLabel &label, double purity, const char *where) {
  if (label.two_j == 0) {
    throw DomainError(std::string(where) + ": undefined at J = 0 (the 1/J normalization)");
  }
  if (purity <= 1e-14) {
    throw DegenerateStateError(std::string(where) + ": purity below the 1e-14 floor");
  }
}

void require_dim(const DensityMatrix &rho, const SpinLabel &label, const char *where) {
  if (rho.dim() != label.dimension()) {
    throw ValidationError(std::string(where) + ": state dimension does not match the label");
  }
}

} // namespace

double scs_offdiagonal(const DensityMatrix &rho, const SpinLabel &label) {
  require_dim(rho, label, "scs_offdiagonal");
  const double purity = rho.purity();
  require_scale_defined(label, purity, "scs_offdiagonal");
  const int dim = label.dimension();
  const double j = label.j();

  double total = 0.0;
  for (int axis = 1; axis <= 3; ++axis) {
    Matrix coherences;
    if (axis == 3) {
      coherences = rho.entries();
    } else {
      const std::vector<StateVector> basis = eigenbasis(label, axis);
      Matrix b(dim, dim);
      for (int k = 0; k < dim; ++k) {
        b.col(k) = basis[static_cast<std::size_t>(k)].amplitudes();
      }
      coherences = b.adjoint() * rho.entries() * b;
    }
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        const double dm = static_cast<double>(r - c); // m_r - m_c = (J-r)-(J-c)
        total += dm * dm * std::norm(coherences(r, c));
      }
    }
  }
  return total / (2.0 * j * purity);
}

double scs_commutator(const DensityMatrix &rho, const SpinLabel &label) {
  require_dim(rho, label, "scs_commutator");
  const double purity = rho.purity();
  require_scale_defined(label, purity, "scs_commutator");
  const GeneratorSet gens = angular_momentum_ops(label);

  // [rho, J_i][J_i, rho] = C^dag C for C = [J_i, rho], so each summand is a
  // squared Frobenius norm.
  double total = 0.0;
  for (const Matrix &ji : gens.ops) {
    const Matrix c = ji * rho.entries() - rho.entries() * ji;
    total += c.squaredNorm();
  }
  return total / (2.0 * label.j() * purity);
}

double scs_simple(const DensityMatrix &rho, const SpinLabel &label) {
  require_dim(rho, label, "scs_simple");
  const double purity = rho.purity();
  require_scale_defined(label, purity, "scs_simple");
  const GeneratorSet gens = angular_momentum_ops(label);
  const double j = label.j();

  double overlap = 0.0;
  for (const Matrix &ji : gens.ops) {
    const Matrix m = ji * rho.entries();
    overlap += trace_product(m, m).real();
  }
  return j + 1.0 - overlap / (j * purity);
}

double scs_pure(const StateVector &psi, const SpinLabel &label) {
  if (psi.dim() != label.dimension()) {
    throw ValidationError("scs_pure: state dimension does not match the label");
  }
  if (label.two_j == 0) {
    throw DomainError("scs_pure: undefined at J = 0 (the 1/J normalization)");
  }
  const GeneratorSet gens = angular_momentum_ops(label);
  double variance_sum = 0.0;
  for (const Matrix &ji : gens.ops) {
    const Vector v = ji * psi.amplitudes();
    const double mean = (psi.amplitudes().adjoint() * v)(0).real();
    variance_sum += v.squaredNorm() - mean * mean;
  }
  return variance_sum / label.j();
}

CoherenceReport witness(const DensityMatrix &rho, const SpinLabel &label) {
  CoherenceReport report;
  report.scs = std::max(scs_commutator(rho, label), 0.0);
  report.purity = rho.purity();
  report.witness_quantum = report.scs > 1.0;
  report.distance_upper = std::sqrt(report.scs);
  report.distance_lower = std::max(report.distance_upper - 1.0, 0.0);
  return report;
}

DensityMatrix classical_sample(const SpinLabel &label, int num_components,
                               std::uint64_t seed) {
  if (num_components < 1) {
    throw ValidationError("classical_sample: need at least one component");
  }
  Rng rng(seed);
  const std::vector<double> weights = rng.dirichlet(num_components);
  const int dim = label.dimension();
  Matrix mix = Matrix::Zero(dim, dim);
  for (int k = 0; k < num_components; ++k) {
    double theta = 0.0;
    double phi = 0.0;
    rng.sphere_point(theta, phi);
    const StateVector omega = spin_coherent_state(label, theta, phi);
    mix += weights[static_cast<std::size_t>(k)] *
           (omega.amplitudes() * omega.amplitudes().adjoint());
  }
  mix /= mix.trace().real();
  return DensityMatrix(std::move(mix));
}

CoherencePair coherent_pair_inequality(const SpinLabel &label, double theta1,
                                       double phi1, double theta2, double phi2) {
  const StateVector omega1 = spin_coherent_state(label, theta1, phi1);
  const StateVector omega2 = spin_coherent_state(label, theta2, phi2);
  const GeneratorSet gens = angular_momentum_ops(label);
  CoherencePair pair;
  for (const Matrix &ji : gens.ops) {
    pair.lhs += std::norm((omega1.amplitudes().adjoint() * (ji * omega2.amplitudes()))(0));
  }
  const Complex ov = (omega1.amplitudes().adjoint() * omega2.amplitudes())(0);
  pair.rhs = label.j() * label.j() * std::norm(ov);
  return pair;
}

Complex coherence_inner_product(const Matrix &a, const Matrix &b, const SpinLabel &label) {
  if (label.two_j == 0) {
    throw DomainError("coherence_inner_product: undefined at J = 0");
  }
  if (a.rows() != label.dimension() || a.rows() != a.cols() || b.rows() != b.cols() ||
      b.rows() != label.dimension()) {
    throw ValidationError("coherence_inner_product: dimension mismatch");
  }
  const GeneratorSet gens = angular_momentum_ops(label);
  Complex total(0.0, 0.0);
  for (const Matrix &ji : gens.ops) {
    const Matrix ca = ji * a - a * ji;
    const Matrix cb = ji * b - b * ji;
    // Tr([A^dag, J_i][J_i, B]) = Tr([J_i, A]^dag [J_i, B]).
    total += ca.conjugate().cwiseProduct(cb).sum();
  }
  return total / (2.0 * label.j());
}

double coherence_norm(const Matrix &a, const SpinLabel &label) {
  return std::sqrt(std::max(coherence_inner_product(a, a, label).real(), 0.0));
}

Matrix purity_normalized(const DensityMatrix &rho) {
  return rho.entries() / std::sqrt(rho.purity());
}

} // namespace scs
