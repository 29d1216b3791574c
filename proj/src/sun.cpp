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

#include "scs/sun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unsupported/Eigen/KroneckerProduct>

#include "scs/errors.hpp"
#include "scs/linalg.hpp"
#include "scs/random_states.hpp"

namespace scs {

namespace {

void require_state(const Matrix &rho, const IrrepLabel &label) {
  if (rho.rows() != label.dimension() || rho.cols() != label.dimension()) {
    throw ValidationError("operator dimension does not match the irrep");
  }
}

} // namespace

IrrepLabel::IrrepLabel(int n_in, int big_n_in) : n(n_in), big_n(big_n_in) {
  if (n < 2) {
    throw ValidationError("IrrepLabel: need n >= 2 modes");
  }
  if (big_n < 1) {
    throw ValidationError("IrrepLabel: need N >= 1 excitations");
  }
}

Eigen::Index IrrepLabel::dimension() const {
  // binom(N + n - 1, n - 1) with intermediate products kept exact.
  unsigned long long value = 1;
  for (int k = 1; k <= n - 1; ++k) {
    value = value * static_cast<unsigned long long>(big_n + k) /
            static_cast<unsigned long long>(k);
    if (value > (1ull << 31)) {
      throw ValidationError("irrep dimension exceeds the supported range");
    }
  }
  return static_cast<Eigen::Index>(value);
}

double IrrepLabel::casimir() const {
  const double nn = n;
  const double bn = big_n;
  return bn * (bn + nn) * (nn - 1.0) / (2.0 * nn);
}

double IrrepLabel::coherence_scale() const {
  return static_cast<double>(big_n) * (n - 1) / 2.0;
}

FockBasis::FockBasis(const IrrepLabel &label) {
  std::vector<int> occ(static_cast<std::size_t>(label.n), 0);
  // Depth-first with the leading mode counted down enumerates occupation
  // vectors in lexicographically decreasing order.
  std::vector<std::vector<int>> out;
  std::function<void(int, int)> fill = [&](int mode, int remaining) {
    if (mode == label.n - 1) {
      occ[static_cast<std::size_t>(mode)] = remaining;
      out.push_back(occ);
      return;
    }
    for (int m = remaining; m >= 0; --m) {
      occ[static_cast<std::size_t>(mode)] = m;
      fill(mode + 1, remaining - m);
    }
  };
  fill(0, label.big_n);
  states_ = std::move(out);
  if (static_cast<Eigen::Index>(states_.size()) != label.dimension()) {
    throw ValidationError("Fock basis enumeration does not match the dimension");
  }
}

Eigen::Index FockBasis::index_of(const std::vector<int> &occ) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == occ) {
      return static_cast<Eigen::Index>(i);
    }
  }
  return -1;
}

std::vector<Matrix> transition_operators(const IrrepLabel &label) {
  const FockBasis basis(label);
  const Eigen::Index dim = basis.size();
  std::vector<Matrix> ops(static_cast<std::size_t>(label.n) *
                              static_cast<std::size_t>(label.n),
                          Matrix::Zero(dim, dim));
  for (Eigen::Index col = 0; col < dim; ++col) {
    const std::vector<int> &m = basis.occupation(col);
    for (int i = 0; i < label.n; ++i) {
      for (int j = 0; j < label.n; ++j) {
        Matrix &op = ops[static_cast<std::size_t>(i) *
                             static_cast<std::size_t>(label.n) +
                         static_cast<std::size_t>(j)];
        if (i == j) {
          op(col, col) = static_cast<double>(m[static_cast<std::size_t>(i)]);
          continue;
        }
        if (m[static_cast<std::size_t>(j)] == 0) {
          continue;
        }
        std::vector<int> shifted = m;
        shifted[static_cast<std::size_t>(j)] -= 1;
        shifted[static_cast<std::size_t>(i)] += 1;
        const Eigen::Index row = basis.index_of(shifted);
        const double amp = std::sqrt(
            static_cast<double>(m[static_cast<std::size_t>(j)]) *
            (m[static_cast<std::size_t>(i)] + 1.0));
        op(row, col) = amp;
      }
    }
  }
  return ops;
}

GeneratorSet sun_generators(const IrrepLabel &label) {
  const std::vector<Matrix> hop = transition_operators(label);
  auto e = [&](int i, int j) -> const Matrix & {
    return hop[static_cast<std::size_t>(i) * static_cast<std::size_t>(label.n) +
               static_cast<std::size_t>(j)];
  };

  GeneratorSet gens;
  gens.ops.reserve(static_cast<std::size_t>(label.generator_count()));
  for (int i = 0; i < label.n; ++i) {
    for (int j = i + 1; j < label.n; ++j) {
      gens.ops.push_back(0.5 * (e(i, j) + e(j, i)));
    }
  }
  const Complex half_over_i(0.0, -0.5);
  for (int i = 0; i < label.n; ++i) {
    for (int j = i + 1; j < label.n; ++j) {
      gens.ops.push_back(half_over_i * (e(i, j) - e(j, i)));
    }
  }
  for (int k = 2; k <= label.n; ++k) {
    const double norm = 1.0 / std::sqrt(2.0 * k * (k - 1.0));
    Matrix cartan = norm * (1.0 - k) * e(k - 1, k - 1);
    for (int i = 0; i < k - 1; ++i) {
      cartan += norm * e(i, i);
    }
    gens.ops.push_back(cartan);
  }
  return gens;
}

double casimir_residual(const IrrepLabel &label, const GeneratorSet &gens) {
  const Eigen::Index dim = label.dimension();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix &j : gens.ops) {
    sum += j * j;
  }
  sum -= label.casimir() * Matrix::Identity(dim, dim);
  return sum.cwiseAbs().maxCoeff();
}

double sun_casimir(const IrrepLabel &label) {
  const GeneratorSet gens = sun_generators(label);
  if (casimir_residual(label, gens) > 1e-10) {
    throw ValidationError("generator set fails the Casimir identity");
  }
  return label.casimir();
}

double scs_sun(const DensityMatrix &rho, const IrrepLabel &label) {
  require_state(rho.entries(), label);
  const double purity = rho.purity();
  if (purity <= 1e-14) {
    throw DegenerateStateError("state purity is too small for the coherence ratio");
  }
  const GeneratorSet gens = sun_generators(label);
  double cross = 0.0;
  for (const Matrix &j : gens.ops) {
    const Matrix m = j * rho.entries();
    cross += trace_product(m, m).real();
  }
  const double scale = label.coherence_scale();
  return label.casimir() / scale - cross / (scale * purity);
}

StateVector sun_coherent_state(const IrrepLabel &label, const Eigen::VectorXd &direction,
                               double theta) {
  if (direction.size() != label.generator_count()) {
    throw ValidationError("direction must have n^2 - 1 components");
  }
  if (std::abs(direction.norm() - 1.0) > 1e-9) {
    throw ValidationError("direction must be a unit vector");
  }
  const GeneratorSet gens = sun_generators(label);
  const Eigen::Index dim = label.dimension();
  Matrix h = Matrix::Zero(dim, dim);
  for (int i = 0; i < label.generator_count(); ++i) {
    h += direction(i) * gens[i];
  }
  Vector reference = Vector::Zero(dim);
  reference(0) = 1.0;
  return StateVector(hermitian_phase_exp(h, theta) * reference);
}

Matrix lift_unitary(const IrrepLabel &label, const Matrix &u) {
  if (u.rows() != label.n || u.cols() != label.n) {
    throw ValidationError("unitary dimension does not match the mode count");
  }
  // One-body logarithm: u = Q diag(e^{i phi}) Q^dag => h = Q diag(phi) Q^dag,
  // shifted traceless. The shift changes the lift by a global phase only.
  // Schur keeps the basis orthonormal even for degenerate eigenvalues.
  Eigen::ComplexSchur<Matrix> schur(u);
  Matrix h = Matrix::Zero(label.n, label.n);
  for (int i = 0; i < label.n; ++i) {
    const double phase = std::arg(schur.matrixT()(i, i));
    h += phase * schur.matrixU().col(i) * schur.matrixU().col(i).adjoint();
  }
  const Complex mean_phase = h.trace() / static_cast<double>(label.n);
  h -= mean_phase * Matrix::Identity(label.n, label.n);

  // Coefficients in the generator basis of the fundamental rep, where
  // Tr[J_i J_j] = delta_ij / 2.
  const IrrepLabel fundamental(label.n, 1);
  const GeneratorSet fund = sun_generators(fundamental);
  const GeneratorSet irrep = sun_generators(label);
  const Eigen::Index dim = label.dimension();
  Matrix lifted_h = Matrix::Zero(dim, dim);
  for (int i = 0; i < label.generator_count(); ++i) {
    const double c = 2.0 * trace_product(h, fund[i]).real();
    lifted_h += c * irrep[i];
  }
  return hermitian_phase_exp(lifted_h, 1.0);
}

StateVector random_coherent_state(const IrrepLabel &label, Rng &rng) {
  const Matrix u = haar_special_unitary(label.n, rng);
  const Matrix lifted = lift_unitary(label, u);
  Vector reference = Vector::Zero(label.dimension());
  reference(0) = 1.0;
  return StateVector(lifted * reference);
}

Matrix single_particle_dm(const StateVector &psi, const IrrepLabel &label) {
  if (psi.amplitudes().size() != label.dimension()) {
    throw ValidationError("state dimension does not match the irrep");
  }
  const std::vector<Matrix> hop = transition_operators(label);
  Matrix spdm(label.n, label.n);
  const Vector &v = psi.amplitudes();
  for (int i = 0; i < label.n; ++i) {
    for (int j = 0; j < label.n; ++j) {
      const Matrix &op = hop[static_cast<std::size_t>(j) *
                                 static_cast<std::size_t>(label.n) +
                             static_cast<std::size_t>(i)];
      spdm(i, j) = v.dot(op * v) / static_cast<double>(label.big_n);
    }
  }
  return spdm;
}

double sun_classical_bound_check(const IrrepLabel &label, int num_components,
                                 std::uint64_t seed, int num_samples) {
  if (num_components < 1) {
    throw ValidationError("need at least one mixture component");
  }
  if (num_samples < 1) {
    throw ValidationError("need at least one sample");
  }
  Rng rng(seed);
  const Eigen::Index dim = label.dimension();
  double worst = 0.0;
  for (int s = 0; s < num_samples; ++s) {
    const std::vector<double> weights = rng.dirichlet(num_components);
    Matrix rho = Matrix::Zero(dim, dim);
    for (int c = 0; c < num_components; ++c) {
      const StateVector psi = random_coherent_state(label, rng);
      rho += weights[static_cast<std::size_t>(c)] * psi.amplitudes() *
             psi.amplitudes().adjoint();
    }
    worst = std::max(worst, scs_sun(DensityMatrix(rho), label));
  }
  return worst;
}

Matrix sun_depol_rhs(const Matrix &rho, const IrrepLabel &label) {
  require_state(rho, label);
  const GeneratorSet gens = sun_generators(label);
  const Eigen::Index dim = label.dimension();
  Matrix out = Matrix::Zero(dim, dim);
  for (const Matrix &j : gens.ops) {
    const Matrix inner = j * rho - rho * j;
    out -= 0.5 * (j * inner - inner * j);
  }
  return out;
}

DensityMatrix sun_evolve(const DensityMatrix &rho, const IrrepLabel &label,
                         ChannelTime time) {
  require_state(rho.entries(), label);
  const GeneratorSet gens = sun_generators(label);
  const Eigen::Index dim = label.dimension();
  const Matrix id = Matrix::Identity(dim, dim);

  // Column-major vectorization: vec(A X B) = (B^T kron A) vec(X). The
  // double-commutator superoperator is Hermitian and negative semidefinite,
  // so a spectral exponential is exact and stable.
  Matrix super = Matrix::Zero(dim * dim, dim * dim);
  for (const Matrix &j : gens.ops) {
    const Matrix j2 = j * j;
    super -= 0.5 * Eigen::kroneckerProduct(id, j2).eval();
    super -= 0.5 * Eigen::kroneckerProduct(j2.transpose(), id).eval();
    super += Eigen::kroneckerProduct(j.transpose(), j).eval();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(super);
  Vector vec_rho = Eigen::Map<const Vector>(rho.entries().data(), dim * dim);
  Vector coeffs = eig.eigenvectors().adjoint() * vec_rho;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::exp(time.t * eig.eigenvalues()(k));
  }
  Vector evolved = eig.eigenvectors() * coeffs;
  Matrix out = Eigen::Map<const Matrix>(evolved.data(), dim, dim);
  // Rounding in the spectral transform leaves a ~1e-16 skew; symmetrize so
  // the DensityMatrix invariants see an exactly Hermitian matrix.
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(out);
}

FundamentalEquivalence fundamental_equivalence_check(int n, std::uint64_t seed) {
  const IrrepLabel label(n, 1);
  const GeneratorSet gens = sun_generators(label);
  const Matrix id = Matrix::Identity(n, n);
  Rng rng(seed);

  FundamentalEquivalence report;
  report.rate_residual =
      std::abs(label.casimir() + 0.5 / n - 0.5 * n);

  const double times[] = {0.1, 0.5, 2.0};
  for (int s = 0; s < 5; ++s) {
    const DensityMatrix rho = ginibre_state(n, rng);
    Matrix twirl = Matrix::Zero(n, n);
    for (const Matrix &j : gens.ops) {
      twirl += j * rho.entries() * j;
    }
    const Matrix identity_gap =
        twirl - (0.5 * id - rho.entries() / (2.0 * n));
    report.identity_residual =
        std::max(report.identity_residual, identity_gap.cwiseAbs().maxCoeff());

    for (double t : times) {
      const DensityMatrix evolved = sun_evolve(rho, label, ChannelTime(t));
      const double p = 1.0 - std::exp(-0.5 * n * t);
      const Matrix closed_form =
          (1.0 - p) * rho.entries() + p / n * id;
      const double gap =
          (evolved.entries() - closed_form).cwiseAbs().maxCoeff();
      report.flow_residual = std::max(report.flow_residual, gap);
    }
  }
  report.pass = report.identity_residual < 1e-10 &&
                report.flow_residual < 1e-10 && report.rate_residual < 1e-10;
  return report;
}

double scs_sun_invariance_check(const DensityMatrix &rho, const IrrepLabel &label,
                                int num_unitaries, std::uint64_t seed) {
  require_state(rho.entries(), label);
  if (num_unitaries < 1) {
    throw ValidationError("need at least one unitary");
  }
  Rng rng(seed);
  const double baseline = scs_sun(rho, label);
  double worst = 0.0;
  for (int k = 0; k < num_unitaries; ++k) {
    const Matrix u = lift_unitary(label, haar_special_unitary(label.n, rng));
    const Matrix rotated = u * rho.entries() * u.adjoint();
    const double value = scs_sun(DensityMatrix(0.5 * (rotated + rotated.adjoint())), label);
    worst = std::max(worst, std::abs(value - baseline));
  }
  return worst;
}

} // namespace scs
