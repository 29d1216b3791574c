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

// Acceptance gate for the library: eleven numbered end-to-end criteria, one
// PASS/FAIL line each, exit code equal to the number of failures. Every
// tolerance is stated inline next to the check it guards.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "scs/channel.hpp"
#include "scs/clebsch_gordan.hpp"
#include "scs/coherence.hpp"
#include "scs/linalg.hpp"
#include "scs/metrology.hpp"
#include "scs/quasiprob.hpp"
#include "scs/random_states.hpp"
#include "scs/rng.hpp"
#include "scs/spin.hpp"
#include "scs/sun.hpp"
#include "scs/types.hpp"
#include "test_support.hpp"

using namespace scs;

namespace {

struct Check {
  std::string name;
  std::function<bool(std::vector<std::string> &)> run;
};

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3g", v);
  return buffer;
}

DensityMatrix maximally_mixed(int dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

/// Purity of the depolarized state as an explicit exponential sum; unlike
/// purity_trajectory this accepts negative times, which the centered
/// difference at t = 0 needs.
double purity_curve(const std::vector<double> &k_powers, double j, double t) {
  double p = 0.0;
  for (std::size_t k = 0; k < k_powers.size(); ++k) {
    const double kk = static_cast<double>(k);
    p += k_powers[k] * std::exp(-2.0 * kk * (kk + 1.0) * t / j);
  }
  return p;
}

// 1. The three density-matrix definitions of the scale agree pairwise.
bool check_definitions(std::vector<std::string> &notes) {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int two_j = 1; two_j <= 12; ++two_j) {
    const SpinLabel label{two_j};
    Rng rng(1000 + static_cast<std::uint64_t>(two_j));
    for (int trial = 0; trial < 200; ++trial) {
      const DensityMatrix rho = ginibre_state(label.dimension(), rng);
      const double a = scs_offdiagonal(rho, label);
      const double b = scs_commutator(rho, label);
      const double c = scs_simple(rho, label);
      worst = std::max({worst, std::abs(a - b), std::abs(b - c),
                        std::abs(a - c)});
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  notes.push_back("max pairwise gap " + fmt(worst) +
                  " (limit 1e-10) over 200 states x two_j 1..12, " +
                  fmt(seconds) + " s (budget 30 s)");
  return worst <= 1e-10 && seconds < 30.0;
}

// 2. Anchor values: coherent states, the equatorial Dicke state, and the
// maximally mixed state.
bool check_anchors(std::vector<std::string> &notes) {
  double worst_coherent = 0.0;
  Rng rng(2026);
  for (int two_j = 1; two_j <= 12; ++two_j) {
    const SpinLabel label{two_j};
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = std::acos(2.0 * rng.uniform() - 1.0);
      const double phi = 2.0 * M_PI * rng.uniform();
      const StateVector omega = spin_coherent_state(label, theta, phi);
      const double value = scs_commutator(DensityMatrix::pure(omega), label);
      worst_coherent = std::max(worst_coherent, std::abs(value - 1.0));
    }
  }

  double worst_dicke = 0.0;
  for (int two_j = 2; two_j <= 20; two_j += 2) {
    const SpinLabel label{two_j};
    const StateVector psi{scs_test::dicke_vector(two_j, 0)};
    const double value = scs_commutator(DensityMatrix::pure(psi), label);
    worst_dicke = std::max(worst_dicke, std::abs(value - (label.j() + 1.0)));
  }

  double worst_mixed = 0.0;
  for (int two_j = 1; two_j <= 12; ++two_j) {
    const SpinLabel label{two_j};
    const DensityMatrix rho = maximally_mixed(label.dimension());
    worst_mixed = std::max({worst_mixed, std::abs(scs_offdiagonal(rho, label)),
                            std::abs(scs_commutator(rho, label)),
                            std::abs(scs_simple(rho, label))});
  }

  notes.push_back("coherent |value-1| max " + fmt(worst_coherent) +
                  " (limit 1e-10)");
  notes.push_back("|J,0> |value-(J+1)| max " + fmt(worst_dicke) +
                  " (limit 1e-10, integer J <= 10)");
  notes.push_back("maximally mixed |value| max " + fmt(worst_mixed) +
                  " (limit 1e-12)");
  return worst_coherent <= 1e-10 && worst_dicke <= 1e-10 &&
         worst_mixed <= 1e-12;
}

// 3. Convex mixtures of coherent states never exceed 1; pure qubit states sit
// exactly at 1.
bool check_classical_bound(std::vector<std::string> &notes) {
  double worst_excess = -1e300;
  std::uint64_t seed = 30000;
  for (int two_j = 1; two_j <= 10; ++two_j) {
    const SpinLabel label{two_j};
    for (int trial = 0; trial < 1000; ++trial) {
      const int components = 1 + trial % 6;
      const DensityMatrix rho = classical_sample(label, components, seed++);
      worst_excess =
          std::max(worst_excess, scs_commutator(rho, label) - 1.0);
    }
  }

  double worst_qubit = 0.0;
  Rng rng(31);
  const SpinLabel qubit{1};
  for (int trial = 0; trial < 2000; ++trial) {
    const StateVector psi = haar_pure_state(2, rng);
    worst_qubit = std::max(worst_qubit, std::abs(scs_pure(psi, qubit) - 1.0));
  }

  notes.push_back("10^4 mixtures, max excess over 1: " + fmt(worst_excess) +
                  " (limit 1e-9)");
  notes.push_back("2000 pure qubit states, max |value-1|: " +
                  fmt(worst_qubit) + " (limit 1e-11)");
  return worst_excess <= 1e-9 && worst_qubit <= 1e-11;
}

// 4. The closed-form channel matches brute-force RK4 integration, and the
// tensor operators are eigenvectors of the generator at rate -K(K+1)/J.
bool check_channel(std::vector<std::string> &notes) {
  const auto start = std::chrono::steady_clock::now();
  double worst_rk4 = 0.0;
  Rng rng(44);
  for (int two_j : {2, 4, 8}) {
    const SpinLabel label{two_j};
    const DensityMatrix rho = ginibre_state(label.dimension(), rng);
    const auto rhs = [&label](const Matrix &x) {
      return lindblad_rhs(x, label);
    };
    for (double t : {0.1, 0.3, 1.0}) {
      const Matrix reference =
          scs_test::rk4_integrate(rho.entries(), rhs, t, 4000);
      const Matrix closed = evolve(rho, label, ChannelTime{t}).entries();
      worst_rk4 =
          std::max(worst_rk4, (reference - closed).cwiseAbs().maxCoeff());
    }
  }

  double worst_rate = 0.0;
  for (int two_j : {2, 4, 8}) {
    const SpinLabel label{two_j};
    for (int k = 0; k <= two_j; ++k) {
      const double rate = -static_cast<double>(k) * (k + 1) / label.j();
      for (int q = -k; q <= k; ++q) {
        const Matrix t_kq = tensor_operator(label, k, q);
        const Matrix residual = lindblad_rhs(t_kq, label) - rate * t_kq;
        worst_rate = std::max(worst_rate, residual.cwiseAbs().maxCoeff());
      }
    }
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  notes.push_back("max |RK4 - closed form| " + fmt(worst_rk4) +
                  " (limit 1e-8) at t in {0.1, 0.3, 1.0}, two_j in {2,4,8}");
  notes.push_back("max eigenvalue residual " + fmt(worst_rate) +
                  " (limit 1e-11), " + fmt(seconds) + " s (budget 60 s)");
  return worst_rk4 <= 1e-8 && worst_rate <= 1e-11 && seconds < 60.0;
}

// 5. Purity is completely monotone along the channel and the scale decays.
bool check_monotonicity(std::vector<std::string> &notes) {
  const int two_j_pool[] = {1, 2, 3, 4, 5, 6, 8, 10};
  std::vector<double> times(50);
  for (int i = 0; i < 50; ++i) {
    times[static_cast<std::size_t>(i)] = 2.0 * i / 49.0;
  }

  double worst_sign = 0.0;      // most negative (-1)^n d^n P
  double worst_scaled = -1e300; // largest d/dt (P * scale)
  double worst_scs_step = -1e300;
  double worst_curvature = 0.0; // most negative d^2 ln P
  bool flags_ok = true;

  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const int two_j = two_j_pool[trial % 8];
    const SpinLabel label{two_j};
    const DensityMatrix rho = ginibre_state(label.dimension(), rng);
    const MonotonicityReport report = monotonicity_report(rho, label, 6, times);
    flags_ok = flags_ok && report.completely_monotone &&
               report.scaled_scs_nonincreasing && report.scs_nonincreasing &&
               report.log_convex;
    for (std::size_t n = 0; n < report.purity_derivatives.size(); ++n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      for (double d : report.purity_derivatives[n]) {
        worst_sign = std::min(worst_sign, sign * d);
      }
    }
    for (double d : report.scaled_scs_derivative) {
      worst_scaled = std::max(worst_scaled, d);
    }
    for (std::size_t i = 1; i < report.scs_values.size(); ++i) {
      worst_scs_step = std::max(worst_scs_step, report.scs_values[i] -
                                                    report.scs_values[i - 1]);
    }
    for (double c : report.log_purity_curvature) {
      worst_curvature = std::min(worst_curvature, c);
    }
  }

  notes.push_back("min (-1)^n d^n P (n <= 6): " + fmt(worst_sign) +
                  " (limit -1e-12) on a 50-point grid, 100 states");
  notes.push_back("max d/dt (P * scale): " + fmt(worst_scaled) +
                  " (limit 1e-12)");
  notes.push_back("max scale increase between grid points: " +
                  fmt(worst_scs_step) + " (limit 1e-12)");
  notes.push_back("min d^2 ln P: " + fmt(worst_curvature) + " (limit -1e-12)");
  return flags_ok && worst_sign >= -1e-12 && worst_scaled <= 1e-12 &&
         worst_scs_step <= 1e-12 && worst_curvature >= -1e-12;
}

// 6. The scale equals the scaled log-derivative of purity: analytic value vs
// a centered finite difference of the purity curve.
bool check_purity_derivative(std::vector<std::string> &notes) {
  const double h = 1e-5;
  double worst = 0.0;
  double worst_curve = 0.0;
  Rng rng(66);
  for (int two_j : {2, 5, 9}) {
    const SpinLabel label{two_j};
    const double j = label.j();
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = ginibre_state(label.dimension(), rng);
      const std::vector<double> powers = decompose(rho, label).k_powers();
      for (double t : {0.0, 0.2, 1.0}) {
        const double analytic =
            scs_from_purity(rho, label, ChannelTime{t}).value;
        const double fd = -(std::log(purity_curve(powers, j, t + h)) -
                            std::log(purity_curve(powers, j, t - h))) /
                          (2.0 * h) / 4.0;
        worst = std::max(worst, std::abs(analytic - fd));
        if (t > 0.0) {
          const double direct = evolve(rho, label, ChannelTime{t}).purity();
          worst_curve = std::max(
              worst_curve, std::abs(direct - purity_curve(powers, j, t)));
        }
      }
    }
  }
  notes.push_back("max |analytic - centered difference| " + fmt(worst) +
                  " (limit 1e-6, h = 1e-5, t in {0, 0.2, 1})");
  notes.push_back("purity curve vs evolved-state purity: max gap " +
                  fmt(worst_curve) + " (consistency, limit 1e-12)");
  return worst <= 1e-6 && worst_curve <= 1e-12;
}

// 7. Quasiprobability family: Husimi positivity, overlap quadrature,
// normalization, and the scale as a ratio of sphere integrals.
bool check_quasiprob(std::vector<std::string> &notes) {
  double worst_husimi = 0.0; // most negative Husimi value
  double worst_norm = 0.0;
  double worst_overlap = 0.0;
  double worst_scs = 0.0;

  Rng rng(77);
  for (int two_j : {2, 5, 9}) {
    const SpinLabel label{two_j};
    const auto grid = standard_sphere_grid(label);
    const double dim = label.dimension();

    std::vector<DensityMatrix> states;
    for (int trial = 0; trial < 3; ++trial) {
      states.push_back(ginibre_state(label.dimension(), rng));
    }
    states.push_back(DensityMatrix::pure(
        spin_coherent_state(label, 1.1, 0.7)));
    states.push_back(maximally_mixed(label.dimension()));

    for (const DensityMatrix &rho : states) {
      const SphereField husimi = wigner_s(rho, label, -1.0, grid);
      worst_husimi = std::min(worst_husimi, husimi.values.minCoeff());

      for (double s : {-1.0, 0.0, 1.0}) {
        const SphereField field = wigner_s(rho, label, s, grid);
        double integral = 0.0;
        for (Eigen::Index i = 0; i < field.values.size(); ++i) {
          integral += field.grid->weight[static_cast<std::size_t>(i)] *
                      field.values[i];
        }
        worst_norm = std::max(
            worst_norm, std::abs(integral * dim / (4.0 * M_PI) - 1.0));
      }

      const double commutator_value = scs_commutator(rho, label);
      for (double s : {-1.0, 0.0, 1.0}) {
        const QuasiprobScs qp = scs_quasiprob(rho, label, s, grid);
        if (!qp.degenerate) {
          worst_scs = std::max(worst_scs, std::abs(qp.value - commutator_value));
        }
      }
    }

    for (std::size_t a = 0; a < states.size(); ++a) {
      for (std::size_t b = a; b < states.size(); ++b) {
        const double trace_ab =
            trace_product(states[a].entries(), states[b].entries()).real();
        for (double s : {-1.0, 0.0, 1.0}) {
          const SphereField field_a = wigner_s(states[a], label, -s, grid);
          const SphereField field_b = wigner_s(states[b], label, s, grid);
          worst_overlap = std::max(
              worst_overlap,
              std::abs(overlap(field_a, field_b, label) - trace_ab));
        }
      }
    }
  }

  notes.push_back("Husimi minimum " + fmt(worst_husimi) + " (limit -1e-10)");
  notes.push_back("max |normalization - 1| " + fmt(worst_norm) +
                  " (limit 1e-9) for s in {-1, 0, 1}");
  notes.push_back("max |overlap - Tr(rho1 rho2)| " + fmt(worst_overlap) +
                  " (limit 1e-8)");
  notes.push_back("max |integral-ratio scale - commutator scale| " +
                  fmt(worst_scs) + " (limit 1e-7)");
  return worst_husimi >= -1e-10 && worst_norm <= 1e-9 &&
         worst_overlap <= 1e-8 && worst_scs <= 1e-7;
}

// 8. Large-J asymptotics: the top Clebsch-Gordan remainder shrinks by ~4x per
// doubling of J and the second-order form is strictly better; the shifted
// quasiprobability order s - 4t is probed per doubling at fixed multipole
// content.
bool check_asymptotics(std::vector<std::string> &notes) {
  const int two_j_values[] = {20, 40, 80};

  bool ratios_ok = true;
  bool second_better = true;
  double remainder_first[3][3];
  for (int ji = 0; ji < 3; ++ji) {
    const SpinLabel label{two_j_values[ji]};
    for (int k = 1; k <= 3; ++k) {
      const CgAsymptotics asym = cg_asymptotics(label, k);
      const double rem1 = std::abs(asym.exact - asym.first_order);
      const double rem2 = std::abs(asym.exact - asym.second_order);
      remainder_first[ji][k - 1] = rem1;
      if (rem2 >= rem1) {
        second_better = false;
      }
    }
  }
  double ratio_min = 1e300;
  double ratio_max = 0.0;
  for (int ji = 0; ji + 1 < 3; ++ji) {
    for (int k = 0; k < 3; ++k) {
      const double ratio =
          remainder_first[ji][k] / remainder_first[ji + 1][k];
      ratio_min = std::min(ratio_min, ratio);
      ratio_max = std::max(ratio_max, ratio);
      if (ratio < 3.5 || ratio > 4.5) {
        ratios_ok = false;
      }
    }
  }
  notes.push_back("remainder shrink factors per J-doubling in [" +
                  fmt(ratio_min) + ", " + fmt(ratio_max) +
                  "] (required window [3.5, 4.5]), J in {10, 20, 40}, K in "
                  "{1, 2, 3}");
  notes.push_back(std::string("second-order form strictly better at every "
                              "point: ") +
                  (second_better ? "yes" : "NO"));

  // Shifted-order probe: evolve rho = I/d + 0.02 T20 for t = 0.05 and compare
  // W^(0) of the evolved state against W^(-4t) of the initial state. The
  // approximation quality is the fraction of the evolution effect the order
  // shift fails to capture; for fixed multipole content that fraction is
  // dimensionless (about 1/(2J)) and should halve per J-doubling.
  const double t = 0.05;
  double fraction[3];
  double deviation[3];
  double improved[3];
  for (int ji = 0; ji < 3; ++ji) {
    const int two_j = two_j_values[ji];
    const SpinLabel label{two_j};
    const int dim = label.dimension();
    const Matrix rho_matrix = Matrix::Identity(dim, dim) / dim +
                              0.02 * tensor_operator(label, 2, 0);
    const DensityMatrix rho(rho_matrix);
    const auto grid = standard_sphere_grid(label);
    const ShiftCheck check = s_shift_check(rho, label, 0.0, ChannelTime{t}, grid);
    deviation[ji] = check.deviation;
    fraction[ji] = check.deviation / check.effect_scale;
    improved[ji] = check.deviation_improved;
  }

  bool shift_ok = true;
  for (int ji = 0; ji + 1 < 3; ++ji) {
    const double ratio = fraction[ji] / fraction[ji + 1];
    notes.push_back("uncaptured fraction of the evolution effect from two_j=" +
                    std::to_string(two_j_values[ji]) + " to two_j=" +
                    std::to_string(two_j_values[ji + 1]) + ": " +
                    fmt(fraction[ji]) + " -> " + fmt(fraction[ji + 1]) +
                    ", ratio " + fmt(ratio) + " (required window [1.5, 2.5])");
    if (ratio < 1.5 || ratio > 2.5) {
      shift_ok = false;
    }
  }
  notes.push_back("diagnostics: absolute field deviations " +
                  fmt(deviation[0]) + ", " + fmt(deviation[1]) + ", " +
                  fmt(deviation[2]) + " (carry an extra amplitude power, "
                  "ratio ~5.3); improved-shift deviations " + fmt(improved[0]) +
                  ", " + fmt(improved[1]) + ", " + fmt(improved[2]));

  return ratios_ok && second_better && shift_ok;
}

// 9. Metrology identities on random pure states.
bool check_metrology(std::vector<std::string> &notes) {
  double worst_trace = 0.0;
  double worst_qfi = 0.0;
  double worst_jensen = -1e300; // most violated Jensen margin
  int finite_count = 0;

  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int two_j = 1 + trial % 12;
    const SpinLabel label{two_j};
    const double j = label.j();
    const StateVector psi = haar_pure_state(label.dimension(), rng);
    const double scale = scs_pure(psi, label);
    const double trace_cov = covariance_matrix(psi, label).trace();
    worst_trace = std::max(worst_trace, std::abs(trace_cov - j * scale));

    const double averaged = axis_averaged_qfi(psi, label);
    worst_qfi =
        std::max(worst_qfi, std::abs(averaged - 4.0 * j * scale / 3.0));

    const AxisAverageResult crb = axis_averaged_crb(psi, label);
    if (!crb.diverged) {
      ++finite_count;
      worst_jensen =
          std::max(worst_jensen, 3.0 / (4.0 * j * scale) - crb.value);
    }
  }

  notes.push_back("max |Tr Cov - J * scale| " + fmt(worst_trace) +
                  " (limit 1e-10) on 200 pure states");
  notes.push_back("max |axis-averaged QFI - (4J/3) scale| " + fmt(worst_qfi) +
                  " (limit 1e-6)");
  notes.push_back("max Jensen violation 3/(4 J scale) - averaged CRB: " +
                  fmt(worst_jensen) + " (limit 1e-9, " +
                  std::to_string(finite_count) + "/200 finite)");
  return worst_trace <= 1e-10 && worst_qfi <= 1e-6 && worst_jensen <= 1e-9;
}

// 10. SU(n) generalization: Casimir identity, coherent anchor, classical
// bound, unitary invariance, and the fundamental-irrep equivalence.
bool check_sun(std::vector<std::string> &notes) {
  const auto start = std::chrono::steady_clock::now();

  double worst_casimir = 0.0;
  for (int n : {2, 3, 4}) {
    for (int big_n = 1; big_n <= 4; ++big_n) {
      const IrrepLabel label(n, big_n);
      const double closed = static_cast<double>(big_n) * (big_n + n) *
                            (n - 1) / (2.0 * n);
      worst_casimir = std::max(
          {worst_casimir, std::abs(sun_casimir(label) - closed),
           casimir_residual(label, sun_generators(label))});
    }
  }

  double worst_coherent = 0.0;
  Rng rng(1010);
  for (int n : {2, 3, 4}) {
    for (int big_n : {1, 2, 3}) {
      const IrrepLabel label(n, big_n);
      for (int trial = 0; trial < 5; ++trial) {
        const StateVector psi = random_coherent_state(label, rng);
        worst_coherent = std::max(
            worst_coherent,
            std::abs(scs_sun(DensityMatrix::pure(psi), label) - 1.0));
      }
    }
  }

  const double classical_a =
      sun_classical_bound_check(IrrepLabel(3, 2), 3, 10101, 250);
  const double classical_b =
      sun_classical_bound_check(IrrepLabel(3, 3), 4, 10102, 250);
  const double worst_classical = std::max(classical_a, classical_b) - 1.0;

  Rng inv_rng(1020);
  const IrrepLabel inv_label(3, 3);
  const DensityMatrix inv_state =
      ginibre_state(static_cast<int>(inv_label.dimension()), inv_rng);
  const double invariance =
      scs_sun_invariance_check(inv_state, inv_label, 30, 10203);

  double worst_fundamental = 0.0;
  bool fundamental_pass = true;
  for (int n = 2; n <= 6; ++n) {
    const FundamentalEquivalence eq = fundamental_equivalence_check(n);
    fundamental_pass = fundamental_pass && eq.pass;
    worst_fundamental =
        std::max({worst_fundamental, eq.identity_residual, eq.flow_residual,
                  eq.rate_residual});
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  notes.push_back("Casimir identity max residual " + fmt(worst_casimir) +
                  " (limit 1e-10), n in {2,3,4}, N in {1..4}");
  notes.push_back("coherent-state scale max |value-1| " + fmt(worst_coherent) +
                  " (limit 1e-10)");
  notes.push_back("500 classical SU(3) samples, max excess over 1: " +
                  fmt(worst_classical) + " (limit 1e-9)");
  notes.push_back("unitary-invariance drift over 30 lifted unitaries: " +
                  fmt(invariance) + " (limit 1e-9)");
  notes.push_back("fundamental-irrep equivalence max residual " +
                  fmt(worst_fundamental) + " (limit 1e-10), n in {2..6}, " +
                  fmt(seconds) + " s (budget 120 s)");
  return worst_casimir <= 1e-10 && worst_coherent <= 1e-10 &&
         worst_classical <= 1e-9 && invariance <= 1e-9 && fundamental_pass &&
         worst_fundamental <= 1e-10 && seconds < 120.0;
}

// 11. Distance bound: the coherence norm of the difference from any classical
// state dominates max(sqrt(scale) - 1, 0).
bool check_distance_bound(std::vector<std::string> &notes) {
  double worst_margin = 1e300;
  Rng rng(1111);
  std::uint64_t seed = 111000;
  for (int trial = 0; trial < 50; ++trial) {
    const int two_j = 2 * (1 + trial % 3); // 2, 4, 6
    const SpinLabel label{two_j};
    const DensityMatrix rho = ginibre_state(label.dimension(), rng);
    const Matrix rho_tilde = purity_normalized(rho);
    const double target =
        std::max(std::sqrt(scs_commutator(rho, label)) - 1.0, 0.0);
    for (int sample = 0; sample < 200; ++sample) {
      const DensityMatrix sigma =
          classical_sample(label, 1 + sample % 5, seed++);
      const double distance =
          coherence_norm(rho_tilde - purity_normalized(sigma), label);
      worst_margin = std::min(worst_margin, distance - target);
    }
  }
  notes.push_back("min (distance - lower bound) over 50 states x 200 "
                  "classical samples: " +
                  fmt(worst_margin) + " (limit -1e-9)");
  return worst_margin >= -1e-9;
}

} // namespace

int main() {
  const std::vector<Check> checks = {
      {"definition agreement", check_definitions},
      {"anchor values", check_anchors},
      {"classical bound", check_classical_bound},
      {"channel vs reference integrator", check_channel},
      {"purity complete monotonicity", check_monotonicity},
      {"scale from purity log-derivative", check_purity_derivative},
      {"quasiprobability family", check_quasiprob},
      {"large-J asymptotics", check_asymptotics},
      {"metrology identities", check_metrology},
      {"SU(n) generalization", check_sun},
      {"classical distance bound", check_distance_bound},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> notes;
    bool pass = false;
    std::string error;
    try {
      pass = checks[i].run(notes);
    } catch (const std::exception &e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] %02zu %s (%.1f s)\n", pass ? "PASS" : "FAIL", i + 1,
                checks[i].name.c_str(), seconds);
    for (const std::string &note : notes) {
      std::printf("       %s\n", note.c_str());
    }
    if (!error.empty()) {
      std::printf("       unexpected exception: %s\n", error.c_str());
    }
    if (!pass) {
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, checks.size());
  return failures;
}
