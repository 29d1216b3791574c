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

#include "scs/quasiprob.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "scs/clebsch_gordan.hpp"
#include "scs/errors.hpp"

namespace scs {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Gauss-Legendre nodes (ascending) and weights on [-1, 1], by Newton
/// iteration from the Chebyshev initial guess.
void gauss_legendre(int n, std::vector<double> &x, std::vector<double> &w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double root = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double deriv = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double prev = 1.0;
      double curr = root;
      for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0) * root * curr - (k - 1.0) * prev) / k;
        prev = curr;
        curr = next;
      }
      deriv = n * (root * curr - prev) / (root * root - 1.0);
      const double step = curr / deriv;
      root -= step;
      if (std::abs(step) < 1e-15) {
        break;
      }
    }
    // The Chebyshev guess enumerates roots in descending order; store
    // ascending so theta = acos(x) descends and can be reversed below.
    x[static_cast<std::size_t>(n - 1 - i)] = root;
    w[static_cast<std::size_t>(n - 1 - i)] =
        2.0 / ((1.0 - root * root) * deriv * deriv);
  }
}

/// Normalized associated Legendre values Pbar_K^q(cos theta) for all
/// 0 <= q <= K <= kmax, Condon-Shortley phase included, laid out at
/// K(K+1)/2 + q. Normalized so that Y_Kq = Pbar_K^q e^{i q phi}.
void legendre_table(int kmax, double x, std::vector<double> &out) {
  const std::size_t count = static_cast<std::size_t>(kmax + 1) *
                            static_cast<std::size_t>(kmax + 2) / 2;
  out.assign(count, 0.0);
  auto idx = [](int k, int q) {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2 +
           static_cast<std::size_t>(q);
  };
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  out[idx(0, 0)] = 1.0 / std::sqrt(4.0 * kPi);
  for (int q = 1; q <= kmax; ++q) {
    out[idx(q, q)] =
        -std::sqrt((2.0 * q + 1.0) / (2.0 * q)) * s * out[idx(q - 1, q - 1)];
  }
  for (int q = 0; q < kmax; ++q) {
    out[idx(q + 1, q)] = std::sqrt(2.0 * q + 3.0) * x * out[idx(q, q)];
  }
  for (int q = 0; q <= kmax; ++q) {
    for (int k = q + 2; k <= kmax; ++k) {
      const double a =
          std::sqrt((4.0 * k * k - 1.0) / (static_cast<double>(k) * k - q * q));
      const double b = std::sqrt(
          (static_cast<double>(k - 1) * (k - 1) - q * q) /
          (4.0 * static_cast<double>(k - 1) * (k - 1) - 1.0));
      out[idx(k, q)] = a * (x * out[idx(k - 1, q)] - b * out[idx(k - 2, q)]);
    }
  }
}

void require_grid(const std::shared_ptr<const SphereGrid> &grid) {
  if (!grid || grid->size() == 0) {
    throw ValidationError("sphere grid is empty");
  }
}

bool same_grid(const SphereGrid &a, const SphereGrid &b) {
  return &a == &b ||
         (a.n_theta == b.n_theta && a.n_phi == b.n_phi &&
          a.theta_nodes == b.theta_nodes && a.phi_nodes == b.phi_nodes);
}

} // namespace

std::shared_ptr<const SphereGrid> make_sphere_grid(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) {
    throw ValidationError("sphere grid needs n_theta >= 1 and n_phi >= 1");
  }
  auto grid = std::make_shared<SphereGrid>();
  grid->n_theta = n_theta;
  grid->n_phi = n_phi;

  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(n_theta, x, w);
  grid->theta_nodes.resize(static_cast<std::size_t>(n_theta));
  for (int i = 0; i < n_theta; ++i) {
    // x ascending => acos descending; flip to list theta ascending.
    grid->theta_nodes[static_cast<std::size_t>(i)] =
        std::acos(x[static_cast<std::size_t>(n_theta - 1 - i)]);
  }
  grid->phi_nodes.resize(static_cast<std::size_t>(n_phi));
  for (int j = 0; j < n_phi; ++j) {
    grid->phi_nodes[static_cast<std::size_t>(j)] = 2.0 * kPi * j / n_phi;
  }

  const double phi_weight = 2.0 * kPi / n_phi;
  grid->theta.reserve(grid->theta_nodes.size() * grid->phi_nodes.size());
  grid->phi.reserve(grid->theta.capacity());
  grid->weight.reserve(grid->theta.capacity());
  for (int i = 0; i < n_theta; ++i) {
    const double wt = w[static_cast<std::size_t>(n_theta - 1 - i)] * phi_weight;
    for (int j = 0; j < n_phi; ++j) {
      grid->theta.push_back(grid->theta_nodes[static_cast<std::size_t>(i)]);
      grid->phi.push_back(grid->phi_nodes[static_cast<std::size_t>(j)]);
      grid->weight.push_back(wt);
    }
  }
  return grid;
}

std::shared_ptr<const SphereGrid> standard_sphere_grid(const SpinLabel &label) {
  return make_sphere_grid(label.two_j + 2, 2 * label.two_j + 3);
}

Complex spherical_harmonic(int k, int q, double theta, double phi) {
  if (k < 0 || std::abs(q) > k) {
    throw ValidationError("spherical_harmonic: need K >= 0 and |q| <= K");
  }
  const int qa = std::abs(q);
  std::vector<double> table;
  legendre_table(k, std::cos(theta), table);
  const double pbar =
      table[static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2 +
            static_cast<std::size_t>(qa)];
  const Complex positive = pbar * std::polar(1.0, qa * phi);
  if (q >= 0) {
    return positive;
  }
  const double sign = (qa % 2 == 0) ? 1.0 : -1.0;
  return sign * std::conj(positive);
}

SphereField wigner_from_table(const MultipoleTable &table, const SpinLabel &label,
                              double s, std::shared_ptr<const SphereGrid> grid) {
  require_grid(grid);
  if (table.two_j() != label.two_j) {
    throw ValidationError("multipole table does not match the spin label");
  }

  SphereField field;
  field.grid = grid;
  field.order_s = s;
  field.nonstandard_order = std::abs(s) > 1.0;

  const int kmax = table.max_k();
  std::vector<Complex> scaled(static_cast<std::size_t>(kmax + 1) *
                                  static_cast<std::size_t>(2 * kmax + 1),
                              Complex(0.0, 0.0));
  auto cidx = [kmax](int k, int q) {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(2 * kmax + 1) +
           static_cast<std::size_t>(q + kmax);
  };

  double max_abs = 0.0;
  int k_used = 0;
  for (int k = 0; k <= kmax; ++k) {
    const double scale = std::exp(-s * log_cg_top(label, k));
    for (int q = -k; q <= k; ++q) {
      const Complex c = table.at(k, q) * scale;
      scaled[cidx(k, q)] = c;
      max_abs = std::max(max_abs, std::abs(c));
      if (std::abs(c) > 1e12) {
        field.amplified = true;
      }
    }
  }
  // Coefficients below the relative rounding floor contribute nothing at
  // double precision; skipping them keeps high-J evaluation tractable.
  const double floor = max_abs * 1e-16;
  for (int k = kmax; k >= 0; --k) {
    bool any = false;
    for (int q = -k; q <= k; ++q) {
      if (std::abs(scaled[cidx(k, q)]) > floor) {
        any = true;
        break;
      }
    }
    if (any) {
      k_used = k;
      break;
    }
  }

  const int n_theta = grid->n_theta;
  const int n_phi = grid->n_phi;
  const double prefactor = std::sqrt(4.0 * kPi / (label.two_j + 1.0));

  // e^{i q phi_j} for every azimuth node and multipole rank.
  std::vector<Complex> phases(static_cast<std::size_t>(n_phi) *
                              static_cast<std::size_t>(k_used + 1));
  for (int j = 0; j < n_phi; ++j) {
    const Complex unit = std::polar(1.0, grid->phi_nodes[static_cast<std::size_t>(j)]);
    Complex acc(1.0, 0.0);
    for (int q = 0; q <= k_used; ++q) {
      phases[static_cast<std::size_t>(j) * static_cast<std::size_t>(k_used + 1) +
             static_cast<std::size_t>(q)] = acc;
      acc *= unit;
    }
  }

  field.values.resize(static_cast<Eigen::Index>(grid->size()));
  double max_imag = 0.0;
  double max_real = 0.0;
  std::vector<double> pbar;
  auto pidx = [](int k, int q) {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2 +
           static_cast<std::size_t>(q);
  };
  for (int i = 0; i < n_theta; ++i) {
    legendre_table(k_used, std::cos(grid->theta_nodes[static_cast<std::size_t>(i)]),
                   pbar);
    for (int j = 0; j < n_phi; ++j) {
      const Complex *ph = &phases[static_cast<std::size_t>(j) *
                                  static_cast<std::size_t>(k_used + 1)];
      Complex acc(0.0, 0.0);
      for (int k = 0; k <= k_used; ++k) {
        acc += scaled[cidx(k, 0)] * pbar[pidx(k, 0)];
        double sign = -1.0;
        for (int q = 1; q <= k; ++q) {
          const Complex direct = scaled[cidx(k, q)] * ph[q];
          const Complex mirrored = scaled[cidx(k, -q)] * sign * std::conj(ph[q]);
          acc += pbar[pidx(k, q)] * (direct + mirrored);
          sign = -sign;
        }
      }
      acc *= prefactor;
      max_imag = std::max(max_imag, std::abs(acc.imag()));
      max_real = std::max(max_real, std::abs(acc.real()));
      field.values[static_cast<Eigen::Index>(i) * n_phi + j] = acc.real();
    }
  }
  // Relative threshold: rounding noise grows with the field magnitude once
  // the inverse-coefficient scaling amplifies high-rank multipoles.
  if (max_imag > 1e-10 * std::max(1.0, max_real)) {
    throw ValidationError(
        "quasiprobability field has a non-negligible imaginary part; "
        "the input operator is not Hermitian");
  }
  return field;
}

SphereField wigner_s(const DensityMatrix &rho, const SpinLabel &label, double s,
                     std::shared_ptr<const SphereGrid> grid) {
  return wigner_from_table(decompose(rho, label), label, s, std::move(grid));
}

SphereField wigner_field(const Matrix &op, const SpinLabel &label, double s,
                         std::shared_ptr<const SphereGrid> grid) {
  return wigner_from_table(decompose_operator(op, label), label, s, std::move(grid));
}

double overlap(const SphereField &a, const SphereField &b, const SpinLabel &label) {
  require_grid(a.grid);
  require_grid(b.grid);
  if (!same_grid(*a.grid, *b.grid)) {
    throw ValidationError("overlap requires both fields on the same grid");
  }
  if (std::abs(a.order_s + b.order_s) > 1e-9) {
    throw ValidationError("overlap requires fields at opposite orders s and -s");
  }
  if (a.values.size() != b.values.size() ||
      static_cast<std::size_t>(a.values.size()) != a.grid->size()) {
    throw ValidationError("field size does not match its grid");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < a.grid->size(); ++k) {
    sum += a.grid->weight[k] * a.values[static_cast<Eigen::Index>(k)] *
           b.values[static_cast<Eigen::Index>(k)];
  }
  return (label.two_j + 1.0) / (4.0 * kPi) * sum;
}

double log_cg_top(const SpinLabel &label, int k) {
  if (k < 0 || k > label.two_j) {
    throw ValidationError("log_cg_top: K must lie in [0, 2J]");
  }
  const int two_j = label.two_j;
  // ln binom(4J+1, 2J-K) - ln binom(4J+1, 2J), common factors cancelled.
  const double diff = -log_factorial(two_j - k) - log_factorial(two_j + k + 1) +
                      log_factorial(two_j) + log_factorial(two_j + 1);
  return 0.5 * diff;
}

CgAsymptotics cg_asymptotics(const SpinLabel &label, int k) {
  CgAsymptotics out;
  out.exact = log_cg_top(label, k);
  const double j = label.j();
  const double kk = static_cast<double>(k) * (k + 1.0);
  out.first_order = -kk / (4.0 * j);
  out.second_order = -kk * (2.0 * j - 1.0) / (8.0 * j * j);
  return out;
}

ShiftCheck s_shift_check(const DensityMatrix &rho, const SpinLabel &label, double s,
                         ChannelTime time, std::shared_ptr<const SphereGrid> grid) {
  require_grid(grid);
  const double j = label.j();
  if (label.two_j == 0) {
    throw DomainError("s_shift_check is undefined at J = 0");
  }
  MultipoleTable table = decompose(rho, label);
  MultipoleTable damped(label.two_j);
  for (int k = 0; k <= table.max_k(); ++k) {
    const double decay = std::exp(-k * (k + 1.0) * time.t / j);
    for (int q = -k; q <= k; ++q) {
      damped.set(k, q, table.at(k, q) * decay);
    }
  }

  const SphereField evolved = wigner_from_table(damped, label, s, grid);
  const SphereField initial = wigner_from_table(table, label, s, grid);
  const SphereField shifted =
      wigner_from_table(table, label, s - 4.0 * time.t, grid);

  ShiftCheck out;
  out.deviation = (evolved.values - shifted.values).cwiseAbs().maxCoeff();
  out.effect_scale = (evolved.values - initial.values).cwiseAbs().maxCoeff();
  if (label.two_j == 1) {
    out.deviation_improved = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double improved_shift = s - 4.0 * time.t * j / (j - 0.5);
  const SphereField improved = wigner_from_table(table, label, improved_shift, grid);
  out.deviation_improved = (evolved.values - improved.values).cwiseAbs().maxCoeff();
  return out;
}

QuasiprobScs scs_quasiprob(const DensityMatrix &rho, const SpinLabel &label, double s,
                           std::shared_ptr<const SphereGrid> grid) {
  require_grid(grid);
  if (label.two_j == 0) {
    throw DomainError("the coherence scale is undefined at J = 0");
  }
  MultipoleTable table = decompose(rho, label);
  const std::vector<double> powers = table.k_powers();
  double excess = 0.0;
  for (std::size_t k = 1; k < powers.size(); ++k) {
    excess += powers[k];
  }
  QuasiprobScs out;
  if (excess < 1e-14) {
    out.degenerate = true;
    return out;
  }

  const SphereField state_minus = wigner_from_table(table, label, -s, grid);
  const SphereField state_plus = wigner_from_table(table, label, s, grid);
  const SphereField rhs_plus =
      wigner_field(lindblad_rhs(rho.entries(), label), label, s, grid);

  const double denom = overlap(state_minus, state_plus, label);
  if (!(denom > 1e-14)) {
    throw DegenerateStateError("state purity vanished in the overlap normalization");
  }
  out.value = -0.5 * overlap(state_minus, rhs_plus, label) / denom;
  return out;
}

void write_csv(const SphereField &field, std::ostream &out) {
  require_grid(field.grid);
  out << "theta,phi,weight,value\n";
  char buffer[128];
  for (std::size_t k = 0; k < field.grid->size(); ++k) {
    std::snprintf(buffer, sizeof(buffer), "%.17g,%.17g,%.17g,%.17g\n",
                  field.grid->theta[k], field.grid->phi[k],
                  field.grid->weight[k],
                  field.values[static_cast<Eigen::Index>(k)]);
    out << buffer;
  }
}

} // namespace scs
