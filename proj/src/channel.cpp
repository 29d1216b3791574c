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

#include "scs/channel.hpp"

#include <cmath>

#include "scs/clebsch_gordan.hpp"
#include "scs/spin.hpp"

namespace scs {

namespace {

void require_positive_spin(const SpinLabel &label, const char *where) {
  if (label.two_j == 0) {
    throw DomainError(std::string(where) + ": undefined at J = 0 (the 1/J normalization)");
  }
}

void require_sorted_nonnegative(const std::vector<double> &times, const char *where) {
  double prev = 0.0;
  for (double t : times) {
    if (!(t >= 0.0) || t < prev) {
      throw ValidationError(std::string(where) + ": times must be sorted and nonnegative");
    }
    prev = t;
  }
}

// Dicke row index of magnetic number m, passed doubled.
int dicke_index(int two_j, int two_m) { return (two_j - two_m) / 2; }

} // namespace

MultipoleTable::MultipoleTable(int two_j) : two_j_(two_j) {
  if (two_j < 0) {
    throw ValidationError("MultipoleTable: 2J must be nonnegative");
  }
  const std::size_t dim = static_cast<std::size_t>(two_j + 1);
  c_.assign(dim * dim, Complex(0.0, 0.0));
}

std::size_t MultipoleTable::index(int k, int q) const {
  if (k < 0 || k > two_j_ || q < -k || q > k) {
    throw ValidationError("MultipoleTable: (K, q) out of range");
  }
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(k) +
         static_cast<std::size_t>(q + k);
}

std::vector<double> MultipoleTable::k_powers() const {
  std::vector<double> a(static_cast<std::size_t>(two_j_ + 1), 0.0);
  for (int k = 0; k <= two_j_; ++k) {
    double total = 0.0;
    for (int q = -k; q <= k; ++q) {
      total += std::norm(at(k, q));
    }
    a[static_cast<std::size_t>(k)] = total;
  }
  return a;
}

Matrix tensor_operator(const SpinLabel &label, int k, int q) {
  if (k < 0 || k > label.two_j || q < -k || q > k) {
    throw ValidationError("tensor_operator: (K, q) outside 0 <= K <= 2J, |q| <= K");
  }
  const int dim = label.dimension();
  const double factor = std::sqrt(static_cast<double>(2 * k + 1) /
                                  static_cast<double>(dim));
  Matrix t = Matrix::Zero(dim, dim);
  const int two_q = 2 * q;
  for (int two_m = -label.two_j; two_m <= label.two_j; two_m += 2) {
    const int two_mp = two_m + two_q;
    if (std::abs(two_mp) > label.two_j) {
      continue;
    }
    const double cg = clebsch_gordan(label.two_j, two_m, 2 * k, two_q,
                                     label.two_j, two_mp);
    t(dicke_index(label.two_j, two_mp), dicke_index(label.two_j, two_m)) = cg * factor;
  }
  return t;
}

MultipoleTable decompose_operator(const Matrix &op, const SpinLabel &label) {
  const int dim = label.dimension();
  if (op.rows() != dim || op.cols() != dim) {
    throw ValidationError("decompose: operator dimension does not match the label");
  }
  MultipoleTable table(label.two_j);
  for (int k = 0; k <= label.two_j; ++k) {
    const double factor = std::sqrt(static_cast<double>(2 * k + 1) /
                                    static_cast<double>(dim));
    for (int q = -k; q <= k; ++q) {
      const int two_q = 2 * q;
      Complex acc(0.0, 0.0);
      for (int two_m = -label.two_j; two_m <= label.two_j; two_m += 2) {
        const int two_mp = two_m + two_q;
        if (std::abs(two_mp) > label.two_j) {
          continue;
        }
        const double cg = clebsch_gordan(label.two_j, two_m, 2 * k, two_q,
                                         label.two_j, two_mp);
        acc += cg * op(dicke_index(label.two_j, two_mp), dicke_index(label.two_j, two_m));
      }
      table.set(k, q, factor * acc);
    }
  }
  return table;
}

MultipoleTable decompose(const DensityMatrix &rho, const SpinLabel &label) {
  return decompose_operator(rho.entries(), label);
}

Matrix reconstruct_operator(const MultipoleTable &table, const SpinLabel &label) {
  if (table.two_j() != label.two_j) {
    throw ValidationError("reconstruct: table dimension does not match the label");
  }
  const int dim = label.dimension();
  Matrix op = Matrix::Zero(dim, dim);
  for (int k = 0; k <= label.two_j; ++k) {
    const double factor = std::sqrt(static_cast<double>(2 * k + 1) /
                                    static_cast<double>(dim));
    for (int q = -k; q <= k; ++q) {
      const Complex coeff = table.at(k, q);
      if (coeff == Complex(0.0, 0.0)) {
        continue;
      }
      const int two_q = 2 * q;
      for (int two_m = -label.two_j; two_m <= label.two_j; two_m += 2) {
        const int two_mp = two_m + two_q;
        if (std::abs(two_mp) > label.two_j) {
          continue;
        }
        const double cg = clebsch_gordan(label.two_j, two_m, 2 * k, two_q,
                                         label.two_j, two_mp);
        op(dicke_index(label.two_j, two_mp), dicke_index(label.two_j, two_m)) +=
            coeff * (cg * factor);
      }
    }
  }
  return op;
}

DensityMatrix reconstruct(const MultipoleTable &table, const SpinLabel &label) {
  return DensityMatrix(reconstruct_operator(table, label));
}

Matrix lindblad_rhs(const Matrix &op, const SpinLabel &label) {
  require_positive_spin(label, "lindblad_rhs");
  const int dim = label.dimension();
  if (op.rows() != dim || op.cols() != dim) {
    throw ValidationError("lindblad_rhs: operator dimension does not match the label");
  }
  const GeneratorSet gens = angular_momentum_ops(label);
  Matrix acc = Matrix::Zero(dim, dim);
  for (const Matrix &ji : gens.ops) {
    const Matrix inner = ji * op - op * ji;
    acc += ji * inner - inner * ji;
  }
  return (-1.0 / label.j()) * acc;
}

DensityMatrix evolve(const DensityMatrix &rho, const SpinLabel &label, ChannelTime time) {
  require_positive_spin(label, "evolve");
  MultipoleTable table = decompose(rho, label);
  const double j = label.j();
  for (int k = 1; k <= table.max_k(); ++k) {
    const double damp = std::exp(-static_cast<double>(k) * (k + 1.0) * time.t / j);
    for (int q = -k; q <= k; ++q) {
      table.set(k, q, table.at(k, q) * damp);
    }
  }
  return reconstruct(table, label);
}

std::vector<double> purity_trajectory(const DensityMatrix &rho, const SpinLabel &label,
                                      const std::vector<double> &times) {
  require_positive_spin(label, "purity_trajectory");
  require_sorted_nonnegative(times, "purity_trajectory");
  const std::vector<double> a = decompose(rho, label).k_powers();
  const double j = label.j();
  std::vector<double> purities;
  purities.reserve(times.size());
  for (double t : times) {
    double p = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double kk = static_cast<double>(k);
      p += a[k] * std::exp(-2.0 * kk * (kk + 1.0) * t / j);
    }
    purities.push_back(p);
  }
  return purities;
}

PurityScs scs_from_purity(const DensityMatrix &rho, const SpinLabel &label, ChannelTime time) {
  require_positive_spin(label, "scs_from_purity");
  const std::vector<double> a = decompose(rho, label).k_powers();
  const double j = label.j();

  double excess = 0.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    excess += a[k];
  }
  PurityScs result;
  if (excess < 1e-14) {
    result.degenerate = true;
    return result;
  }

  double purity = 0.0;
  double weighted = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double kk = static_cast<double>(k);
    const double decay = std::exp(-2.0 * kk * (kk + 1.0) * time.t / j);
    purity += a[k] * decay;
    weighted += kk * (kk + 1.0) * a[k] * decay;
  }
  if (purity < 1e-14) {
    throw DegenerateStateError("scs_from_purity: purity below the 1e-14 floor");
  }
  result.value = weighted / (2.0 * j * purity);
  return result;
}

MonotonicityReport monotonicity_report(const DensityMatrix &rho, const SpinLabel &label,
                                       int max_order, const std::vector<double> &times) {
  require_positive_spin(label, "monotonicity_report");
  if (max_order < 0 || max_order > 6) {
    throw ValidationError("monotonicity_report: max_order must lie in [0, 6]");
  }
  require_sorted_nonnegative(times, "monotonicity_report");

  const std::vector<double> a = decompose(rho, label).k_powers();
  const double j = label.j();
  const std::size_t nk = a.size();
  std::vector<double> lambda(nk);
  for (std::size_t k = 0; k < nk; ++k) {
    const double kk = static_cast<double>(k);
    lambda[k] = 2.0 * kk * (kk + 1.0) / j;
  }

  MonotonicityReport report;
  report.times = times;
  report.purity_derivatives.assign(static_cast<std::size_t>(max_order) + 1,
                                   std::vector<double>(times.size(), 0.0));
  report.scaled_scs_derivative.assign(times.size(), 0.0);
  report.scs_values.assign(times.size(), 0.0);
  report.log_purity_curvature.assign(times.size(), 0.0);

  constexpr double slack = 1e-12;
  report.completely_monotone = true;
  report.scaled_scs_nonincreasing = true;
  report.scs_nonincreasing = true;
  report.log_convex = true;

  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    double p0 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double weighted = 0.0;
    double weighted_rate = 0.0;
    for (std::size_t k = 0; k < nk; ++k) {
      const double kk = static_cast<double>(k);
      const double e = a[k] * std::exp(-lambda[k] * t);
      p0 += e;
      p1 += -lambda[k] * e;
      p2 += lambda[k] * lambda[k] * e;
      weighted += kk * (kk + 1.0) * e;
      weighted_rate += kk * (kk + 1.0) * (-lambda[k]) * e;
    }
    for (int n = 0; n <= max_order; ++n) {
      double dn = 0.0;
      for (std::size_t k = 0; k < nk; ++k) {
        dn += a[k] * std::pow(-lambda[k], n) * std::exp(-lambda[k] * t);
      }
      report.purity_derivatives[static_cast<std::size_t>(n)][i] = dn;
      if (((n % 2 == 0) ? dn : -dn) < -slack) {
        report.completely_monotone = false;
      }
    }
    // P * A^2 = (1/2J) sum_K K(K+1) a_K exp(-lambda_K t).
    report.scaled_scs_derivative[i] = weighted_rate / (2.0 * j);
    if (report.scaled_scs_derivative[i] > slack) {
      report.scaled_scs_nonincreasing = false;
    }
    report.scs_values[i] = weighted / (2.0 * j * p0);
    report.log_purity_curvature[i] = (p2 * p0 - p1 * p1) / (p0 * p0);
    if (report.log_purity_curvature[i] < -slack) {
      report.log_convex = false;
    }
  }
  for (std::size_t i = 1; i < report.scs_values.size(); ++i) {
    if (report.scs_values[i] > report.scs_values[i - 1] + 1e-12) {
      report.scs_nonincreasing = false;
    }
  }
  return report;
}

double scs_multipole(const MultipoleTable &table, const SpinLabel &label) {
  require_positive_spin(label, "scs_multipole");
  const std::vector<double> a = table.k_powers();
  double purity = 0.0;
  double weighted = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double kk = static_cast<double>(k);
    purity += a[k];
    weighted += kk * (kk + 1.0) * a[k];
  }
  if (purity < 1e-14) {
    throw DegenerateStateError("scs_multipole: purity below the 1e-14 floor");
  }
  return weighted / (2.0 * label.j() * purity);
}

} // namespace scs
