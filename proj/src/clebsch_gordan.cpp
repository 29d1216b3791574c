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

#include "scs/clebsch_gordan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "scs/errors.hpp"

namespace scs {

namespace {
constexpr int kMaxFactorialArg = 1024;
}

double log_factorial(int n) {
  if (n < 0 || n > kMaxFactorialArg) {
    throw ValidationError("log_factorial: argument out of the supported range");
  }
  static const std::vector<double> table = [] {
    std::vector<double> t(kMaxFactorialArg + 1);
    for (int k = 0; k <= kMaxFactorialArg; ++k) {
      t[static_cast<std::size_t>(k)] = std::lgamma(static_cast<double>(k) + 1.0);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_big_j, int two_big_m) {
  if (two_j1 < 0 || two_j2 < 0 || two_big_j < 0) {
    throw ValidationError("clebsch_gordan: negative angular momentum label");
  }
  if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0 ||
      (two_big_j + two_big_m) % 2 != 0) {
    throw ValidationError("clebsch_gordan: m must differ from j by an integer");
  }
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 ||
      std::abs(two_big_m) > two_big_j) {
    throw ValidationError("clebsch_gordan: |m| exceeds j");
  }
  // Selection rules: magnetic additivity, triangle inequality, and integer
  // total coupling. Violations are zeros of the coefficient, not errors.
  if (two_m1 + two_m2 != two_big_m) {
    return 0.0;
  }
  if (two_big_j < std::abs(two_j1 - two_j2) || two_big_j > two_j1 + two_j2) {
    return 0.0;
  }
  if ((two_j1 + two_j2 + two_big_j) % 2 != 0) {
    return 0.0;
  }

  // Integer factorial arguments of the Racah single-sum formula.
  const int a1 = (two_j1 + two_j2 - two_big_j) / 2;
  const int a2 = (two_j1 - two_j2 + two_big_j) / 2;
  const int a3 = (-two_j1 + two_j2 + two_big_j) / 2;
  const int a4 = (two_j1 + two_j2 + two_big_j) / 2 + 1;
  const int b1 = (two_j1 + two_m1) / 2;
  const int b2 = (two_j1 - two_m1) / 2;
  const int b3 = (two_j2 + two_m2) / 2;
  const int b4 = (two_j2 - two_m2) / 2;
  const int b5 = (two_big_j + two_big_m) / 2;
  const int b6 = (two_big_j - two_big_m) / 2;

  const double log_prefactor =
      0.5 * (std::log(static_cast<double>(two_big_j + 1)) + log_factorial(a1) +
             log_factorial(a2) + log_factorial(a3) - log_factorial(a4) +
             log_factorial(b1) + log_factorial(b2) + log_factorial(b3) +
             log_factorial(b4) + log_factorial(b5) + log_factorial(b6));

  // z-sum limits from the nonnegativity of every factorial argument.
  const int c1 = (two_big_j - two_j2 + two_m1) / 2; // J - j2 + m1 + z
  const int c2 = (two_big_j - two_j1 - two_m2) / 2; // J - j1 - m2 + z
  const int z_min = std::max({0, -c1, -c2});
  const int z_max = std::min({a1, b2, b3});
  if (z_min > z_max) {
    return 0.0;
  }

  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(z_max - z_min + 1));
  double log_max = -std::numeric_limits<double>::infinity();
  for (int z = z_min; z <= z_max; ++z) {
    const double lt = -(log_factorial(z) + log_factorial(a1 - z) +
                        log_factorial(b2 - z) + log_factorial(b3 - z) +
                        log_factorial(c1 + z) + log_factorial(c2 + z));
    log_terms.push_back(lt);
    log_max = std::max(log_max, lt);
  }

  // Compensated (Neumaier) summation of the alternating series, scaled by
  // the largest term to keep the exponentials in range.
  double sum = 0.0;
  double comp = 0.0;
  for (int z = z_min; z <= z_max; ++z) {
    const double term = ((z % 2 == 0) ? 1.0 : -1.0) *
                        std::exp(log_terms[static_cast<std::size_t>(z - z_min)] - log_max);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  sum += comp;

  return std::exp(log_prefactor + log_max) * sum;
}

} // namespace scs
