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

#ifndef SCS_RNG_HPP
#define SCS_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace scs {

/// Deterministic random source. All distribution transforms are written out
/// explicitly (instead of using std:: distributions, whose output differs
/// between standard-library implementations) so a fixed seed produces the
/// same stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (cosine branch).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) {
      u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  /// Standard complex normal, variance 1 per complex dimension.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
  }

  /// Flat Dirichlet(1, ..., 1) weights over k components.
  std::vector<double> dirichlet(int k) {
    std::vector<double> w(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto &wi : w) {
      double u = uniform();
      while (u >= 1.0) {
        u = uniform();
      }
      wi = -std::log1p(-u);
      total += wi;
    }
    for (auto &wi : w) {
      wi /= total;
    }
    return w;
  }

  /// Uniform point on the unit sphere as polar angles.
  void sphere_point(double &theta, double &phi) {
    theta = std::acos(1.0 - 2.0 * uniform());
    phi = two_pi * uniform();
  }

  std::uint64_t raw() { return gen_(); }

private:
  static constexpr double two_pi = 6.283185307179586476925286766559;
  std::mt19937_64 gen_;
};

} // namespace scs

#endif // SCS_RNG_HPP
