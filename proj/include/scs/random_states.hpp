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

#ifndef SCS_RANDOM_STATES_HPP
#define SCS_RANDOM_STATES_HPP

#include "scs/rng.hpp"
#include "scs/types.hpp"

namespace scs {

/// Full-rank random mixed state rho = G G^dag / Tr(G G^dag) with G a square
/// complex Ginibre matrix.
DensityMatrix ginibre_state(int dim, Rng &rng);

/// Haar-random pure state (normalized complex Gaussian vector).
StateVector haar_pure_state(int dim, Rng &rng);

/// Haar-random special unitary on C^n via QR of a complex Gaussian matrix
/// with the standard phase correction, then det-normalized into SU(n).
Matrix haar_special_unitary(int n, Rng &rng);

} // namespace scs

#endif // SCS_RANDOM_STATES_HPP
