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

#ifndef SCS_LINALG_HPP
#define SCS_LINALG_HPP

#include "scs/types.hpp"

namespace scs {

/// exp(i * scale * H) for Hermitian H, via spectral decomposition.
Matrix hermitian_phase_exp(const Matrix &h, double scale);

/// Largest absolute deviation from hermiticity, max |A - A^dag|.
double hermiticity_defect(const Matrix &a);

/// Tr(A B) without forming the product matrix.
Complex trace_product(const Matrix &a, const Matrix &b);

} // namespace scs

#endif // SCS_LINALG_HPP
