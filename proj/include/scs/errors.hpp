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

#ifndef SCS_ERRORS_HPP
#define SCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scs {

/// Malformed input: broken invariants, bad labels, mismatched dimensions.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request, e.g. a coherence scale at J = 0.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Input state too degenerate for the requested quantity (purity floor).
class DegenerateStateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Requested problem size exceeds the configured dimension cap.
class ResourceCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File or stream failure while reading or writing artifacts.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace scs

#endif // SCS_ERRORS_HPP
