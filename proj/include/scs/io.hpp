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

#ifndef SCS_IO_HPP
#define SCS_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scs/types.hpp"

namespace scs {

/// On-disk state description: a density matrix tagged with its group label.
/// JSON with entries stored as [real, imag] pairs, row-major.
struct StateFile {
  std::string schema_version = "1";
  std::string kind; // "su2" or "sun"
  int two_j = 0;    // su2 only
  int n = 0;        // sun only
  int big_n = 0;    // sun only
  Matrix matrix;
  std::map<std::string, std::string> metadata;
};

/// Parse from a stream; malformed JSON or schema violations raise IoError
/// with the offending line, physics-level violations raise ValidationError.
StateFile parse_state_file(std::istream &in);

/// Parse from a path; nonexistent or unreadable files raise IoError.
StateFile load_state_file(const std::string &path);

/// Canonical serialization: sorted keys, two-space indent, lossless floats.
/// write(parse(x)) is the identity on canonical files.
void write_state_file(const StateFile &file, std::ostream &out);

/// Lossless decimal text (17 significant digits) that parses back to
/// exactly the same double.
std::string format_double(double value);

/// Comma-separated nonnegative times, strictly ascending.
std::vector<double> parse_time_list(const std::string &text);

/// "THETAxPHI" grid shape, both factors positive.
std::pair<int, int> parse_grid_shape(const std::string &text);

/// Validated bundle of sweep parameters shared by the CLI commands.
struct SweepConfig {
  std::vector<double> times{0.0};
  double order_s = 0.0;
  int n_theta = 0; // 0 means: derive from the label
  int n_phi = 0;
  std::uint64_t seed = 1;
  int num_samples = 100;
  int num_components = 3;

  void validate() const;
};

} // namespace scs

#endif // SCS_IO_HPP
