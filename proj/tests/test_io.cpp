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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "scs/errors.hpp"
#include "scs/io.hpp"
#include "scs/types.hpp"

using namespace scs;

namespace {

StateFile sample_su2_file() {
  StateFile file;
  file.kind = "su2";
  file.two_j = 2;
  Matrix rho(3, 3);
  rho << Complex(0.5, 0.0), Complex(0.1, 0.05), Complex(0.0, 0.0),
      Complex(0.1, -0.05), Complex(1.0 / 3.0, 0.0), Complex(0.0, 0.02),
      Complex(0.0, 0.0), Complex(0.0, -0.02), Complex(1.0 / 6.0, 0.0);
  file.matrix = rho;
  file.metadata["origin"] = "unit test";
  return file;
}

std::string serialize(const StateFile &file) {
  std::ostringstream out;
  write_state_file(file, out);
  return out.str();
}

} // namespace

TEST_CASE("canonical serialization is idempotent") {
  const StateFile original = sample_su2_file();
  const std::string first = serialize(original);

  std::istringstream in(first);
  const StateFile parsed = parse_state_file(in);
  CHECK(parsed.schema_version == "1");
  CHECK(parsed.kind == "su2");
  CHECK(parsed.two_j == 2);
  CHECK((parsed.matrix - original.matrix).norm() == 0.0);
  CHECK(parsed.metadata.at("origin") == "unit test");

  CHECK(serialize(parsed) == first);
}

TEST_CASE("sun files carry the mode and excitation numbers") {
  StateFile file;
  file.kind = "sun";
  file.n = 3;
  file.big_n = 1;
  file.matrix = Matrix::Identity(3, 3) / 3.0;

  std::istringstream in(serialize(file));
  const StateFile parsed = parse_state_file(in);
  CHECK(parsed.kind == "sun");
  CHECK(parsed.n == 3);
  CHECK(parsed.big_n == 1);
  CHECK((parsed.matrix - file.matrix).norm() == 0.0);
}

TEST_CASE("parse errors carry the failing line") {
  std::istringstream in("{\n  \"kind\": \"su2\",\n  oops\n}\n");
  try {
    parse_state_file(in);
    FAIL("expected IoError");
  } catch (const IoError &err) {
    const std::string message = err.what();
    CHECK(message.find("line 3") != std::string::npos);
  }
}

TEST_CASE("schema violations are rejected with IoError") {
  const std::string base = serialize(sample_su2_file());

  auto expect_io_error = [](const std::string &text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_state_file(in), IoError);
  };

  expect_io_error("[1, 2, 3]");
  expect_io_error("{\"schema_version\": \"2\", \"kind\": \"su2\", "
                  "\"two_j\": 0, \"matrix\": [[[1, 0]]]}");
  expect_io_error("{\"schema_version\": \"1\", \"kind\": \"su3\", "
                  "\"matrix\": [[[1, 0]]]}");
  expect_io_error("{\"schema_version\": \"1\", \"kind\": \"su2\", "
                  "\"matrix\": [[[1, 0]]]}");
  expect_io_error("{\"schema_version\": \"1\", \"kind\": \"su2\", "
                  "\"two_j\": 1.5, \"matrix\": [[[1, 0]]]}");
  expect_io_error("{\"schema_version\": \"1\", \"kind\": \"su2\", "
                  "\"two_j\": 0}");
  // two_j inconsistent with the matrix dimension.
  expect_io_error("{\"schema_version\": \"1\", \"kind\": \"su2\", "
                  "\"two_j\": 2, \"matrix\": [[[1, 0]]]}");
  // Ragged row.
  expect_io_error("{\"schema_version\": \"1\", \"kind\": \"su2\", "
                  "\"two_j\": 1, \"matrix\": [[[1, 0]], [[0, 0], [0, 0]]]}");
  // Entry is not a [real, imag] pair.
  expect_io_error("{\"schema_version\": \"1\", \"kind\": \"su2\", "
                  "\"two_j\": 0, \"matrix\": [[1]]}");
  // Metadata values must be strings.
  expect_io_error("{\"schema_version\": \"1\", \"kind\": \"su2\", "
                  "\"two_j\": 0, \"matrix\": [[[1, 0]]], "
                  "\"metadata\": {\"a\": 3}}");
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(load_state_file("/nonexistent/state.json"), IoError);
}

TEST_CASE("a parsed file can back a validated density matrix") {
  std::istringstream in(serialize(sample_su2_file()));
  const StateFile parsed = parse_state_file(in);
  const DensityMatrix rho(parsed.matrix);
  CHECK(rho.dim() == 3);
}

TEST_CASE("formatted doubles parse back exactly") {
  for (double value : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0, 6.2831853071795862}) {
    const std::string text = format_double(value);
    CHECK(std::stod(text) == value);
  }
}

TEST_CASE("time lists parse strictly ascending nonnegative values") {
  const std::vector<double> times = parse_time_list("0, 0.5, 1.25");
  REQUIRE(times.size() == 3);
  CHECK(times[0] == 0.0);
  CHECK(times[1] == 0.5);
  CHECK(times[2] == 1.25);

  CHECK(parse_time_list("2.5").size() == 1);

  CHECK_THROWS_AS(parse_time_list("0.5, 0.4"), ValidationError);
  CHECK_THROWS_AS(parse_time_list("0.3, 0.3"), ValidationError);
  CHECK_THROWS_AS(parse_time_list("-1"), ValidationError);
  CHECK_THROWS_AS(parse_time_list("abc"), ValidationError);
  CHECK_THROWS_AS(parse_time_list("1, , 2"), ValidationError);
  CHECK_THROWS_AS(parse_time_list("1 2, 3"), ValidationError);
  CHECK_THROWS_AS(parse_time_list(""), ValidationError);
}

TEST_CASE("grid shapes parse as THETAxPHI") {
  const auto shape = parse_grid_shape("32x64");
  CHECK(shape.first == 32);
  CHECK(shape.second == 64);
  CHECK(parse_grid_shape("3x5") == std::pair<int, int>{3, 5});

  CHECK_THROWS_AS(parse_grid_shape("32"), ValidationError);
  CHECK_THROWS_AS(parse_grid_shape("0x5"), ValidationError);
  CHECK_THROWS_AS(parse_grid_shape("ax5"), ValidationError);
}

TEST_CASE("sweep configuration validation") {
  SweepConfig good;
  CHECK_NOTHROW(good.validate());

  SweepConfig no_times;
  no_times.times.clear();
  CHECK_THROWS_AS(no_times.validate(), ValidationError);

  SweepConfig negative_time;
  negative_time.times = {-0.5};
  CHECK_THROWS_AS(negative_time.validate(), ValidationError);

  SweepConfig bad_grid;
  bad_grid.n_theta = -1;
  CHECK_THROWS_AS(bad_grid.validate(), ValidationError);

  SweepConfig no_samples;
  no_samples.num_samples = 0;
  CHECK_THROWS_AS(no_samples.validate(), ValidationError);
}
