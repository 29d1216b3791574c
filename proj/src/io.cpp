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

#include "scs/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scs/errors.hpp"

namespace scs {

namespace {

using nlohmann::json;

/// nlohmann reports byte offsets; convert to a line number for messages.
std::string describe_position(const std::string &text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
    }
  }
  return "line " + std::to_string(line);
}

Matrix parse_matrix(const json &rows) {
  if (!rows.is_array() || rows.empty()) {
    throw IoError("state file: \"matrix\" must be a nonempty array of rows");
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(rows.size());
  Matrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const json &row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw IoError("state file: matrix row " + std::to_string(r) +
                    " does not have " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
      const json &entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw IoError("state file: entry (" + std::to_string(r) + ", " +
                      std::to_string(c) + ") is not a [real, imag] pair");
      }
      out(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return out;
}

} // namespace

StateFile parse_state_file(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &err) {
    throw IoError("state file: JSON parse error at " +
                  describe_position(text, err.byte) + ": " + err.what());
  }
  if (!doc.is_object()) {
    throw IoError("state file: top level must be a JSON object");
  }

  StateFile file;
  file.schema_version = doc.value("schema_version", std::string());
  if (file.schema_version != "1") {
    throw IoError("state file: unsupported schema_version \"" +
                  file.schema_version + "\" (expected \"1\")");
  }
  file.kind = doc.value("kind", std::string());
  if (file.kind == "su2") {
    if (!doc.contains("two_j") || !doc["two_j"].is_number_integer()) {
      throw IoError("state file: su2 states need an integer \"two_j\"");
    }
    file.two_j = doc["two_j"].get<int>();
    if (file.two_j < 0) {
      throw IoError("state file: two_j must be nonnegative");
    }
  } else if (file.kind == "sun") {
    if (!doc.contains("n") || !doc["n"].is_number_integer() ||
        !doc.contains("big_n") || !doc["big_n"].is_number_integer()) {
      throw IoError("state file: sun states need integers \"n\" and \"big_n\"");
    }
    file.n = doc["n"].get<int>();
    file.big_n = doc["big_n"].get<int>();
  } else {
    throw IoError("state file: \"kind\" must be \"su2\" or \"sun\"");
  }

  if (!doc.contains("matrix")) {
    throw IoError("state file: missing \"matrix\"");
  }
  file.matrix = parse_matrix(doc["matrix"]);

  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) {
      throw IoError("state file: \"metadata\" must be an object of strings");
    }
    for (const auto &item : doc["metadata"].items()) {
      if (!item.value().is_string()) {
        throw IoError("state file: metadata value for \"" + item.key() +
                      "\" is not a string");
      }
      file.metadata[item.key()] = item.value().get<std::string>();
    }
  }

  const Eigen::Index expected =
      file.kind == "su2" ? static_cast<Eigen::Index>(file.two_j + 1)
                         : Eigen::Index(0);
  if (file.kind == "su2" && file.matrix.rows() != expected) {
    throw IoError("state file: matrix dimension " +
                  std::to_string(file.matrix.rows()) +
                  " does not match two_j = " + std::to_string(file.two_j));
  }
  return file;
}

StateFile load_state_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open state file: " + path);
  }
  return parse_state_file(in);
}

void write_state_file(const StateFile &file, std::ostream &out) {
  json doc;
  doc["schema_version"] = file.schema_version;
  doc["kind"] = file.kind;
  if (file.kind == "su2") {
    doc["two_j"] = file.two_j;
  } else {
    doc["n"] = file.n;
    doc["big_n"] = file.big_n;
  }
  json rows = json::array();
  for (Eigen::Index r = 0; r < file.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < file.matrix.cols(); ++c) {
      row.push_back({file.matrix(r, c).real(), file.matrix(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  if (!file.metadata.empty()) {
    doc["metadata"] = file.metadata;
  }
  out << doc.dump(2) << "\n";
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::vector<double> parse_time_list(const std::string &text) {
  std::vector<double> times;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
        ++used;
      }
      if (used != token.size()) {
        throw std::invalid_argument(token);
      }
      times.push_back(value);
    } catch (const std::exception &) {
      throw ValidationError("times: cannot parse \"" + token + "\" as a number");
    }
  }
  if (times.empty()) {
    throw ValidationError("times: the list is empty");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0) {
      throw ValidationError("times: entries must be nonnegative");
    }
    if (i > 0 && times[i] <= times[i - 1]) {
      throw ValidationError("times: entries must be strictly ascending");
    }
  }
  return times;
}

std::pair<int, int> parse_grid_shape(const std::string &text) {
  const std::size_t cross = text.find('x');
  if (cross == std::string::npos) {
    throw ValidationError("grid: expected THETAxPHI, e.g. 32x64");
  }
  int n_theta = 0;
  int n_phi = 0;
  try {
    n_theta = std::stoi(text.substr(0, cross));
    n_phi = std::stoi(text.substr(cross + 1));
  } catch (const std::exception &) {
    throw ValidationError("grid: cannot parse \"" + text + "\"");
  }
  if (n_theta < 1 || n_phi < 1) {
    throw ValidationError("grid: both factors must be positive");
  }
  return {n_theta, n_phi};
}

void SweepConfig::validate() const {
  if (times.empty()) {
    throw ValidationError("sweep: time grid must be nonempty");
  }
  for (double t : times) {
    if (t < 0.0) {
      throw ValidationError("sweep: times must be nonnegative");
    }
  }
  if (n_theta < 0 || n_phi < 0) {
    throw ValidationError("sweep: grid shape must be positive");
  }
  if (num_samples < 1 || num_components < 1) {
    throw ValidationError("sweep: sample and component counts must be positive");
  }
}

} // namespace scs
