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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scs/channel.hpp"
#include "scs/coherence.hpp"
#include "scs/errors.hpp"
#include "scs/io.hpp"
#include "scs/metrology.hpp"
#include "scs/quasiprob.hpp"
#include "scs/random_states.hpp"
#include "scs/spin.hpp"
#include "scs/sun.hpp"
#include "scs/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitCap = 4;

using nlohmann::json;

Eigen::Index dimension_cap() {
  const char *raw = std::getenv("SCS_DIM_CAP");
  if (raw == nullptr || *raw == '\0') {
    return 2000;
  }
  char *end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    throw scs::ValidationError("SCS_DIM_CAP must be a positive integer");
  }
  return static_cast<Eigen::Index>(value);
}

void enforce_cap(Eigen::Index dim) {
  const Eigen::Index cap = dimension_cap();
  if (dim > cap) {
    throw scs::ResourceCapError(
        "dimension " + std::to_string(dim) + " exceeds the cap " +
        std::to_string(cap) + "; raise SCS_DIM_CAP to allow larger problems");
  }
}

struct LoadedSu2 {
  scs::SpinLabel label{0};
  scs::DensityMatrix rho;
};

LoadedSu2 load_su2(const std::string &path) {
  const scs::StateFile file = scs::load_state_file(path);
  if (file.kind != "su2") {
    throw scs::ValidationError(
        "this command expects an su2 state file; use the sun command for kind \"sun\"");
  }
  scs::SpinLabel label{file.two_j};
  enforce_cap(label.dimension());
  return LoadedSu2{label, scs::DensityMatrix(file.matrix)};
}

std::ostream &open_output(std::ofstream &file, const std::string &out_path) {
  if (out_path.empty()) {
    return std::cout;
  }
  file.open(out_path);
  if (!file) {
    throw scs::IoError("cannot open output file: " + out_path);
  }
  return file;
}

void finish_output(std::ofstream &file, const std::string &out_path) {
  if (!out_path.empty()) {
    file.flush();
    if (!file) {
      throw scs::IoError("failed while writing: " + out_path);
    }
  }
}

int run_report(const std::string &state_path, const std::string &out_path) {
  const LoadedSu2 input = load_su2(state_path);
  const scs::CoherenceReport report = scs::witness(input.rho, input.label);

  json doc;
  doc["two_j"] = input.label.two_j;
  doc["scs_offdiagonal"] = scs::scs_offdiagonal(input.rho, input.label);
  doc["scs_commutator"] = report.scs;
  doc["scs_simple"] = scs::scs_simple(input.rho, input.label);
  doc["purity"] = report.purity;
  doc["quantum"] = report.witness_quantum;
  doc["distance_lower"] = report.distance_lower;
  doc["distance_upper"] = report.distance_upper;

  std::ofstream file;
  std::ostream &out = open_output(file, out_path);
  out << doc.dump(2) << "\n";
  finish_output(file, out_path);
  return kExitOk;
}

int run_evolve(const std::string &state_path, const std::string &times_text,
               const std::string &out_path) {
  const LoadedSu2 input = load_su2(state_path);
  const std::vector<double> times = scs::parse_time_list(times_text);

  std::ofstream file;
  std::ostream &out = open_output(file, out_path);
  out << "t,purity,scs\n";
  for (double t : times) {
    const scs::DensityMatrix evolved =
        scs::evolve(input.rho, input.label, scs::ChannelTime(t));
    out << scs::format_double(t) << ","
        << scs::format_double(evolved.purity()) << ","
        << scs::format_double(scs::scs_commutator(evolved, input.label)) << "\n";
  }
  finish_output(file, out_path);
  return kExitOk;
}

int run_wigner(const std::string &state_path, double s, const std::string &grid_text,
               const std::string &out_path) {
  const LoadedSu2 input = load_su2(state_path);
  std::shared_ptr<const scs::SphereGrid> grid;
  if (grid_text.empty()) {
    grid = scs::standard_sphere_grid(input.label);
  } else {
    const auto shape = scs::parse_grid_shape(grid_text);
    grid = scs::make_sphere_grid(shape.first, shape.second);
  }

  const scs::SphereField field = scs::wigner_s(input.rho, input.label, s, grid);
  double integral = 0.0;
  for (std::size_t k = 0; k < grid->size(); ++k) {
    integral += grid->weight[k] * field.values[static_cast<Eigen::Index>(k)];
  }
  integral *= (input.label.two_j + 1.0) / (4.0 * 3.14159265358979323846);
  std::cerr << "normalization: integrated field = " << scs::format_double(integral)
            << " (expected 1)\n";
  if (field.amplified) {
    std::cerr << "warning: multipole coefficients amplified beyond 1e12; "
                 "values are numerically unreliable\n";
  }
  if (field.nonstandard_order) {
    std::cerr << "warning: |s| > 1 is outside the standard ordering family\n";
  }

  std::ofstream file;
  std::ostream &out = open_output(file, out_path);
  scs::write_csv(field, out);
  finish_output(file, out_path);
  return kExitOk;
}

int run_sun(const std::string &check, int n, int big_n, const std::string &state_path,
            std::uint64_t seed, const std::string &out_path) {
  const scs::IrrepLabel label(n, big_n);
  enforce_cap(label.dimension());

  json doc;
  doc["n"] = n;
  doc["big_n"] = big_n;
  doc["dimension"] = static_cast<long>(label.dimension());

  if (check == "casimir") {
    const scs::GeneratorSet gens = scs::sun_generators(label);
    const double residual = scs::casimir_residual(label, gens);
    doc["casimir"] = label.casimir();
    doc["operator_residual"] = residual;
    doc["pass"] = residual < 1e-10;
  } else if (check == "coherence") {
    scs::DensityMatrix rho = [&]() {
      if (state_path.empty()) {
        scs::Vector reference = scs::Vector::Zero(label.dimension());
        reference(0) = 1.0;
        return scs::DensityMatrix::pure(scs::StateVector(reference));
      }
      const scs::StateFile file = scs::load_state_file(state_path);
      if (file.kind != "sun" || file.n != n || file.big_n != big_n) {
        throw scs::ValidationError("state file does not carry a matching sun label");
      }
      return scs::DensityMatrix(file.matrix);
    }();
    doc["scs_sun"] = scs::scs_sun(rho, label);
    doc["purity"] = rho.purity();
  } else if (check == "equivalence") {
    if (big_n != 1) {
      throw scs::ValidationError("equivalence check runs on the fundamental irrep; use --big-n 1");
    }
    const scs::FundamentalEquivalence report =
        scs::fundamental_equivalence_check(n, seed);
    doc["identity_residual"] = report.identity_residual;
    doc["flow_residual"] = report.flow_residual;
    doc["rate_residual"] = report.rate_residual;
    doc["pass"] = report.pass;
  } else {
    throw scs::ValidationError("unknown sun check: " + check +
                               " (expected casimir, coherence, or equivalence)");
  }

  std::ofstream file;
  std::ostream &out = open_output(file, out_path);
  out << doc.dump(2) << "\n";
  finish_output(file, out_path);
  return kExitOk;
}

int run_classical_sample(int two_j, int n, int big_n, int components, int samples,
                         std::uint64_t seed, const std::string &out_path) {
  json doc;
  doc["components"] = components;
  doc["samples"] = samples;
  doc["seed"] = seed;

  double worst = 0.0;
  if (two_j > 0) {
    const scs::SpinLabel label{two_j};
    enforce_cap(label.dimension());
    for (int k = 0; k < samples; ++k) {
      const scs::DensityMatrix rho =
          scs::classical_sample(label, components, seed + static_cast<std::uint64_t>(k));
      worst = std::max(worst, scs::scs_commutator(rho, label));
    }
    doc["group"] = "su2";
    doc["two_j"] = two_j;
  } else {
    const scs::IrrepLabel label(n, big_n);
    enforce_cap(label.dimension());
    worst = scs::sun_classical_bound_check(label, components, seed, samples);
    doc["group"] = "sun";
    doc["n"] = n;
    doc["big_n"] = big_n;
  }
  doc["max_scs"] = worst;
  doc["bound_satisfied"] = worst <= 1.0 + 1e-9;

  std::ofstream file;
  std::ostream &out = open_output(file, out_path);
  out << doc.dump(2) << "\n";
  finish_output(file, out_path);
  return kExitOk;
}

int run_metrology(const std::string &state_path, const std::string &out_path) {
  const LoadedSu2 input = load_su2(state_path);
  if (std::abs(input.rho.purity() - 1.0) > 1e-10) {
    throw scs::ValidationError(
        "metrology requires a pure state (purity deviates from 1 by more than 1e-10)");
  }
  Eigen::SelfAdjointEigenSolver<scs::Matrix> eig(input.rho.entries());
  const Eigen::Index top = input.rho.dim() - 1;
  const scs::StateVector psi(eig.eigenvectors().col(top));

  const scs::SensingReport report = scs::sensing_report(psi, input.label);
  json doc;
  doc["two_j"] = input.label.two_j;
  doc["scs"] = report.scs;
  doc["trace_cov"] = report.trace_cov;
  doc["axis_mean_qfi"] = report.axis_mean_qfi;
  doc["axis_mean_crb"] = report.axis_mean_crb.diverged
                             ? json("infinite")
                             : json(report.axis_mean_crb.value);
  doc["crb_diverged"] = report.axis_mean_crb.diverged;
  if (report.axis_mean_crb.diverged) {
    doc["divergent_axis"] = {report.axis_mean_crb.divergent_axis(0),
                             report.axis_mean_crb.divergent_axis(1),
                             report.axis_mean_crb.divergent_axis(2)};
  }
  doc["inverse_trace_cov"] = report.bound.inverse_trace_cov;
  doc["trace_inv_cov"] = report.bound.singular ? json("infinite")
                                               : json(report.bound.trace_inv_cov);
  doc["cov_singular"] = report.bound.singular;
  json cov = json::array();
  for (int r = 0; r < 3; ++r) {
    cov.push_back({report.covariance(r, 0), report.covariance(r, 1),
                   report.covariance(r, 2)});
  }
  doc["covariance"] = std::move(cov);

  std::ofstream file;
  std::ostream &out = open_output(file, out_path);
  out << doc.dump(2) << "\n";
  finish_output(file, out_path);
  return kExitOk;
}

int run_selftest() {
  int failures = 0;
  auto check = [&failures](const char *name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) {
      ++failures;
    }
  };

  const scs::SpinLabel label{8};
  scs::Rng rng(1234);
  const scs::DensityMatrix rho = scs::ginibre_state(label.dimension(), rng);
  const double a = scs::scs_offdiagonal(rho, label);
  const double b = scs::scs_commutator(rho, label);
  const double c = scs::scs_simple(rho, label);
  check("definition agreement", std::abs(a - b) < 1e-10 && std::abs(b - c) < 1e-10);

  const scs::StateVector coherent = scs::spin_coherent_state(label, 1.1, 2.2);
  check("coherent threshold",
        std::abs(scs::scs_pure(coherent, label) - 1.0) < 1e-10);

  const scs::DensityMatrix mixed(
      scs::Matrix::Identity(label.dimension(), label.dimension()) /
      static_cast<double>(label.dimension()));
  check("maximally mixed", std::abs(scs::scs_commutator(mixed, label)) < 1e-12);

  const scs::IrrepLabel qubit_pair(2, 2);
  check("sun casimir", scs::casimir_residual(qubit_pair, scs::sun_generators(qubit_pair)) < 1e-10);

  const scs::FundamentalEquivalence eq = scs::fundamental_equivalence_check(3);
  check("fundamental equivalence", eq.pass);

  if (failures > 0) {
    std::cout << failures << " selftest check(s) failed\n";
    return kExitValidation;
  }
  std::cout << "all selftest checks passed\n";
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"spin coherence scale toolkit"};
  app.require_subcommand(1);

  std::string state_path;
  std::string times_text;
  std::string grid_text;
  std::string out_path;
  std::string format = "json";
  double order_s = 0.0;
  int two_j = 0;
  int n = 0;
  int big_n = 1;
  int components = 3;
  int samples = 100;
  std::uint64_t seed = 1;

  CLI::App *report = app.add_subcommand("report", "coherence report for a state file");
  report->add_option("--state", state_path, "state file (JSON)")->required();
  report->add_option("--out", out_path, "output path (default stdout)");
  report->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));

  CLI::App *evolve = app.add_subcommand("evolve", "depolarization trajectory as CSV");
  evolve->add_option("--state", state_path, "state file (JSON)")->required();
  evolve->add_option("--times", times_text, "comma-separated ascending times")->required();
  evolve->add_option("--out", out_path, "output path (default stdout)");
  evolve->add_option("--format", format, "output format")->check(CLI::IsMember({"csv"}));

  CLI::App *wigner = app.add_subcommand("wigner", "s-ordered sphere field as CSV");
  wigner->add_option("--state", state_path, "state file (JSON)")->required();
  wigner->add_option("--s", order_s, "ordering parameter (-1 Husimi, 0 Wigner, +1 P)");
  wigner->add_option("--grid", grid_text, "grid shape THETAxPHI (default from two_j)");
  wigner->add_option("--out", out_path, "output path (default stdout)");

  CLI::App *sun = app.add_subcommand("sun", "SU(n) checks: casimir, coherence, equivalence");
  std::string sun_check;
  sun->add_option("check", sun_check, "casimir | coherence | equivalence")->required();
  sun->add_option("--n", n, "number of modes")->required();
  sun->add_option("--big-n", big_n, "number of excitations");
  sun->add_option("--state", state_path, "optional sun state file for the coherence check");
  sun->add_option("--seed", seed, "seed for sampled checks");
  sun->add_option("--out", out_path, "output path (default stdout)");

  CLI::App *classical = app.add_subcommand(
      "classical-sample", "max coherence scale over random classical mixtures");
  classical->add_option("--two-j", two_j, "doubled spin (SU(2) mode)");
  classical->add_option("--n", n, "modes (SU(n) mode)");
  classical->add_option("--big-n", big_n, "excitations (SU(n) mode)");
  classical->add_option("--components", components, "mixture components");
  classical->add_option("--samples", samples, "number of sampled mixtures");
  classical->add_option("--seed", seed, "seed")->required();
  classical->add_option("--out", out_path, "output path (default stdout)");

  CLI::App *metrology = app.add_subcommand("metrology", "rotation-sensing report for a pure state");
  metrology->add_option("--state", state_path, "state file (JSON, pure)")->required();
  metrology->add_option("--out", out_path, "output path (default stdout)");

  app.add_subcommand("selftest", "fast internal consistency checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) {
      return run_report(state_path, out_path);
    }
    if (evolve->parsed()) {
      return run_evolve(state_path, times_text, out_path);
    }
    if (wigner->parsed()) {
      return run_wigner(state_path, order_s, grid_text, out_path);
    }
    if (sun->parsed()) {
      if (n < 2) {
        throw scs::ValidationError("sun: need --n >= 2");
      }
      return run_sun(sun_check, n, big_n, state_path, seed, out_path);
    }
    if (classical->parsed()) {
      if (two_j <= 0 && n < 2) {
        throw scs::ValidationError(
            "classical-sample: pass --two-j for SU(2) or --n/--big-n for SU(n)");
      }
      return run_classical_sample(two_j, n, big_n, components, samples, seed, out_path);
    }
    if (metrology->parsed()) {
      return run_metrology(state_path, out_path);
    }
    return run_selftest();
  } catch (const scs::ResourceCapError &err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitCap;
  } catch (const scs::IoError &err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitIo;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitValidation;
  }
}
