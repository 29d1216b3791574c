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

#include "scs/coherence.hpp"
#include "scs/errors.hpp"
#include "scs/metrology.hpp"
#include "scs/random_states.hpp"
#include "scs/rng.hpp"
#include "scs/spin.hpp"
#include "test_support.hpp"

using namespace scs;

TEST_CASE("covariance of the top Dicke state") {
  for (int two_j : {2, 5, 8}) {
    const SpinLabel label{two_j};
    Vector top = Vector::Zero(label.dimension());
    top(0) = 1.0;
    const Eigen::Matrix3d cov = covariance_matrix(StateVector(top), label);
    const double j = label.j();
    Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
    expected(0, 0) = j / 2.0;
    expected(1, 1) = j / 2.0;
    CHECK((cov - expected).norm() < 1e-12);
  }
}

TEST_CASE("covariance is symmetric positive semidefinite") {
  Rng rng(701);
  const SpinLabel label{7};
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi = haar_pure_state(label.dimension(), rng);
    const Eigen::Matrix3d cov = covariance_matrix(psi, label);
    CHECK((cov - cov.transpose()).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
    CHECK(solver.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("axis QFI is four times the axis variance") {
  const SpinLabel label{6};
  Vector top = Vector::Zero(label.dimension());
  top(0) = 1.0;
  const StateVector psi(top);
  const double j = label.j();

  CHECK(qfi_axis(psi, label, Eigen::Vector3d::UnitZ()) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(qfi_axis(psi, label, Eigen::Vector3d::UnitX()) ==
        doctest::Approx(2.0 * j).epsilon(1e-12));
  const Eigen::Vector3d tilted =
      Eigen::Vector3d(1.0, 0.0, 1.0).normalized();
  CHECK(qfi_axis(psi, label, tilted) == doctest::Approx(j).epsilon(1e-11));

  CHECK_THROWS_AS(qfi_axis(psi, label, Eigen::Vector3d(0.5, 0.0, 0.0)),
                  ValidationError);
}

TEST_CASE("trace of the covariance recovers the coherence scale") {
  Rng rng(702);
  for (int two_j : {1, 3, 6, 10}) {
    const SpinLabel label{two_j};
    for (int trial = 0; trial < 10; ++trial) {
      const StateVector psi = haar_pure_state(label.dimension(), rng);
      const double trace_cov = covariance_matrix(psi, label).trace();
      CHECK(trace_cov ==
            doctest::Approx(label.j() * scs_pure(psi, label)).epsilon(1e-11));
    }
  }
}

TEST_CASE("axis-averaged QFI matches its closed form") {
  Rng rng(703);
  const SpinLabel label{5};
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector psi = haar_pure_state(label.dimension(), rng);
    const double averaged = axis_averaged_qfi(psi, label);
    const double trace_cov = covariance_matrix(psi, label).trace();
    CHECK(averaged == doctest::Approx(4.0 / 3.0 * trace_cov).epsilon(1e-10));
    CHECK(averaged ==
          doctest::Approx(4.0 * label.j() / 3.0 * scs_pure(psi, label))
              .epsilon(1e-8));
  }
}

TEST_CASE("averaged inverse QFI diverges exactly on rank-deficient covariance") {
  const SpinLabel label{6};
  Vector top = Vector::Zero(label.dimension());
  top(0) = 1.0;
  const AxisAverageResult top_result = axis_averaged_crb(StateVector(top), label);
  CHECK(top_result.diverged);
  CHECK(std::isinf(top_result.value));
  CHECK(std::abs(std::abs(top_result.divergent_axis.z()) - 1.0) < 1e-9);

  // The equatorial Dicke state has zero variance along z as well.
  const AxisAverageResult mid_result =
      axis_averaged_crb(StateVector(scs_test::dicke_vector(label.two_j, 0)), label);
  CHECK(mid_result.diverged);
  CHECK(std::abs(std::abs(mid_result.divergent_axis.z()) - 1.0) < 1e-9);
}

TEST_CASE("averaged inverse QFI is finite on a full-rank superposition") {
  // cos(a)|J,0> + sin(a)|J,J> has diagonal covariance
  // diag(c, c, J^2 sin^2 cos^2) with c = cos^2 J(J+1)/2 + sin^2 J/2,
  // full rank for 0 < a < pi/2 and J > 1.
  const int two_j = 16;
  const SpinLabel label{two_j};
  const double j = label.j();
  const double alpha = 0.6;
  const double c2 = std::cos(alpha) * std::cos(alpha);
  const double s2 = std::sin(alpha) * std::sin(alpha);
  Vector amplitudes = std::cos(alpha) * scs_test::dicke_vector(two_j, 0);
  amplitudes += std::sin(alpha) * scs_test::dicke_vector(two_j, two_j);
  const StateVector psi(amplitudes);

  const Eigen::Matrix3d cov = covariance_matrix(psi, label);
  const double planar = c2 * j * (j + 1.0) / 2.0 + s2 * j / 2.0;
  Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
  expected(0, 0) = planar;
  expected(1, 1) = planar;
  expected(2, 2) = j * j * s2 * c2;
  CHECK((cov - expected).norm() < 1e-11);

  const AxisAverageResult crb = axis_averaged_crb(psi, label);
  CHECK_FALSE(crb.diverged);
  // Jensen: the mean of 1/Q dominates the reciprocal mean of Q.
  CHECK(crb.value >= 1.0 / axis_averaged_qfi(psi, label) - 1e-12);
  CHECK(crb.value >= 3.0 / (4.0 * cov.trace()) - 1e-9);
}

TEST_CASE("Jensen inequality holds on random states") {
  Rng rng(704);
  const SpinLabel label{4};
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi = haar_pure_state(label.dimension(), rng);
    const AxisAverageResult crb = axis_averaged_crb(psi, label);
    if (crb.diverged) {
      continue;
    }
    CHECK(crb.value >= 1.0 / axis_averaged_qfi(psi, label) - 1e-12);
  }
}

TEST_CASE("multiparameter bound values and singularity flag") {
  const SpinLabel label{8};
  const double j = label.j();

  const StateVector middle(scs_test::dicke_vector(label.two_j, 0));
  const MultiparameterBound mid = multiparameter_bound(middle, label);
  CHECK(mid.singular);
  CHECK(std::isinf(mid.trace_inv_cov));
  CHECK(mid.inverse_trace_cov ==
        doctest::Approx(1.0 / (j * (j + 1.0))).epsilon(1e-11));

  Vector top = Vector::Zero(label.dimension());
  top(0) = 1.0;
  const MultiparameterBound top_bound = multiparameter_bound(StateVector(top), label);
  CHECK(top_bound.singular);
  CHECK(std::isinf(top_bound.trace_inv_cov));
  CHECK(top_bound.inverse_trace_cov == doctest::Approx(1.0 / j).epsilon(1e-11));

  Rng rng(707);
  for (int trial = 0; trial < 8; ++trial) {
    const StateVector psi = haar_pure_state(label.dimension(), rng);
    const MultiparameterBound bound = multiparameter_bound(psi, label);
    if (bound.singular) {
      continue;
    }
    const Eigen::Matrix3d cov = covariance_matrix(psi, label);
    CHECK(bound.inverse_trace_cov ==
          doctest::Approx(1.0 / cov.trace()).epsilon(1e-12));
    CHECK(bound.trace_inv_cov ==
          doctest::Approx(cov.inverse().trace()).epsilon(1e-9));
    CHECK(bound.trace_inv_cov * cov.trace() >= 9.0 - 1e-9);
  }
}

TEST_CASE("covariance transforms equivariantly under rotations") {
  Rng rng(705);
  const SpinLabel label{5};
  const GeneratorSet gens = angular_momentum_ops(label);
  const double casimir_norm = label.j() * (label.j() + 1.0) *
                              label.dimension() / 3.0;
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector psi = haar_pure_state(label.dimension(), rng);
    double theta = 0.0;
    double phi = 0.0;
    rng.sphere_point(theta, phi);
    const Matrix u = rotation_unitary(
        label, RotationSpec{2.0 * rng.uniform(), sphere_direction(theta, phi)});

    Eigen::Matrix3d r;
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        r(i, k) = (u.adjoint() * gens[i] * u * gens[k]).trace().real() /
                  casimir_norm;
      }
    }
    CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).norm() < 1e-10);

    const StateVector rotated(u * psi.amplitudes());
    const Eigen::Matrix3d direct = covariance_matrix(rotated, label);
    const Eigen::Matrix3d transported =
        r * covariance_matrix(psi, label) * r.transpose();
    CHECK((direct - transported).norm() < 1e-10);
  }
}

TEST_CASE("sensing report ties the pieces together") {
  Rng rng(706);
  const SpinLabel label{6};
  const StateVector psi = haar_pure_state(label.dimension(), rng);
  const SensingReport report = sensing_report(psi, label);

  CHECK(report.scs == doctest::Approx(scs_pure(psi, label)).epsilon(1e-12));
  CHECK(report.trace_cov == doctest::Approx(report.covariance.trace()).epsilon(1e-13));
  CHECK(report.trace_cov ==
        doctest::Approx(label.j() * report.scs).epsilon(1e-10));
  CHECK(report.axis_mean_qfi ==
        doctest::Approx(4.0 / 3.0 * report.trace_cov).epsilon(1e-10));
  CHECK(report.bound.inverse_trace_cov ==
        doctest::Approx(1.0 / report.trace_cov).epsilon(1e-12));
  REQUIRE(report.qfi_of_axis);
  CHECK(report.qfi_of_axis(Eigen::Vector3d::UnitY()) ==
        doctest::Approx(qfi_axis(psi, label, Eigen::Vector3d::UnitY()))
            .epsilon(1e-11));
}

TEST_CASE("metrology rejects the trivial irrep and mismatched states") {
  const SpinLabel label{0};
  Vector one = Vector::Ones(1);
  CHECK_THROWS_AS(multiparameter_bound(StateVector(one), label),
                  DegenerateStateError);
  CHECK_THROWS_AS(covariance_matrix(StateVector(one), SpinLabel{2}),
                  ValidationError);
}
