// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "optheory/calibration.hpp"
#include "optheory/cone.hpp"
#include "optheory/models.hpp"
#include "optheory/theory.hpp"

using namespace optheory;

TEST_SUITE("calibration") {

TEST_CASE("joint probabilities of the untouched pair match the correlators") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);

  // z-basis branches on both sides: perfectly correlated halves
  FiducialSet z;
  z.effects.push_back(effect_of(qubit.transformation("meas_z_0"), qubit));
  z.effects.push_back(effect_of(qubit.transformation("meas_z_1"), qubit));
  const Matrix p = joint_probabilities(bell, qubit.identity, z, z);
  Matrix expected(2, 2);
  expected << 0.5, 0.0, 0.0, 0.5;
  CHECK(max_abs(p - expected) < 1e-14);

  // y-basis branches anticorrelate (the σy correlator is −1)
  FiducialSet y;
  y.effects.push_back(effect_of(qubit.transformation("meas_y_0"), qubit));
  y.effects.push_back(effect_of(qubit.transformation("meas_y_1"), qubit));
  const Matrix py = joint_probabilities(bell, qubit.identity, y, y);
  Matrix expected_y(2, 2);
  expected_y << 0.0, 0.5, 0.5, 0.0;
  CHECK(max_abs(py - expected_y) < 1e-14);
}

TEST_CASE("simulation is deterministic and counts add up") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  const FiducialSet fid = default_fiducials(qubit);
  const TransformationMatrix& t = qubit.transformation("amp_damp_half");

  const CountsTable a = simulate_outcomes(bell, t, fid, fid, 50000, 7);
  const CountsTable b = simulate_outcomes(bell, t, fid, fid, 50000, 7);
  CHECK(a.counts == b.counts);
  CHECK(a.no_occurrence == b.no_occurrence);

  std::int64_t total = a.no_occurrence;
  for (auto c : a.counts) total += c;
  CHECK(total == 50000);

  // frequencies approach the probabilities
  const Matrix p = joint_probabilities(bell, t, fid, fid);
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      CHECK(std::abs(static_cast<double>(a.at(i, j)) / 50000.0 - p(i, j)) < 0.01);
}

TEST_CASE("zero shots produce an empty table") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  const FiducialSet fid = default_fiducials(qubit);
  const CountsTable empty =
      simulate_outcomes(bell, qubit.identity, fid, fid, 0, 1);
  CHECK(empty.total == 0);
  CHECK(std::all_of(empty.counts.begin(), empty.counts.end(),
                    [](std::int64_t c) { return c == 0; }));
}

TEST_CASE("noiseless inversion recovers the exact transformation") {
  for (const auto& theory : {build_classical(2), build_qubit()}) {
    const BipartiteForm form = faithful_form(theory);
    const FiducialSet fid = default_fiducials(theory);
    SplitMix64 rng(123);
    for (int k = 0; k < 50; ++k) {
      const TransformationMatrix truth = random_transformation(theory, rng);
      const Matrix p = joint_probabilities(form, truth, fid, fid);
      const TransformationMatrix est = estimate_transformation(p, form, fid, fid);
      CHECK(max_abs(est.right_action - truth.right_action) <= 1e-10);
    }
  }
}

TEST_CASE("estimation error metrics") {
  const Theory qubit = build_qubit();
  const TransformationMatrix& rx = qubit.transformation("rx90");
  CHECK(estimation_error(rx, rx, qubit).frobenius == 0.0);

  TransformationMatrix bumped = rx;
  bumped.right_action(0, 0) += 1e-3;
  const EstimationError err = estimation_error(bumped, rx, qubit);
  CHECK(std::abs(err.frobenius - 1e-3) < 1e-12);
}

TEST_CASE("statistical calibration of the x-rotation at seed 42") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  const FiducialSet fid = default_fiducials(qubit);
  const TransformationMatrix& truth = qubit.transformation("rx90");
  const CountsTable counts = simulate_outcomes(bell, truth, fid, fid, 1000000, 42);
  const TransformationMatrix est = estimate_from_counts(counts, bell, fid, fid);
  CHECK(estimation_error(est, truth, qubit).frobenius < 0.01);
}

TEST_CASE("error decays roughly as the square root of the shot count") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  const FiducialSet fid = default_fiducials(qubit);
  const TransformationMatrix& truth = qubit.transformation("ry90");

  std::vector<double> small_errors, big_errors;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto c1 = simulate_outcomes(bell, truth, fid, fid, 10000, seed);
    const auto c2 = simulate_outcomes(bell, truth, fid, fid, 1000000, seed + 100);
    small_errors.push_back(
        estimation_error(estimate_from_counts(c1, bell, fid, fid), truth, qubit)
            .frobenius);
    big_errors.push_back(
        estimation_error(estimate_from_counts(c2, bell, fid, fid), truth, qubit)
            .frobenius);
  }
  std::sort(small_errors.begin(), small_errors.end());
  std::sort(big_errors.begin(), big_errors.end());
  const double ratio = big_errors[5] / small_errors[5];  // medians
  CHECK(ratio < 0.3);    // expected ≈ 0.1, allow a factor of three
  CHECK(ratio > 0.033);
}

TEST_CASE("run_calibration bundles a consistent record") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  const CalibrationRun run =
      run_calibration(qubit, bell, qubit.transformation("amp_damp_half"), 30000, 11);
  std::int64_t total = run.counts.no_occurrence;
  for (auto c : run.counts.counts) total += c;
  CHECK(total == run.shots);
  CHECK(run.error.frobenius < 0.1);
  CHECK(run.seed == 11);
}

TEST_CASE("inconsistent joint data is rejected as a model error") {
  const Theory qubit = build_qubit();
  const FiducialSet fid = default_fiducials(qubit);
  // a negated form produces negative outcome probabilities
  const BipartiteForm negated(Matrix(-*qubit.faithful_form));
  CHECK_THROWS_AS(
      joint_probabilities(negated, qubit.transformation("meas_z_0"), fid, fid),
      ConeError);
}

TEST_CASE("identifiability guards") {
  const Theory qubit = build_qubit();
  const BipartiteForm bell = faithful_form(qubit);
  const FiducialSet fid = default_fiducials(qubit);

  // rank-deficient form
  Vector s(4);
  s << 0.5, 0, 0, 0.5;
  const BipartiteForm product(Matrix(s * s.transpose()));
  const Matrix p = Matrix::Zero(4, 4);
  CHECK_THROWS_AS(estimate_transformation(p, product, fid, fid),
                  IdentifiabilityError);

  // rank-deficient fiducials
  FiducialSet degenerate;
  for (int k = 0; k < 4; ++k) degenerate.effects.push_back(qubit.unit_effect);
  CHECK_THROWS_AS(estimate_transformation(p, bell, degenerate, fid),
                  IdentifiabilityError);
}

TEST_CASE("cone projection repairs small negativity") {
  const Theory qubit = build_qubit();
  const TransformationMatrix& rx = qubit.transformation("rx90");
  TransformationMatrix noisy = rx;
  noisy.right_action(1, 2) += 0.02;  // breaks complete positivity slightly
  const TransformationMatrix fixed = project_to_physical(noisy, qubit);
  CHECK(cone_residual(fixed.right_action, qubit) < 1e-9);
  CHECK(max_abs(fixed.right_action - rx.right_action) < 0.1);
}

TEST_CASE("default fiducials are complete observables") {
  for (const auto& theory : {build_classical(3), build_qubit()}) {
    const FiducialSet fid = default_fiducials(theory);
    CHECK(is_observable(fid.effects, theory));
    CHECK(is_informationally_complete(fid.effects, theory));
  }
}

}  // TEST_SUITE
