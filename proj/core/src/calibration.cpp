// SPDX-License-Identifier: Apache-2.0
#include "optheory/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "optheory/cone.hpp"
#include "optheory/eig.hpp"
#include "optheory/errors.hpp"
#include "optheory/theory.hpp"

namespace optheory {

FiducialSet default_fiducials(const Theory& theory) {
  FiducialSet out;
  switch (theory.cone.kind) {
    case ConeKind::ClassicalSubstochastic: {
      for (int i = 0; i < theory.effect_dim; ++i) {
        RowVector point = RowVector::Zero(theory.effect_dim);
        point[i] = 1.0;
        out.effects.emplace_back(point);
      }
      return out;
    }
    case ConeKind::QuantumChoi:
    case ConeKind::Hull: {
      // first declared experiment whose effects are informationally complete
      for (const auto& ex : theory.experiments) {
        FiducialSet cand;
        for (const auto& t : ex.members) cand.effects.push_back(effect_of(t, theory));
        if (is_observable(cand.effects, theory) &&
            is_informationally_complete(cand.effects, theory))
          return cand;
      }
      throw IdentifiabilityError(
          "default_fiducials: theory declares no informationally complete observable");
    }
  }
  throw IdentifiabilityError("default_fiducials: unsupported cone");
}

Matrix joint_probabilities(const BipartiteForm& form, const TransformationMatrix& t,
                           const FiducialSet& side1, const FiducialSet& side2,
                           double tol) {
  const Matrix acted = t.right_action * form.matrix();  // (A,1)Φ
  Matrix p(side1.size(), side2.size());
  double sum = 0.0;
  for (int i = 0; i < side1.size(); ++i) {
    for (int j = 0; j < side2.size(); ++j) {
      const double pij =
          side1.effects[static_cast<std::size_t>(i)].coords * acted *
          side2.effects[static_cast<std::size_t>(j)].coords.transpose();
      if (pij < -tol)
        throw ConeError("joint_probabilities: negative outcome probability");
      p(i, j) = pij;
      sum += pij;
    }
  }
  if (sum > 1.0 + tol)
    throw ConeError("joint_probabilities: probabilities exceed one");
  return p;
}

CountsTable simulate_outcomes(const BipartiteForm& form, const TransformationMatrix& t,
                              const FiducialSet& side1, const FiducialSet& side2,
                              std::int64_t shots, std::uint64_t seed, double tol) {
  const Matrix p = joint_probabilities(form, t, side1, side2, tol);

  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(p.size()) + 1);
  double sum = 0.0;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) {
      flat.push_back(std::max(0.0, p(i, j)));
      sum += flat.back();
    }
  flat.push_back(std::max(0.0, 1.0 - sum));  // no-occurrence outcome

  SplitMix64 rng(seed);
  const auto draws = multinomial(rng, flat, shots);

  CountsTable table;
  table.rows = static_cast<int>(p.rows());
  table.cols = static_cast<int>(p.cols());
  table.counts.assign(static_cast<std::size_t>(p.size()), 0);
  for (int i = 0; i < table.rows; ++i)
    for (int j = 0; j < table.cols; ++j)
      table.at(i, j) = draws[static_cast<std::size_t>(i) * table.cols + j];
  table.no_occurrence = draws.back();
  table.total = shots;
  return table;
}

TransformationMatrix estimate_transformation(const Matrix& probabilities,
                                             const BipartiteForm& form,
                                             const FiducialSet& side1,
                                             const FiducialSet& side2, double tol,
                                             const std::string& name) {
  const int d = form.dim();
  if (!form.faithful(tol))
    throw IdentifiabilityError("estimate_transformation: form is not faithful");
  if (effect_rank(side1.effects, tol) < d || effect_rank(side2.effects, tol) < d)
    throw IdentifiabilityError("estimate_transformation: fiducials are rank deficient");
  if (probabilities.rows() != side1.size() || probabilities.cols() != side2.size())
    throw DimensionError("estimate_transformation: probability table shape");

  // p_ij = f_i·R·h_j with h_j = F·g_jᵀ; one linear equation per cell in the
  // d² unknowns of R (column-major order, coefficient f_i[k]·h_j[l] at l·d+k)
  const Eigen::Index cells =
      static_cast<Eigen::Index>(side1.size()) * static_cast<Eigen::Index>(side2.size());
  Matrix design(cells, d * d);
  Vector rhs(cells);
  Eigen::Index row = 0;
  for (int i = 0; i < side1.size(); ++i) {
    const RowVector& f = side1.effects[static_cast<std::size_t>(i)].coords;
    for (int j = 0; j < side2.size(); ++j, ++row) {
      const Vector h =
          form.matrix() * side2.effects[static_cast<std::size_t>(j)].coords.transpose();
      for (int l = 0; l < d; ++l)
        for (int k = 0; k < d; ++k) design(row, l * d + k) = f[k] * h[l];
      rhs[row] = probabilities(i, j);
    }
  }

  const Matrix normal = design.transpose() * design;
  const Vector nrhs = design.transpose() * rhs;
  const SpectralSolve solve = spectral_solve(eigh(normal), nrhs, 1e-12);
  if (solve.rank < d * d)
    throw IdentifiabilityError("estimate_transformation: design matrix rank " +
                               std::to_string(solve.rank) + " < " +
                               std::to_string(d * d));
  return {name, unvec(solve.x, d, d)};
}

TransformationMatrix estimate_from_counts(const CountsTable& counts,
                                          const BipartiteForm& form,
                                          const FiducialSet& side1,
                                          const FiducialSet& side2, double tol,
                                          const std::string& name) {
  if (counts.total <= 0)
    throw IdentifiabilityError("estimate_from_counts: empty counts table");
  Matrix p(counts.rows, counts.cols);
  for (int i = 0; i < counts.rows; ++i)
    for (int j = 0; j < counts.cols; ++j)
      p(i, j) = static_cast<double>(counts.at(i, j)) / static_cast<double>(counts.total);
  return estimate_transformation(p, form, side1, side2, tol, name);
}

EstimationError estimation_error(const TransformationMatrix& estimate,
                                 const TransformationMatrix& truth, const Theory& theory) {
  if (estimate.dim() != truth.dim())
    throw DimensionError("estimation_error: dimension mismatch");
  EstimationError out;
  out.frobenius = (estimate.right_action - truth.right_action).norm();
  const RowVector diff =
      theory.unit_effect.coords * (estimate.right_action - truth.right_action);
  for (const auto& s : theory.extremal_states)
    out.worst_probability_deviation =
        std::max(out.worst_probability_deviation, std::abs(diff * s.state.coords));
  return out;
}

CalibrationRun run_calibration(const Theory& theory, const BipartiteForm& form,
                               const TransformationMatrix& truth, std::int64_t shots,
                               std::uint64_t seed, double tol) {
  CalibrationRun run;
  run.truth = truth;
  run.shots = shots;
  run.seed = seed;
  run.side1 = default_fiducials(theory);
  run.side2 = run.side1;
  if (shots == 0) {
    const Matrix p = joint_probabilities(form, truth, run.side1, run.side2, tol);
    run.estimate = estimate_transformation(p, form, run.side1, run.side2, tol);
    run.counts.rows = run.side1.size();
    run.counts.cols = run.side2.size();
    run.counts.counts.assign(
        static_cast<std::size_t>(run.counts.rows) * run.counts.cols, 0);
  } else {
    run.counts = simulate_outcomes(form, truth, run.side1, run.side2, shots, seed, tol);
    run.estimate = estimate_from_counts(run.counts, form, run.side1, run.side2, tol);
  }
  run.error = estimation_error(run.estimate, truth, theory);
  return run;
}

TransformationMatrix project_to_physical(const TransformationMatrix& estimate,
                                         const Theory& theory) {
  switch (theory.cone.kind) {
    case ConeKind::ClassicalSubstochastic: {
      Matrix r = estimate.right_action.cwiseMax(0.0);
      for (Eigen::Index j = 0; j < r.cols(); ++j) {
        const double colsum = r.col(j).sum();
        if (colsum > 1.0) r.col(j) /= colsum;
      }
      return {estimate.name + "_projected", r};
    }
    case ConeKind::QuantumChoi: {
      const int n = theory.cone.hilbert_dim;
      const HermEig eig = eigh(choi_matrix(estimate.right_action, n));
      CMatrix clipped = CMatrix::Zero(n * n, n * n);
      for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        clipped += std::max(0.0, eig.values[k]) *
                   (eig.vectors.col(k) * eig.vectors.col(k).adjoint());
      return {estimate.name + "_projected", right_action_from_choi(clipped, n)};
    }
    case ConeKind::Hull: {
      Matrix gens(estimate.right_action.size(),
                  static_cast<Eigen::Index>(theory.transformations.size()));
      for (std::size_t j = 0; j < theory.transformations.size(); ++j)
        gens.col(static_cast<Eigen::Index>(j)) =
            vec(theory.transformations[j].right_action);
      const NnlsResult fit = nnls(gens, vec(estimate.right_action));
      Matrix r = Matrix::Zero(estimate.dim(), estimate.dim());
      for (std::size_t j = 0; j < theory.transformations.size(); ++j)
        r += fit.coefficients[static_cast<Eigen::Index>(j)] *
             theory.transformations[j].right_action;
      return {estimate.name + "_projected", r};
    }
  }
  return estimate;
}

}  // namespace optheory
