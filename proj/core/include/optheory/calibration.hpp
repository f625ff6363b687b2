// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optheory/bipartite.hpp"
#include "optheory/rng.hpp"

namespace optheory {

/// Informationally complete observable used to probe one side of the joint
/// state during calibration.
struct FiducialSet {
  std::vector<EffectVector> effects;
  int size() const { return static_cast<int>(effects.size()); }
};

/// Point effects for classical theories, the tetrahedral branches for the
/// qubit; throws IdentifiabilityError when no informationally complete
/// observable is available.
FiducialSet default_fiducials(const Theory& theory);

struct CountsTable {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> counts;  // row-major rows×cols
  std::int64_t no_occurrence = 0;    // residual outcome (non-deterministic maps)
  std::int64_t total = 0;

  std::int64_t& at(int i, int j) { return counts[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const {
    return counts[static_cast<std::size_t>(i) * cols + j];
  }
};

/// Joint outcome probabilities p_ij = (f_i∘A applied to side 1, g_j on side 2)
/// = f_i·R_A·F·g_jᵀ. Throws ConeError on negative entries or a sum above one
/// beyond tol.
Matrix joint_probabilities(const BipartiteForm& form, const TransformationMatrix& t,
                           const FiducialSet& side1, const FiducialSet& side2,
                           double tol = 1e-9);

/// Multinomial draw of `shots` outcomes over the p_ij table plus the
/// no-occurrence residual; deterministic for a given seed.
CountsTable simulate_outcomes(const BipartiteForm& form, const TransformationMatrix& t,
                              const FiducialSet& side1, const FiducialSet& side2,
                              std::int64_t shots, std::uint64_t seed, double tol = 1e-9);

/// Least-squares inversion of p̂_ij = f_i·R·F·g_jᵀ for R. Requires a faithful
/// form and fiducial sets of full rank (IdentifiabilityError otherwise). With
/// exact probabilities the inversion is exact.
TransformationMatrix estimate_transformation(const Matrix& probabilities,
                                             const BipartiteForm& form,
                                             const FiducialSet& side1,
                                             const FiducialSet& side2, double tol = 1e-9,
                                             const std::string& name = "estimate");

TransformationMatrix estimate_from_counts(const CountsTable& counts,
                                          const BipartiteForm& form,
                                          const FiducialSet& side1,
                                          const FiducialSet& side2, double tol = 1e-9,
                                          const std::string& name = "estimate");

struct EstimationError {
  double frobenius = 0.0;
  double worst_probability_deviation = 0.0;
};
EstimationError estimation_error(const TransformationMatrix& estimate,
                                 const TransformationMatrix& truth, const Theory& theory);

/// Record of one complete calibration run. Counts always sum to the shot
/// count and the estimate is the least-squares inversion of the observed
/// frequencies (exact probabilities when shots == 0).
struct CalibrationRun {
  TransformationMatrix truth;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  FiducialSet side1;
  FiducialSet side2;
  CountsTable counts;
  TransformationMatrix estimate;
  EstimationError error;
};

CalibrationRun run_calibration(const Theory& theory, const BipartiteForm& form,
                               const TransformationMatrix& truth, std::int64_t shots,
                               std::uint64_t seed, double tol = 1e-9);

/// Optional post-step (off by default in the CLI): nearest physical-ish
/// representative of an estimate, by clipping against the theory's cone.
TransformationMatrix project_to_physical(const TransformationMatrix& estimate,
                                         const Theory& theory);

}  // namespace optheory
