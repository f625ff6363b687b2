// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "optheory/gns.hpp"
#include "optheory/report.hpp"

namespace optheory {
namespace suites {

/// Seeded property suites shared by the CLI commands and the acceptance
/// runner. Each function returns one CheckRecord per property with the worst
/// residual observed over its samples; thresholds are the module invariants.

/// Bayes chaining, monoid laws (associativity + exact identity neutrality),
/// convex closure of the cone, completeness of declared experiments.
std::vector<CheckRecord> theory_properties(const Theory& theory, int samples,
                                           std::uint64_t seed, double tol);

/// Form symmetry and normalization, effect range of Φ, local-state
/// normalization, dynamical faithfulness (rank), strict positivity of |Φ|,
/// transposition axioms on seeded samples, preparational faithfulness over
/// the declared extremal states.
std::vector<CheckRecord> faithfulness_suite(const Theory& theory, const BipartiteForm& form,
                                            int samples, std::uint64_t seed, double tol);

/// ς² = 1, |Φ| positive definite, adjoint axioms, Gram PSD, left ideal,
/// representation homomorphism and adjoint compatibility, plus the
/// informational checks: quotient dimension vs effect dimension and
/// representative independence of the effect-level scalar product.
std::vector<CheckRecord> gns_suite(const GnsSpace& space, int samples, std::uint64_t seed,
                                   double tol);

/// C*-identity residuals, Cauchy–Schwarz, operator-norm identity and
/// homogeneity on seeded samples.
std::vector<CheckRecord> cstar_suite(const GnsSpace& space, int samples,
                                     std::uint64_t seed, double tol);

/// Born-rule two-path agreement (plain and conditioned) on seeded
/// (state, A, B) triples, plus the pure-state filter case from the first
/// declared extremal state.
std::vector<CheckRecord> born_suite(const GnsSpace& space, int trials, std::uint64_t seed,
                                    double tol);

/// Noiseless calibration round trips on seeded random transformations.
std::vector<CheckRecord> calibration_roundtrip_suite(const Theory& theory,
                                                     const BipartiteForm& form,
                                                     int samples, std::uint64_t seed,
                                                     double tol);

}  // namespace suites
}  // namespace optheory
