// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "optheory/report.hpp"
#include "optheory/types.hpp"

namespace optheory {

struct ValidationReport {
  std::vector<CheckRecord> checks;
  bool all_passed() const;
  double worst_residual() const;
};

/// Runs every structural axiom of the theory: identity neutrality, state
/// normalization, effect ranges on the declared extremal states, completeness
/// of declared experiments and cone membership of the generators. Failures
/// become report entries, not exceptions; only malformed input (dimension
/// mismatches) throws.
ValidationReport validate_theory(const Theory& theory, double tol = 1e-9);

/// ω(ā) = ā·s.
double probability(const StateVector& state, const EffectVector& effect);

/// Effect of a transformation: e∘A = e·R_A.
EffectVector effect_of(const TransformationMatrix& t, const Theory& theory);

struct Conditioned {
  StateVector state;
  double probability = 0.0;
};

/// Bayes update ω_A = (R_A·s)/ω(ā); throws ConditioningError when the
/// probability does not exceed tol.
Conditioned conditional_state(const StateVector& state, const TransformationMatrix& t,
                              const Theory& theory, double tol = 1e-9);

/// A∘B (B occurs first): R_{A∘B} = R_A·R_B.
TransformationMatrix compose(const TransformationMatrix& a, const TransformationMatrix& b);

TransformationMatrix add(const TransformationMatrix& a, const TransformationMatrix& b);

/// Sum of two coexistent transformations; throws ConeError when the pair is
/// not coexistent in the theory.
TransformationMatrix add_coexistent(const TransformationMatrix& a,
                                    const TransformationMatrix& b, const Theory& theory,
                                    double tol = 1e-9);

/// λ·A; physical for 0 ≤ λ ≤ 1, generalized otherwise.
TransformationMatrix scale(double lambda, const TransformationMatrix& a);

/// True when ω(ā) + ω(b̄) ≤ 1 on every declared extremal state. The supremum
/// over all states is evaluated on the declared extremal list only.
bool are_coexistent(const TransformationMatrix& a, const TransformationMatrix& b,
                    const Theory& theory, double tol = 1e-9);

/// Same effect within tol.
bool informationally_equivalent(const TransformationMatrix& a, const TransformationMatrix& b,
                                const Theory& theory, double tol = 1e-9);

/// Same conditional states on every declared extremal state where both
/// probabilities exceed tol.
bool dynamically_equivalent(const TransformationMatrix& a, const TransformationMatrix& b,
                            const Theory& theory, double tol = 1e-9);

/// Observable: effects sum to the unit effect.
bool is_observable(const std::vector<EffectVector>& effects, const Theory& theory,
                   double tol = 1e-9);

/// Numerical rank of the span of the effect rows (singular values above
/// rel_tol·σ_max).
int effect_rank(const std::vector<EffectVector>& effects, double rel_tol = 1e-9);

/// Informationally complete: the effects span the whole effect space.
bool is_informationally_complete(const std::vector<EffectVector>& effects,
                                 const Theory& theory, double rel_tol = 1e-9);

/// Minimal informationally complete: spanning with exactly effect_dim members.
bool is_minimal_informationally_complete(const std::vector<EffectVector>& effects,
                                         const Theory& theory, double rel_tol = 1e-9);

}  // namespace optheory
