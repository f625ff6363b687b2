// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "optheory/bipartite.hpp"
#include "optheory/rng.hpp"
#include "optheory/theory.hpp"

namespace optheory {

/// Kraus decomposition {K_i} of a quantum operation on C^n; physical when
/// Σ K_i†K_i ≤ 1 (trace non-increasing).
struct KrausSet {
  std::vector<CMatrix> ops;

  int dim() const;
  CMatrix completeness() const;     // Σ K†K
  double trace_increase() const;    // max(0, λ_max(Σ K†K) − 1)
};

/// Right-action matrix of the Heisenberg dual E ↦ Σ K_i†·E·K_i in the
/// operator-basis coordinates; rejects trace-increasing sets.
TransformationMatrix ptm_from_kraus(const KrausSet& kraus, const std::string& name,
                                    double tol = 1e-9);

/// Classical probability on n points: point effects/states, substochastic
/// selectors, permutation and reset generators, perfectly correlated faithful
/// form F = 1/n.
Theory build_classical(int n);

/// One qubit in the operator-basis (Pauli) coordinates: unit effect
/// (2,0,0,0), rotation/measurement/damping generators, faithful Bell form
/// F = diag(1,1,−1,1)/4.
Theory build_qubit();

/// "qubit" or "classicalN" (N ≥ 1).
Theory build_model(const std::string& name);

/// The theory's declared faithful state as a BipartiteForm; throws when the
/// theory declares none.
BipartiteForm faithful_form(const Theory& theory);

/// Haar-like unitary from Gram–Schmidt on a complex Gaussian matrix.
CMatrix random_unitary(int n, SplitMix64& rng);

/// Gaussian Kraus set rescaled to be trace non-increasing.
KrausSet random_kraus(int n, SplitMix64& rng, int num_ops = 2);

/// Seeded random physical transformation for the theory's cone; always passes
/// cone membership.
TransformationMatrix random_transformation(const Theory& theory, SplitMix64& rng);

/// Random convex combination of the declared extremal states (normalized).
StateVector random_state(const Theory& theory, SplitMix64& rng);

}  // namespace optheory
