// SPDX-License-Identifier: Apache-2.0
#include "optheory/suites.hpp"

#include <algorithm>
#include <cmath>

#include "optheory/calibration.hpp"
#include "optheory/cone.hpp"
#include "optheory/models.hpp"
#include "optheory/theory.hpp"

namespace optheory {
namespace suites {
namespace {

std::string sample_note(int samples) { return std::to_string(samples) + " seeded samples"; }

}  // namespace

std::vector<CheckRecord> theory_properties(const Theory& theory, int samples,
                                           std::uint64_t seed, double tol) {
  std::vector<CheckRecord> out;
  SplitMix64 root(seed);

  {
    // ω(b̄∘A) = ω_A(b̄)·ω(ā) whenever conditioning is defined
    SplitMix64 rng = root.split();
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const StateVector s = random_state(theory, rng);
      const TransformationMatrix a = random_transformation(theory, rng);
      const TransformationMatrix b = random_transformation(theory, rng);
      const double pa = probability(s, effect_of(a, theory));
      if (pa <= 1e-6) continue;
      const auto cond = conditional_state(s, a, theory, tol);
      const double chained = probability(s, effect_of(compose(b, a), theory));
      const double split_path = probability(cond.state, effect_of(b, theory)) * pa;
      worst = std::max(worst, std::abs(chained - split_path));
    }
    out.push_back({"bayes-chaining", worst <= 1e-10, false, worst, sample_note(samples)});
  }
  {
    SplitMix64 rng = root.split();
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      const TransformationMatrix b = random_transformation(theory, rng);
      const TransformationMatrix c = random_transformation(theory, rng);
      worst = std::max(worst, max_abs(compose(compose(a, b), c).right_action -
                                      compose(a, compose(b, c)).right_action));
    }
    out.push_back(
        {"monoid-associativity", worst <= 1e-12, false, worst, sample_note(samples)});
  }
  {
    SplitMix64 rng = root.split();
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      worst = std::max(worst, max_abs(compose(a, theory.identity).right_action -
                                      a.right_action));
      worst = std::max(worst, max_abs(compose(theory.identity, a).right_action -
                                      a.right_action));
    }
    out.push_back({"identity-neutral-composition", worst == 0.0, false, worst,
                   "two-sided, exact equality required"});
  }
  {
    SplitMix64 rng = root.split();
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      const TransformationMatrix b = random_transformation(theory, rng);
      const double lambda = rng.next_double();
      const TransformationMatrix mix =
          add(scale(lambda, a), scale(1.0 - lambda, b));
      worst = std::max(worst, physicality_residual(mix.right_action, theory));
    }
    out.push_back({"convexity-closure", worst <= tol, false, worst, sample_note(samples)});
  }
  return out;
}

std::vector<CheckRecord> faithfulness_suite(const Theory& theory, const BipartiteForm& form,
                                            int samples, std::uint64_t seed, double tol) {
  std::vector<CheckRecord> out;
  SplitMix64 root(seed);

  {
    const double res = form.symmetry_defect();
    out.push_back({"form-symmetry", res <= tol, false, res, "F = Fᵀ"});
  }
  {
    const double res =
        std::abs(form.value(theory.unit_effect, theory.unit_effect) - 1.0);
    out.push_back({"form-normalization", res <= tol, false, res, "Φ(e,e) = 1"});
  }
  {
    double worst = 0.0;
    for (const auto& a : theory.transformations) {
      for (const auto& b : theory.transformations) {
        const double v = form.value(effect_of(a, theory), effect_of(b, theory));
        worst = std::max({worst, -v, v - 1.0});
      }
    }
    worst = std::max(0.0, worst);
    out.push_back({"form-effect-range", worst <= tol, false, worst,
                   "Φ(ā, b̄) ∈ [0,1] on generator effects"});
  }
  {
    double res = 0.0;
    for (int side = 1; side <= 2; ++side) {
      const StateVector local = form.local_state(theory.unit_effect, side);
      res = std::max(res, std::abs(probability(local, theory.unit_effect) - 1.0));
    }
    out.push_back({"local-state-normalization", res <= tol, false, res, "both marginals"});
  }
  {
    const FaithfulnessReport rep = dynamical_faithfulness(form, tol);
    out.push_back({"dynamical-faithfulness", rep.faithful, false,
                   static_cast<double>(rep.dim - rep.rank),
                   "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.dim)});
  }

  if (form.faithful(tol)) {
    SplitMix64 rng = root.split();
    double worst_inv = 0.0, worst_anti = 0.0, worst_def = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      const TransformationMatrix b = random_transformation(theory, rng);
      const TransformationMatrix at = transposed(a, form, tol);
      worst_inv = std::max(worst_inv, max_abs(transposed(at, form, tol).right_action -
                                              a.right_action));
      worst_anti = std::max(
          worst_anti, max_abs(transposed(compose(a, b), form, tol).right_action -
                              compose(transposed(b, form, tol), at).right_action));
      worst_def = std::max(worst_def,
                           max_abs(a.right_action * form.matrix() -
                                   form.matrix() * at.right_action.transpose()));
    }
    const double worst_id = max_abs(
        transposed(theory.identity, form, tol).right_action - theory.identity.right_action);
    out.push_back(
        {"transposition-involution", worst_inv <= 1e-9, false, worst_inv, sample_note(samples)});
    out.push_back({"transposition-antihomomorphism", worst_anti <= 1e-9, false, worst_anti,
                   sample_note(samples)});
    out.push_back({"transposition-defining-relation", worst_def <= 1e-10, false, worst_def,
                   "R_A·F = F·R_{A'}ᵀ"});
    out.push_back({"transposition-identity", worst_id <= 1e-12, false, worst_id, "I' = I"});

    const PreparationalReport prep = preparational_faithfulness(form, theory, tol);
    double min_lambda = 1.0;
    for (const auto& entry : prep.entries) min_lambda = std::min(min_lambda, entry.lambda);
    out.push_back({"preparational-faithfulness", prep.faithful, false,
                   prep.faithful ? 0.0 : 1.0,
                   std::to_string(prep.entries.size()) +
                       " extremal states, min λ = " + std::to_string(min_lambda)});
  }
  return out;
}

std::vector<CheckRecord> gns_suite(const GnsSpace& space, int samples, std::uint64_t seed,
                                   double tol) {
  std::vector<CheckRecord> out;
  const Theory& theory = space.theory();
  const BipartiteForm& form = space.form();
  SplitMix64 root(seed);

  {
    const Matrix& s = space.sign().s;
    const double res =
        max_abs(Matrix(s * s - Matrix::Identity(s.rows(), s.cols())));
    out.push_back({"sign-involution-squares", res <= 1e-12, false, res, "S² = 1"});
  }
  {
    const SymEig abs_eig = eigh(Matrix(space.sign().s * form.matrix()));
    const double lmin = abs_eig.values.minCoeff();
    out.push_back({"abs-form-positive-definite", lmin > 0.0, false,
                   std::max(0.0, -lmin), "min eigenvalue of S·F = " + std::to_string(lmin)});
  }
  {
    SplitMix64 rng = root.split();
    double worst_inv = 0.0, worst_anti = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      const TransformationMatrix b = random_transformation(theory, rng);
      const TransformationMatrix ad = adjoint(a, form, space.sign(), tol);
      worst_inv = std::max(worst_inv,
                           max_abs(adjoint(ad, form, space.sign(), tol).right_action -
                                   a.right_action));
      worst_anti = std::max(
          worst_anti,
          max_abs(adjoint(compose(a, b), form, space.sign(), tol).right_action -
                  compose(adjoint(b, form, space.sign(), tol), ad).right_action));
    }
    const double worst_id =
        max_abs(adjoint(theory.identity, form, space.sign(), tol).right_action -
                theory.identity.right_action);
    out.push_back(
        {"adjoint-involution", worst_inv <= 1e-9, false, worst_inv, sample_note(samples)});
    out.push_back({"adjoint-antihomomorphism", worst_anti <= 1e-9, false, worst_anti,
                   sample_note(samples)});
    out.push_back({"adjoint-identity", worst_id <= 1e-12, false, worst_id, "I† = I"});
  }
  {
    const Vector& spectrum = space.gram_spectrum();
    const double lmax = spectrum.maxCoeff();
    const double lmin = spectrum.minCoeff();
    out.push_back({"gram-psd", lmin >= -1e-9 * lmax, false, std::max(0.0, -lmin),
                   "λ_min = " + std::to_string(lmin) + ", λ_max = " + std::to_string(lmax)});
  }
  {
    const double res = space.left_ideal_residual();
    const double lmax = space.gram_spectrum().maxCoeff();
    out.push_back({"left-ideal", res <= 1e-8 * lmax, false, res,
                   std::to_string(space.basis_size() - space.dim()) + " null directions"});
  }
  {
    SplitMix64 rng = root.split();
    double worst_hom = 0.0, worst_adj = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      const TransformationMatrix b = random_transformation(theory, rng);
      const CMatrix pa = space.representation(a);
      const CMatrix pb = space.representation(b);
      worst_hom =
          std::max(worst_hom, max_abs(CMatrix(space.representation(compose(a, b)) - pa * pb)));
      worst_adj = std::max(
          worst_adj,
          max_abs(CMatrix(space.representation(adjoint(a, form, space.sign(), tol)) -
                          pa.adjoint())));
    }
    out.push_back({"representation-homomorphism", worst_hom <= 1e-9, false, worst_hom,
                   sample_note(samples)});
    out.push_back({"representation-adjoint-compatibility", worst_adj <= 1e-9, false,
                   worst_adj, "π(A†) = π(A)ᴴ, " + sample_note(samples)});
  }

  // informational (construction-premise) checks
  {
    out.push_back({"quotient-dimension", space.identification_holds(), true,
                   static_cast<double>(space.dim()),
                   "dim H = " + std::to_string(space.dim()) +
                       ", effect dim = " + std::to_string(theory.effect_dim)});
  }
  {
    // GNS norm of zero-effect elements: nonzero means the effect-level scalar
    // product depends on the representative, not only on the effect
    SplitMix64 rng = root.split();
    double worst = 0.0;
    const RowVector& e = theory.unit_effect.coords;
    Eigen::Index pivot = 0;
    e.cwiseAbs().maxCoeff(&pivot);
    for (int k = 0; k < std::max(1, samples / 5); ++k) {
      const TransformationMatrix b = random_transformation(theory, rng);
      Matrix z = b.right_action;
      const RowVector defect = e * z;
      z.row(pivot) -= defect / e[pivot];
      const CVector cls = space.embed(cplx(z));
      worst = std::max(worst, cls.norm());
    }
    out.push_back({"representative-independence", worst <= tol, true, worst,
                   "max GNS norm over zero-effect elements"});
  }
  {
    const RowVector es = theory.unit_effect.coords * space.sign().s;
    const double res = (es - theory.unit_effect.coords).cwiseAbs().maxCoeff();
    out.push_back({"unit-effect-sign-invariance", res <= tol, true, res, "ς(ē) = ē"});
  }
  return out;
}

std::vector<CheckRecord> cstar_suite(const GnsSpace& space, int samples, std::uint64_t seed,
                                     double tol) {
  std::vector<CheckRecord> out;
  const Theory& theory = space.theory();
  SplitMix64 root(seed);

  {
    const double res = std::abs(space.operator_norm(theory.identity) - 1.0);
    out.push_back({"operator-norm-identity", res <= 1e-8, false, res, "‖1‖ = 1"});
  }
  {
    SplitMix64 rng = root.split();
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      const double lambda = 2.0 * rng.next_double();
      worst = std::max(worst, std::abs(space.operator_norm(scale(lambda, a)) -
                                       lambda * space.operator_norm(a)));
    }
    out.push_back(
        {"operator-norm-homogeneity", worst <= 1e-8, false, worst, sample_note(samples)});
  }
  {
    SplitMix64 rng = root.split();
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      worst = std::max(worst, space.cstar_residual(a));
    }
    out.push_back({"cstar-identity", worst <= 1e-6, false, worst,
                   "relative residual of ‖A†∘A‖ = ‖A‖², " + sample_note(samples)});
  }
  {
    SplitMix64 rng = root.split();
    bool ok = true;
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const TransformationMatrix a = random_transformation(theory, rng);
      const TransformationMatrix b = random_transformation(theory, rng);
      const double lhs = std::abs(space.scalar_product(cplx(a.right_action),
                                                       cplx(b.right_action)));
      const double rhs = space.vector_norm(cplx(a.right_action)) *
                         space.vector_norm(cplx(b.right_action));
      worst = std::max(worst, lhs - rhs);
      if (lhs > rhs + 1e-10) ok = false;
    }
    out.push_back({"cauchy-schwarz", ok, false, std::max(0.0, worst), sample_note(samples)});
  }
  return out;
}

std::vector<CheckRecord> born_suite(const GnsSpace& space, int trials, std::uint64_t seed,
                                    double tol) {
  std::vector<CheckRecord> out;
  const Theory& theory = space.theory();
  SplitMix64 root(seed);

  {
    SplitMix64 rng = root.split();
    double worst_plain = 0.0, worst_cond = 0.0;
    for (int k = 0; k < trials; ++k) {
      // mix pure extremal targets with interior states
      StateVector omega =
          (k % 3 == 0 && !theory.extremal_states.empty())
              ? theory.extremal_states[static_cast<std::size_t>(k / 3) %
                                       theory.extremal_states.size()]
                    .state
              : random_state(theory, rng);
      const TransformationMatrix a = random_transformation(theory, rng);
      const TransformationMatrix b = random_transformation(theory, rng);
      const CVector rho = space.born_state(omega);
      const double direct = probability(omega, effect_of(a, theory));
      worst_plain = std::max(worst_plain,
                             std::abs(space.born_probability(a, rho) - direct));
      const double direct_cond = probability(omega, effect_of(compose(b, a), theory));
      worst_cond = std::max(
          worst_cond,
          std::abs(space.born_conditional_probability(b, a, rho) - direct_cond));
    }
    out.push_back({"born-two-path-effect", worst_plain <= 1e-8, false, worst_plain,
                   std::to_string(trials) + " seeded triples"});
    out.push_back({"born-two-path-conditioned", worst_cond <= 1e-8, false, worst_cond,
                   "⟨B†|π(A)|ρ⟩ form"});
  }

  if (!theory.extremal_states.empty()) {
    // pure-state filter case: prepare the first declared extremal state
    const StateVector& target = theory.extremal_states.front().state;
    const PreparationResult prep =
        find_preparing_transformation(space.form(), target, theory, tol);
    double worst = 1.0;
    if (prep.preparable(tol)) {
      const CVector rho = space.born_state(target);
      worst = 0.0;
      for (const auto& a : theory.transformations)
        worst = std::max(worst, std::abs(space.born_probability(a, rho) -
                                         probability(target, effect_of(a, theory))));
    }
    out.push_back({"born-filter-case", prep.preparable(tol) && worst <= 1e-8, false, worst,
                   "target " + theory.extremal_states.front().name +
                       ", λ = " + std::to_string(prep.lambda)});
  }
  return out;
}

std::vector<CheckRecord> calibration_roundtrip_suite(const Theory& theory,
                                                     const BipartiteForm& form,
                                                     int samples, std::uint64_t seed,
                                                     double tol) {
  std::vector<CheckRecord> out;
  const FiducialSet fid = default_fiducials(theory);
  SplitMix64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const TransformationMatrix truth = random_transformation(theory, rng);
    const Matrix p = joint_probabilities(form, truth, fid, fid, tol);
    const TransformationMatrix est = estimate_transformation(p, form, fid, fid, tol);
    worst = std::max(worst, max_abs(est.right_action - truth.right_action));
  }
  out.push_back({"calibration-roundtrip", worst <= 1e-10, false, worst,
                 "noiseless inversion, " + sample_note(samples)});
  return out;
}

}  // namespace suites
}  // namespace optheory
