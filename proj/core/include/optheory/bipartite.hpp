// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "optheory/eig.hpp"
#include "optheory/theory.hpp"

namespace optheory {

/// Symmetric bilinear form F of a joint state of two identical systems,
/// evaluated on local effect rows as Φ(a, b) = a·F·bᵀ; Φ(e, e) = 1 for a
/// normalized state. The symmetric eigendecomposition is computed once at
/// construction and shared by every downstream consumer (rank and sign
/// queries, inversion, transposition). Immutable after construction.
class BipartiteForm {
 public:
  explicit BipartiteForm(Matrix f);

  int dim() const { return static_cast<int>(f_.rows()); }
  const Matrix& matrix() const { return f_; }
  const SymEig& spectrum() const { return eig_; }

  double value(const EffectVector& a, const EffectVector& b) const;
  double symmetry_defect() const { return max_abs(f_ - f_.transpose()); }

  /// Numerical rank: eigenvalues above rel_tol·max|λ|.
  int rank(double rel_tol) const { return numerical_rank(eig_.values, rel_tol); }
  bool faithful(double rel_tol) const { return rank(rel_tol) == dim(); }

  /// Spectral inverse; throws FaithfulnessError when rank deficient.
  Matrix inverse(double rel_tol) const { return spectral_inverse(eig_, rel_tol); }

  /// Marginal of the joint state: side 1 → F·eᵀ, side 2 → Fᵀ·eᵀ.
  StateVector local_state(const EffectVector& unit, int side) const;

 private:
  Matrix f_;
  SymEig eig_;
};

struct FaithfulnessReport {
  int rank = 0;
  int dim = 0;
  bool faithful = false;
  Vector eigenvalues;
};

/// A joint state is dynamically faithful exactly when A ↦ R_A·F is injective,
/// i.e. F has full numerical rank.
FaithfulnessReport dynamical_faithfulness(const BipartiteForm& form, double tol);

/// Local transformation on system 1 (2) of a bipartite effect space, acting
/// as R ⊗ 1 (1 ⊗ R) under the Kronecker composition convention.
Matrix embed_system1(const Matrix& local, int d);
Matrix embed_system2(const Matrix& local, int d);

/// Dynamical independence: every cross pair commutes within tol. Inputs are
/// right-action matrices on the d²-dimensional product effect space.
bool check_independence(const std::vector<Matrix>& side1, const std::vector<Matrix>& side2,
                        double tol = 1e-9);

/// Transposed transformation A′, the unique solution of R_A·F = F·R_{A′}ᵀ,
/// i.e. R_{A′} = F·R_Aᵀ·F⁻¹. Satisfies (A′)′ = A, (A∘B)′ = B′∘A′, I′ = I.
TransformationMatrix transposed(const TransformationMatrix& t, const BipartiteForm& form,
                                double tol = 1e-9);
CMatrix transposed(const CMatrix& right_action, const BipartiteForm& form, double tol = 1e-9);

struct PreparationResult {
  TransformationMatrix preparation;
  double lambda = 0.0;  // achieved probability
  bool physical = false;
  bool preparable(double tol = 1e-9) const { return physical && lambda > tol; }
};

/// Finds a local transformation T on system 1 that prepares the target local
/// state of system 2 (or the target joint form) with the largest achievable
/// probability λ ≤ 1: R_T·F = λ·Ω. λ is maximized by bisection against the
/// physicality oracle of the theory's cone. A non-preparable target yields
/// {λ = 0, physical = false}; a rank-deficient form throws FaithfulnessError.
PreparationResult find_preparing_transformation(const BipartiteForm& form,
                                                const StateVector& target,
                                                const Theory& theory, double tol = 1e-9);
PreparationResult find_preparing_transformation(const BipartiteForm& form,
                                                const BipartiteForm& target,
                                                const Theory& theory, double tol = 1e-9);

struct PreparationalReport {
  struct Entry {
    std::string state;
    double lambda = 0.0;
    bool physical = false;
  };
  std::vector<Entry> entries;
  bool faithful = false;
};

/// Preparational faithfulness sampled over the declared extremal states of
/// system 2: every one must be preparable with λ > tol.
PreparationalReport preparational_faithfulness(const BipartiteForm& form,
                                               const Theory& theory, double tol = 1e-9);

}  // namespace optheory
