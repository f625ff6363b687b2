// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "optheory/bipartite.hpp"

namespace optheory {

/// Spectral sign operator S = P₊ − P₋ of a faithful form: S² = 1, S = Sᵀ and
/// S·F is symmetric positive definite. On effect rows the involution acts as
/// a ↦ a·S; on transformations as R ↦ S·R·S with scalar coefficients
/// conjugated, which is the conjugation of the algebra.
struct SignInvolution {
  Matrix s;
  Vector form_eigenvalues;
};

/// Throws FaithfulnessError when F has a numerically zero eigenvalue.
SignInvolution sign_involution(const BipartiteForm& form, double tol = 1e-9);

TransformationMatrix conjugated(const TransformationMatrix& t, const SignInvolution& sign);
CMatrix conjugated(const CMatrix& right_action, const SignInvolution& sign);

/// Adjoint A† = conjugated transposition: R_{A†} = S·F·R_A*ᵀ·F⁻¹·S.
/// Anti-homomorphism: (A∘B)† = B†∘A†, (A†)† = A, I† = I.
TransformationMatrix adjoint(const TransformationMatrix& t, const BipartiteForm& form,
                             const SignInvolution& sign, double tol = 1e-9);
CMatrix adjoint(const CMatrix& right_action, const BipartiteForm& form,
                const SignInvolution& sign, double tol = 1e-9);

/// Gram matrix G_ij = φ(B_i†∘B_j) of a spanning set, where φ is the local
/// state of the form. Hermitian and positive semidefinite when the
/// construction premises hold.
CMatrix gram_matrix(const std::vector<CMatrix>& basis, const BipartiteForm& form,
                    const SignInvolution& sign, const EffectVector& unit,
                    double tol = 1e-9);

/// Quotient of the spanning set by the numerical null space of its Gram
/// matrix. Eigenvalues below null_threshold·λ_max are treated as zero; a
/// negative eigenvalue below −tol·λ_max throws PositivityError.
struct Quotient {
  Vector gram_spectrum;  // ascending
  Matrix basis;          // kept eigenvectors (columns, Euclidean-orthonormal)
  Vector kept_values;    // their Gram eigenvalues
  Matrix null_basis;     // null-space eigenvectors
  int dim_h() const { return static_cast<int>(kept_values.size()); }
};
Quotient null_space_quotient(const Matrix& gram, double null_threshold, double tol);

/// The GNS representation space built from a theory and a faithful bipartite
/// form: spanning set = the d² matrix units of the transformation space with
/// complex coefficients, scalar product ⟨A|B⟩ = φ(A†∘B), quotient by the
/// zero-norm left ideal, and left-multiplication representation π on the
/// quotient. Construction is single-shot; afterwards the object is immutable
/// and all queries are pure.
class GnsSpace {
 public:
  struct Options {
    double tol = 1e-9;
    double null_threshold = 1e-10;  // relative to λ_max of the Gram matrix
  };

  GnsSpace(const Theory& theory, const BipartiteForm& form);
  GnsSpace(const Theory& theory, const BipartiteForm& form, Options opts);

  const Theory& theory() const { return theory_; }
  const BipartiteForm& form() const { return form_; }
  const SignInvolution& sign() const { return sign_; }
  const Options& options() const { return opts_; }

  int basis_size() const { return static_cast<int>(gram_.rows()); }
  int dim() const { return quotient_.dim_h(); }
  bool identification_holds() const { return dim() == theory_.effect_dim; }
  const Matrix& gram() const { return gram_; }
  const Vector& gram_spectrum() const { return quotient_.gram_spectrum; }
  const Quotient& quotient() const { return quotient_; }

  /// Coordinates of the class of an algebra element in the orthonormal
  /// quotient basis.
  CVector embed(const CMatrix& right_action) const;
  CVector embed(const TransformationMatrix& t) const { return embed(cplx(t.right_action)); }

  /// Matrix of π(A): X ↦ A∘X on the quotient; homomorphic in ∘ and adjoint
  /// compatible: π(A†) = π(A)ᴴ.
  CMatrix representation(const CMatrix& right_action) const;
  CMatrix representation(const TransformationMatrix& t) const {
    return representation(cplx(t.right_action));
  }

  /// ⟨A|B⟩ = φ(A†∘B), conjugate linear in the first argument.
  Complex scalar_product(const CMatrix& a, const CMatrix& b) const;
  /// √⟨A|A⟩ (pre-quotient vector norm).
  double vector_norm(const CMatrix& a) const;
  /// sup_{‖B‖≤1} ‖A∘B‖ = largest singular value of π(A).
  double operator_norm(const CMatrix& right_action) const;
  double operator_norm(const TransformationMatrix& t) const {
    return operator_norm(cplx(t.right_action));
  }
  /// |‖A†∘A‖ − ‖A‖²| / max(1, ‖A‖²).
  double cstar_residual(const CMatrix& right_action) const;
  double cstar_residual(const TransformationMatrix& t) const {
    return cstar_residual(cplx(t.right_action));
  }
  bool cauchy_schwarz_ok(const CMatrix& a, const CMatrix& b, double tol) const;

  /// Worst G-norm of A∘X over null-space vectors X and the theory's
  /// generators A; the zero-norm set is a left ideal, so this should vanish.
  double left_ideal_residual() const;

  /// State vector in the quotient: ρ = class(T′_ω)/Φ(t̄_ω, ē), with T_ω from
  /// find_preparing_transformation. Throws FaithfulnessError when the state
  /// is not preparable.
  CVector born_state(const StateVector& omega) const;
  /// Born rule ω(ā) = ⟨A†|ρ⟩.
  double born_probability(const TransformationMatrix& a, const CVector& rho) const;
  /// Conditioned form ω(b̄∘A) = ⟨B†|π(A)|ρ⟩.
  double born_conditional_probability(const TransformationMatrix& b,
                                      const TransformationMatrix& a,
                                      const CVector& rho) const;

 private:
  Theory theory_;
  BipartiteForm form_;
  Options opts_;
  SignInvolution sign_;
  Matrix f_inverse_;
  Vector phi_local_;  // F·eᵀ, the Gram state
  Matrix gram_;
  Quotient quotient_;
  Vector sqrt_kept_;  // √λ_k of the kept eigenvalues
};

}  // namespace optheory
