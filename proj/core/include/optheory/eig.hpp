// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "optheory/errors.hpp"
#include "optheory/linalg.hpp"

namespace optheory {

/// Options of the cyclic Jacobi eigensolver. Convergence is declared once the
/// off-diagonal Frobenius norm falls below `threshold` times the Frobenius
/// norm of the input. The sweep order is fixed, so identical inputs produce
/// bit-identical decompositions; this solver is the single numeric kernel
/// behind signs, ranks, quotients and operator norms.
struct EigOptions {
  double threshold = 1e-14;
  int max_sweeps = 100;
};

/// Eigendecomposition of a real symmetric matrix: a = vectors·diag(values)·vectorsᵀ,
/// eigenvalues ascending. Each eigenvector column is normalized with its
/// largest-magnitude entry made positive (deterministic sign convention).
struct SymEig {
  Vector values;
  Matrix vectors;
};

/// Same for a complex Hermitian matrix; the largest-magnitude entry of each
/// eigenvector is made real positive.
struct HermEig {
  Vector values;
  CMatrix vectors;
};

SymEig eigh(const Matrix& a, const EigOptions& opts = {});
HermEig eigh(const CMatrix& a, const EigOptions& opts = {});

/// Number of eigenvalues with |λ| > rel_tol · max|λ|.
int numerical_rank(const Vector& values, double rel_tol);

/// Inverse from a symmetric eigendecomposition; eigenvalues below
/// rel_tol·max|λ| are rejected with FaithfulnessError.
Matrix spectral_inverse(const SymEig& eig, double rel_tol);

/// Least-squares solve a·x = rhs through the eigendecomposition of the (PSD)
/// normal matrix, dropping components with eigenvalue ≤ rel_tol·λ_max.
/// Returns the solution and the retained rank.
struct SpectralSolve {
  Vector x;
  int rank = 0;
};
SpectralSolve spectral_solve(const SymEig& eig, const Vector& rhs, double rel_tol);

}  // namespace optheory
