// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "optheory/types.hpp"

namespace optheory {

/// Hermitian operator basis {B_0 = I, ...} with Tr[B_μ·B_ν] = n·δ_μν. For
/// n = 2 the order is (I, σx, σy, σz). Quantum coordinates are fixed by this
/// basis: effect a_μ = Tr[E·B_μ], state s_μ = Tr[ρ·B_μ]/n, so that the
/// probability is the plain dot product a·s = Tr[E·ρ].
std::vector<CMatrix> operator_basis(int n);

CMatrix effect_operator(const RowVector& effect, int n);   // E = (1/n) Σ a_μ B_μ
RowVector effect_coords(const CMatrix& op, int n);         // a_μ = Tr[op·B_μ]
CMatrix density_operator(const Vector& state, int n);      // ρ = Σ s_μ B_μ
Vector state_coords(const CMatrix& rho, int n);            // s_μ = Tr[ρ·B_μ]/n

/// Normalized Choi matrix of a right-action matrix; positive semidefinite
/// exactly when the map is completely positive.
CMatrix choi_matrix(const Matrix& right_action, int n);
Matrix right_action_from_choi(const CMatrix& choi, int n);

/// Lawson–Hanson nonnegative least squares: min ‖a·x − b‖ subject to x ≥ 0.
struct NnlsResult {
  Vector coefficients;
  double residual = 0.0;
};
NnlsResult nnls(const Matrix& a, const Vector& b);

/// Distance-like violation of the theory's transformation cone (0 inside):
/// most negative entry (classical), most negative Choi eigenvalue (quantum),
/// or the best conic-combination residual (hull, solved as a nonnegative
/// least-squares feasibility program).
double cone_residual(const Matrix& right_action, const Theory& theory);
bool in_cone(const Matrix& right_action, const Theory& theory, double tol);

/// Physicality = cone membership plus 0 ≤ ā·s ≤ 1 on every declared extremal
/// state; the returned residual is the worst violation of either condition.
double physicality_residual(const Matrix& right_action, const Theory& theory);
bool is_physical(const Matrix& right_action, const Theory& theory, double tol);
bool is_physical(const TransformationMatrix& t, const Theory& theory, double tol);

}  // namespace optheory
