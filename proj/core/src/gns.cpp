// SPDX-License-Identifier: Apache-2.0
#include "optheory/gns.hpp"

#include <cmath>

#include "optheory/errors.hpp"

namespace optheory {

SignInvolution sign_involution(const BipartiteForm& form, double tol) {
  if (!form.faithful(tol))
    throw FaithfulnessError("sign_involution: form has a near-zero eigenvalue");
  const SymEig& eig = form.spectrum();
  const Eigen::Index d = eig.values.size();
  Matrix s = Matrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double sgn = eig.values[k] >= 0.0 ? 1.0 : -1.0;
    s += sgn * (eig.vectors.col(k) * eig.vectors.col(k).transpose());
  }
  return {s, eig.values};
}

TransformationMatrix conjugated(const TransformationMatrix& t, const SignInvolution& sign) {
  return {t.name + "^ς", sign.s * t.right_action * sign.s};
}

CMatrix conjugated(const CMatrix& right_action, const SignInvolution& sign) {
  return cplx(sign.s) * right_action.conjugate() * cplx(sign.s);
}

TransformationMatrix adjoint(const TransformationMatrix& t, const BipartiteForm& form,
                             const SignInvolution& sign, double tol) {
  const Matrix r = sign.s * form.matrix() * t.right_action.transpose() *
                   form.inverse(tol) * sign.s;
  return {t.name + "†", r};
}

CMatrix adjoint(const CMatrix& right_action, const BipartiteForm& form,
                const SignInvolution& sign, double tol) {
  return cplx(sign.s * form.matrix()) * right_action.adjoint() *
         cplx(form.inverse(tol) * sign.s);
}

CMatrix gram_matrix(const std::vector<CMatrix>& basis, const BipartiteForm& form,
                    const SignInvolution& sign, const EffectVector& unit, double tol) {
  const auto m = static_cast<Eigen::Index>(basis.size());
  const CVector phi = cplx(Vector(form.matrix() * unit.coords.transpose()));
  const CRowVector e = unit.coords.cast<Complex>();

  std::vector<CRowVector> left(basis.size());
  std::vector<CVector> right(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    left[j] = e * adjoint(basis[j], form, sign, tol);
    right[j] = basis[j] * phi;
  }
  CMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      g(i, j) = left[static_cast<std::size_t>(i)] * right[static_cast<std::size_t>(j)];
  return g;
}

Quotient null_space_quotient(const Matrix& gram, double null_threshold, double tol) {
  const SymEig eig = eigh(gram);
  Quotient q;
  q.gram_spectrum = eig.values;
  const double lmax = eig.values.size() ? eig.values.maxCoeff() : 0.0;
  if (eig.values.size() && eig.values.minCoeff() < -tol * std::max(lmax, 0.0))
    throw PositivityError("null_space_quotient: Gram matrix has a negative eigenvalue");

  std::vector<Eigen::Index> kept, null;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (lmax > 0.0 && eig.values[k] > null_threshold * lmax)
      kept.push_back(k);
    else
      null.push_back(k);
  }
  q.basis.resize(gram.rows(), static_cast<Eigen::Index>(kept.size()));
  q.kept_values.resize(static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    q.basis.col(static_cast<Eigen::Index>(k)) = eig.vectors.col(kept[k]);
    q.kept_values[static_cast<Eigen::Index>(k)] = eig.values[kept[k]];
  }
  q.null_basis.resize(gram.rows(), static_cast<Eigen::Index>(null.size()));
  for (std::size_t k = 0; k < null.size(); ++k)
    q.null_basis.col(static_cast<Eigen::Index>(k)) = eig.vectors.col(null[k]);
  return q;
}

namespace {

std::vector<CMatrix> matrix_units(int d) {
  std::vector<CMatrix> units;
  units.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  // column-major order so that unit index equals the vec() coordinate
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) {
      CMatrix u = CMatrix::Zero(d, d);
      u(r, c) = 1.0;
      units.push_back(u);
    }
  }
  return units;
}

}  // namespace

GnsSpace::GnsSpace(const Theory& theory, const BipartiteForm& form)
    : GnsSpace(theory, form, Options{}) {}

GnsSpace::GnsSpace(const Theory& theory, const BipartiteForm& form, Options opts)
    : theory_(theory), form_(form), opts_(opts) {
  sign_ = sign_involution(form_, opts_.tol);
  f_inverse_ = form_.inverse(opts_.tol);
  phi_local_ = form_.matrix() * theory_.unit_effect.coords.transpose();

  const CMatrix g =
      gram_matrix(matrix_units(theory_.effect_dim), form_, sign_, theory_.unit_effect,
                  opts_.tol);
  // real spanning set + real form data make the Gram matrix real
  gram_ = 0.5 * (g.real() + g.real().transpose());
  quotient_ = null_space_quotient(gram_, opts_.null_threshold, opts_.tol);
  sqrt_kept_ = quotient_.kept_values.cwiseMax(0.0).cwiseSqrt();
}

CVector GnsSpace::embed(const CMatrix& right_action) const {
  if (right_action.rows() != theory_.effect_dim ||
      right_action.cols() != theory_.effect_dim)
    throw DimensionError("embed: dimension mismatch");
  // coordinates ⟨q_k|X⟩ = √λ_k·u_kᵀ·vec(X)
  const CVector c = vec(right_action);
  CVector out = cplx(quotient_.basis).adjoint() * c;
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] *= sqrt_kept_[k];
  return out;
}

CMatrix GnsSpace::representation(const CMatrix& right_action) const {
  const int d = theory_.effect_dim;
  if (right_action.rows() != d || right_action.cols() != d)
    throw DimensionError("representation: dimension mismatch");
  const int h = dim();
  CMatrix pi(h, h);
  for (int l = 0; l < h; ++l) {
    const Matrix xl = unvec(Vector(quotient_.basis.col(l)), d, d);
    const CVector w = vec(CMatrix(right_action * cplx(xl)));
    CVector col = cplx(quotient_.basis).adjoint() * w;
    for (int k = 0; k < h; ++k) col[k] *= sqrt_kept_[k];
    pi.col(l) = col / sqrt_kept_[l];
  }
  return pi;
}

Complex GnsSpace::scalar_product(const CMatrix& a, const CMatrix& b) const {
  const CMatrix a_dag = adjoint(a, form_, sign_, opts_.tol);
  const CRowVector e = theory_.unit_effect.coords.cast<Complex>();
  return e * a_dag * b * cplx(phi_local_);
}

double GnsSpace::vector_norm(const CMatrix& a) const {
  return std::sqrt(std::max(0.0, scalar_product(a, a).real()));
}

double GnsSpace::operator_norm(const CMatrix& right_action) const {
  const CMatrix pi = representation(right_action);
  const HermEig eig = eigh(CMatrix(pi.adjoint() * pi));
  return std::sqrt(std::max(0.0, eig.values.size() ? eig.values.maxCoeff() : 0.0));
}

double GnsSpace::cstar_residual(const CMatrix& right_action) const {
  const CMatrix a_dag = adjoint(right_action, form_, sign_, opts_.tol);
  const double norm_a = operator_norm(right_action);
  const double norm_ada = operator_norm(CMatrix(a_dag * right_action));
  return std::abs(norm_ada - norm_a * norm_a) / std::max(1.0, norm_a * norm_a);
}

bool GnsSpace::cauchy_schwarz_ok(const CMatrix& a, const CMatrix& b, double tol) const {
  return std::abs(scalar_product(a, b)) <= vector_norm(a) * vector_norm(b) + tol;
}

double GnsSpace::left_ideal_residual() const {
  const int d = theory_.effect_dim;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < quotient_.null_basis.cols(); ++k) {
    const Matrix xn = unvec(Vector(quotient_.null_basis.col(k)), d, d);
    for (const auto& gen : theory_.transformations) {
      const Vector y = vec(Matrix(gen.right_action * xn));
      const double norm2 = y.transpose() * gram_ * y;
      worst = std::max(worst, std::sqrt(std::max(0.0, norm2)));
    }
  }
  return worst;
}

CVector GnsSpace::born_state(const StateVector& omega) const {
  const PreparationResult prep =
      find_preparing_transformation(form_, omega, theory_, opts_.tol);
  if (!prep.preparable(opts_.tol))
    throw FaithfulnessError("born_state: target state is not preparable");
  const TransformationMatrix t_prime = transposed(prep.preparation, form_, opts_.tol);
  // λ recomputed as the actual probability Φ(t̄, ē) keeps the two Born paths
  // consistent to machine precision
  const double lambda =
      theory_.unit_effect.coords * prep.preparation.right_action * phi_local_;
  if (lambda <= opts_.tol)
    throw FaithfulnessError("born_state: preparation has vanishing probability");
  return embed(cplx(Matrix(t_prime.right_action / lambda)));
}

double GnsSpace::born_probability(const TransformationMatrix& a, const CVector& rho) const {
  const CVector lhs = embed(cplx(adjoint(a, form_, sign_, opts_.tol).right_action));
  return lhs.dot(rho).real();
}

double GnsSpace::born_conditional_probability(const TransformationMatrix& b,
                                              const TransformationMatrix& a,
                                              const CVector& rho) const {
  const CVector lhs = embed(cplx(adjoint(b, form_, sign_, opts_.tol).right_action));
  return lhs.dot(representation(a) * rho).real();
}

}  // namespace optheory
