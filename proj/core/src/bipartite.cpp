// SPDX-License-Identifier: Apache-2.0
#include "optheory/bipartite.hpp"

#include <cmath>
#include <functional>
#include <optional>

#include "optheory/cone.hpp"
#include "optheory/errors.hpp"

namespace optheory {

BipartiteForm::BipartiteForm(Matrix f) : f_(std::move(f)) {
  if (f_.rows() != f_.cols())
    throw DimensionError("bipartite form: matrix must be square");
  eig_ = eigh(f_);
}

double BipartiteForm::value(const EffectVector& a, const EffectVector& b) const {
  if (a.dim() != dim() || b.dim() != dim())
    throw DimensionError("bipartite form: effect dimension mismatch");
  return a.coords * f_ * b.coords.transpose();
}

StateVector BipartiteForm::local_state(const EffectVector& unit, int side) const {
  if (unit.dim() != dim())
    throw DimensionError("bipartite form: unit effect dimension mismatch");
  if (side == 1) return StateVector(f_ * unit.coords.transpose());
  if (side == 2) return StateVector(f_.transpose() * unit.coords.transpose());
  throw Error("local_state: side must be 1 or 2");
}

FaithfulnessReport dynamical_faithfulness(const BipartiteForm& form, double tol) {
  FaithfulnessReport out;
  out.dim = form.dim();
  out.rank = form.rank(tol);
  out.faithful = out.rank == out.dim;
  out.eigenvalues = form.spectrum().values;
  return out;
}

Matrix embed_system1(const Matrix& local, int d) {
  return kron(local, Matrix::Identity(d, d));
}

Matrix embed_system2(const Matrix& local, int d) {
  return kron(Matrix::Identity(local.rows(), local.cols()), local);
}

bool check_independence(const std::vector<Matrix>& side1, const std::vector<Matrix>& side2,
                        double tol) {
  for (const auto& a : side1) {
    for (const auto& b : side2) {
      if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("check_independence: dimension mismatch");
      if (max_abs(a * b - b * a) > tol) return false;
    }
  }
  return true;
}

TransformationMatrix transposed(const TransformationMatrix& t, const BipartiteForm& form,
                                double tol) {
  if (t.dim() != form.dim())
    throw DimensionError("transposed: dimension mismatch");
  const Matrix r =
      form.matrix() * t.right_action.transpose() * form.inverse(tol);
  return {t.name + "'", r};
}

CMatrix transposed(const CMatrix& right_action, const BipartiteForm& form, double tol) {
  return cplx(form.matrix()) * right_action.transpose() * cplx(form.inverse(tol));
}

namespace {

// Constructs a canonical transformation with a prescribed effect row, or
// nothing when no such element of the cone exists.
std::optional<Matrix> realize_effect(const RowVector& effect, const Theory& theory,
                                     double tol) {
  switch (theory.cone.kind) {
    case ConeKind::ClassicalSubstochastic: {
      for (Eigen::Index j = 0; j < effect.size(); ++j)
        if (effect[j] < -tol) return std::nullopt;
      Matrix t = Matrix::Zero(effect.size(), effect.size());
      t.diagonal() = effect.transpose();
      return t;
    }
    case ConeKind::QuantumChoi: {
      const int n = theory.cone.hilbert_dim;
      const CMatrix m = effect_operator(effect, n);
      const HermEig eig = eigh(m);
      if (eig.values.minCoeff() < -tol) return std::nullopt;
      if (eig.values.maxCoeff() > 1.0 + tol) return std::nullopt;
      CMatrix sqrt_m = CMatrix::Zero(n, n);
      for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        sqrt_m += std::sqrt(std::max(0.0, eig.values[k])) *
                  (eig.vectors.col(k) * eig.vectors.col(k).adjoint());
      // Heisenberg action E ↦ K†EK with K = √M has effect exactly M
      const auto basis = operator_basis(n);
      const auto d = static_cast<Eigen::Index>(basis.size());
      Matrix r(d, d);
      for (Eigen::Index nu = 0; nu < d; ++nu) {
        const CMatrix heis =
            sqrt_m.adjoint() * basis[static_cast<std::size_t>(nu)] * sqrt_m;
        for (Eigen::Index mu = 0; mu < d; ++mu)
          r(nu, mu) =
              (heis * basis[static_cast<std::size_t>(mu)]).trace().real() / n;
      }
      return r;
    }
    case ConeKind::Hull: {
      if (theory.transformations.empty()) return std::nullopt;
      const Eigen::Index d = effect.size();
      Matrix gens(d, static_cast<Eigen::Index>(theory.transformations.size()));
      for (std::size_t j = 0; j < theory.transformations.size(); ++j)
        gens.col(static_cast<Eigen::Index>(j)) =
            (theory.unit_effect.coords * theory.transformations[j].right_action)
                .transpose();
      const NnlsResult fit = nnls(gens, effect.transpose());
      if (fit.residual > tol * std::max(1.0, effect.norm())) return std::nullopt;
      Matrix t = Matrix::Zero(d, d);
      for (std::size_t j = 0; j < theory.transformations.size(); ++j)
        t += fit.coefficients[static_cast<Eigen::Index>(j)] *
             theory.transformations[j].right_action;
      return t;
    }
  }
  return std::nullopt;
}

// Largest feasible λ for a candidate family T(λ); the feasible set is an
// interval [0, λ*] because the cone is scale invariant and the dominance
// constraints are linear in λ.
PreparationResult maximize_lambda(
    const std::function<std::optional<Matrix>(double)>& candidate,
    const BipartiteForm& form, const Theory& theory, double tol) {
  auto feasible = [&](double lam) -> std::optional<Matrix> {
    auto t = candidate(lam);
    if (!t) return std::nullopt;
    if (!is_physical(*t, theory, tol)) return std::nullopt;
    return t;
  };

  std::optional<Matrix> best;
  if (auto t1 = feasible(1.0)) {
    best = t1;
  } else {
    const double probe = std::max(tol, 1e-12);
    if (auto tp = feasible(probe)) {
      best = tp;
      double lo = probe, hi = 1.0;
      for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (auto tm = feasible(mid)) {
          best = tm;
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
  }

  PreparationResult out;
  if (!best) {
    out.preparation =
        TransformationMatrix("0", Matrix::Zero(form.dim(), form.dim()));
    return out;  // not preparable
  }
  // achieved probability Φ(t̄, ē), recomputed from the matrix itself
  const RowVector eff = theory.unit_effect.coords * (*best);
  out.lambda = eff * form.matrix() * theory.unit_effect.coords.transpose();
  out.physical = true;
  out.preparation = TransformationMatrix("T_prep", *best);
  return out;
}

}  // namespace

PreparationResult find_preparing_transformation(const BipartiteForm& form,
                                                const StateVector& target,
                                                const Theory& theory, double tol) {
  if (target.dim() != form.dim())
    throw DimensionError("find_preparing_transformation: state dimension mismatch");
  if (!form.faithful(tol))
    throw FaithfulnessError("find_preparing_transformation: form is not faithful");
  // required effect row v with F·vᵀ = λ·s; at λ = 1, vᵀ = F⁻¹·s
  const RowVector v1 = (form.inverse(tol) * target.coords).transpose();
  return maximize_lambda(
      [&](double lam) { return realize_effect(RowVector(lam * v1), theory, tol); },
      form, theory, tol);
}

PreparationResult find_preparing_transformation(const BipartiteForm& form,
                                                const BipartiteForm& target,
                                                const Theory& theory, double tol) {
  if (target.dim() != form.dim())
    throw DimensionError("find_preparing_transformation: form dimension mismatch");
  if (!form.faithful(tol))
    throw FaithfulnessError("find_preparing_transformation: form is not faithful");
  const Matrix base = target.matrix() * form.inverse(tol);  // R_T at λ = 1
  return maximize_lambda(
      [&](double lam) -> std::optional<Matrix> { return Matrix(lam * base); }, form,
      theory, tol);
}

PreparationalReport preparational_faithfulness(const BipartiteForm& form,
                                               const Theory& theory, double tol) {
  PreparationalReport report;
  report.faithful = true;
  for (const auto& named : theory.extremal_states) {
    const PreparationResult r =
        find_preparing_transformation(form, named.state, theory, tol);
    report.entries.push_back({named.name, r.lambda, r.physical});
    if (!r.preparable(tol)) report.faithful = false;
  }
  return report;
}

}  // namespace optheory
