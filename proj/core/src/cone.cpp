// SPDX-License-Identifier: Apache-2.0
#include "optheory/cone.hpp"

#include <algorithm>
#include <cmath>

#include "optheory/eig.hpp"
#include "optheory/errors.hpp"

namespace optheory {

std::vector<CMatrix> operator_basis(int n) {
  if (n < 1) throw DimensionError("operator_basis: dimension must be positive");
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  basis.push_back(CMatrix::Identity(n, n));

  const double off = std::sqrt(n / 2.0);
  const Complex i_unit(0.0, 1.0);
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      CMatrix x = CMatrix::Zero(n, n);
      x(r, c) = off;
      x(c, r) = off;
      basis.push_back(x);
      CMatrix y = CMatrix::Zero(n, n);
      y(r, c) = -i_unit * off;
      y(c, r) = i_unit * off;
      basis.push_back(y);
    }
  }
  for (int k = 1; k < n; ++k) {
    CMatrix d = CMatrix::Zero(n, n);
    const double norm = std::sqrt(n / 2.0) * std::sqrt(2.0 / (k * (k + 1.0)));
    for (int j = 0; j < k; ++j) d(j, j) = norm;
    d(k, k) = -static_cast<double>(k) * norm;
    basis.push_back(d);
  }
  return basis;
}

CMatrix effect_operator(const RowVector& effect, int n) {
  const auto basis = operator_basis(n);
  if (effect.size() != static_cast<Eigen::Index>(basis.size()))
    throw DimensionError("effect_operator: coordinate length must be n²");
  CMatrix op = CMatrix::Zero(n, n);
  for (std::size_t mu = 0; mu < basis.size(); ++mu)
    op += (effect[static_cast<Eigen::Index>(mu)] / n) * basis[mu];
  return op;
}

RowVector effect_coords(const CMatrix& op, int n) {
  const auto basis = operator_basis(n);
  RowVector a(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t mu = 0; mu < basis.size(); ++mu)
    a[static_cast<Eigen::Index>(mu)] = (op * basis[mu]).trace().real();
  return a;
}

CMatrix density_operator(const Vector& state, int n) {
  const auto basis = operator_basis(n);
  if (state.size() != static_cast<Eigen::Index>(basis.size()))
    throw DimensionError("density_operator: coordinate length must be n²");
  CMatrix rho = CMatrix::Zero(n, n);
  for (std::size_t mu = 0; mu < basis.size(); ++mu)
    rho += state[static_cast<Eigen::Index>(mu)] * basis[mu];
  return rho;
}

Vector state_coords(const CMatrix& rho, int n) {
  const auto basis = operator_basis(n);
  Vector s(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t mu = 0; mu < basis.size(); ++mu)
    s[static_cast<Eigen::Index>(mu)] = (rho * basis[mu]).trace().real() / n;
  return s;
}

CMatrix choi_matrix(const Matrix& right_action, int n) {
  const auto basis = operator_basis(n);
  const auto d = static_cast<Eigen::Index>(basis.size());
  if (right_action.rows() != d || right_action.cols() != d)
    throw DimensionError("choi_matrix: right action must be n² × n²");
  CMatrix choi = CMatrix::Zero(n * n, n * n);
  for (Eigen::Index nu = 0; nu < d; ++nu) {
    for (Eigen::Index mu = 0; mu < d; ++mu) {
      const double r = right_action(nu, mu);
      if (r == 0.0) continue;
      choi += (r / static_cast<double>(n * n)) *
              kron(basis[static_cast<std::size_t>(nu)],
                   basis[static_cast<std::size_t>(mu)].transpose());
    }
  }
  return choi;
}

Matrix right_action_from_choi(const CMatrix& choi, int n) {
  const auto basis = operator_basis(n);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix r(d, d);
  for (Eigen::Index nu = 0; nu < d; ++nu)
    for (Eigen::Index mu = 0; mu < d; ++mu)
      r(nu, mu) = (choi * kron(basis[static_cast<std::size_t>(nu)],
                               basis[static_cast<std::size_t>(mu)].transpose()))
                      .trace()
                      .real();
  return r;
}

NnlsResult nnls(const Matrix& a, const Vector& b) {
  const Eigen::Index m = a.cols();
  Vector x = Vector::Zero(m);
  std::vector<bool> passive(static_cast<std::size_t>(m), false);

  const double wtol = 1e-12 * std::max(1.0, (a.transpose() * b).cwiseAbs().maxCoeff());
  const int max_outer = static_cast<int>(3 * m + 30);

  for (int outer = 0; outer < max_outer; ++outer) {
    const Vector w = a.transpose() * (b - a * x);
    Eigen::Index best = -1;
    double best_w = wtol;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (!passive[static_cast<std::size_t>(j)] && w[j] > best_w) {
        best_w = w[j];
        best = j;
      }
    }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;

    for (int inner = 0; inner <= m + 2; ++inner) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index j = 0; j < m; ++j)
        if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
      Matrix ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);

      const Matrix normal = ap.transpose() * ap;
      const Vector rhs = ap.transpose() * b;
      const Vector z = spectral_solve(eigh(normal), rhs, 1e-13).x;

      bool all_positive = true;
      for (Eigen::Index k = 0; k < z.size(); ++k)
        if (z[k] <= 0.0) all_positive = false;
      if (all_positive) {
        x.setZero();
        for (std::size_t k = 0; k < idx.size(); ++k) x[idx[k]] = z[static_cast<Eigen::Index>(k)];
        break;
      }

      double alpha = 1.0;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const double zk = z[static_cast<Eigen::Index>(k)];
        const double xk = x[idx[k]];
        if (zk <= 0.0 && xk - zk > 0.0) alpha = std::min(alpha, xk / (xk - zk));
      }
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const double zk = z[static_cast<Eigen::Index>(k)];
        x[idx[k]] += alpha * (zk - x[idx[k]]);
        if (x[idx[k]] <= 1e-14) {
          x[idx[k]] = 0.0;
          passive[static_cast<std::size_t>(idx[k])] = false;
        }
      }
    }
  }

  NnlsResult out;
  out.coefficients = x;
  out.residual = (b - a * x).norm();
  return out;
}

namespace {

double hull_residual(const Matrix& right_action, const Theory& theory) {
  if (theory.transformations.empty()) return vec(right_action).norm();
  const Eigen::Index d2 = right_action.size();
  Matrix gens(d2, static_cast<Eigen::Index>(theory.transformations.size()));
  for (std::size_t j = 0; j < theory.transformations.size(); ++j)
    gens.col(static_cast<Eigen::Index>(j)) = vec(theory.transformations[j].right_action);
  const Vector target = vec(right_action);
  const double scale = std::max(1.0, target.norm());
  return nnls(gens, target).residual / scale;
}

}  // namespace

double cone_residual(const Matrix& right_action, const Theory& theory) {
  switch (theory.cone.kind) {
    case ConeKind::ClassicalSubstochastic: {
      const double lowest = right_action.minCoeff();
      return std::max(0.0, -lowest);
    }
    case ConeKind::QuantumChoi: {
      const CMatrix choi = choi_matrix(right_action, theory.cone.hilbert_dim);
      const HermEig eig = eigh(choi);
      return std::max(0.0, -eig.values.minCoeff());
    }
    case ConeKind::Hull:
      return hull_residual(right_action, theory);
  }
  return 0.0;
}

bool in_cone(const Matrix& right_action, const Theory& theory, double tol) {
  return cone_residual(right_action, theory) <= tol;
}

double physicality_residual(const Matrix& right_action, const Theory& theory) {
  double worst = cone_residual(right_action, theory);
  const RowVector effect = theory.unit_effect.coords * right_action;
  for (const auto& named : theory.extremal_states) {
    const double p = effect * named.state.coords;
    worst = std::max({worst, -p, p - 1.0});
  }
  return std::max(0.0, worst);
}

bool is_physical(const Matrix& right_action, const Theory& theory, double tol) {
  return physicality_residual(right_action, theory) <= tol;
}

bool is_physical(const TransformationMatrix& t, const Theory& theory, double tol) {
  return is_physical(t.right_action, theory, tol);
}

}  // namespace optheory
