// SPDX-License-Identifier: Apache-2.0
#include "optheory/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace optheory {
namespace {

template <typename Mat>
double offdiag_norm(const Mat& a) {
  double s = 0.0;
  for (Eigen::Index p = 0; p < a.rows(); ++p)
    for (Eigen::Index q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(Complex(a(p, q)));
  return std::sqrt(s);
}

// One cyclic Jacobi diagonalization. For complex input the pivot is first
// rotated onto the real axis (a diagonal phase on column q), after which the
// real Givens formulas apply unchanged.
template <typename Mat>
void jacobi(Mat& a, Mat& v, const EigOptions& opts) {
  using Scalar = typename Mat::Scalar;
  const Eigen::Index n = a.rows();
  const double scale = a.norm();
  if (scale == 0.0) return;

  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= opts.threshold * scale) return;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq_abs = std::abs(Complex(a(p, q)));
        if (apq_abs <= scale * 1e-300) continue;

        if constexpr (!std::is_same_v<Scalar, double>) {
          const Scalar phase = std::conj(a(p, q)) / apq_abs;
          a.col(q) *= phase;
          a.row(q) *= std::conj(phase);
          v.col(q) *= phase;
        }

        const double app = std::real(Complex(a(p, p)));
        const double aqq = std::real(Complex(a(q, q)));
        const double apq = std::real(Complex(a(p, q)));
        if (apq == 0.0) continue;
        const double theta = (aqq - app) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (Eigen::Index i = 0; i < n; ++i) {
          const Scalar aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const Scalar api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const Scalar vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }
  if (offdiag_norm(a) > opts.threshold * scale)
    throw NumericalError("jacobi eigensolver did not converge");
}

std::vector<int> ascending_order(const Vector& values) {
  std::vector<int> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return values[i] < values[j]; });
  return order;
}

}  // namespace

SymEig eigh(const Matrix& a, const EigOptions& opts) {
  if (a.rows() != a.cols()) throw DimensionError("eigh: matrix must be square");
  Matrix work = 0.5 * (a + a.transpose());
  Matrix v = Matrix::Identity(a.rows(), a.cols());
  jacobi(work, v, opts);

  Vector raw = work.diagonal();
  const auto order = ascending_order(raw);
  SymEig out;
  out.values.resize(a.rows());
  out.vectors.resize(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    out.values[k] = raw[order[static_cast<std::size_t>(k)]];
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    Eigen::Index imax = 0;
    out.vectors.col(k).cwiseAbs().maxCoeff(&imax);
    if (out.vectors(imax, k) < 0.0) out.vectors.col(k) = -out.vectors.col(k);
  }
  return out;
}

HermEig eigh(const CMatrix& a, const EigOptions& opts) {
  if (a.rows() != a.cols()) throw DimensionError("eigh: matrix must be square");
  CMatrix work = 0.5 * (a + a.adjoint());
  CMatrix v = CMatrix::Identity(a.rows(), a.cols());
  jacobi(work, v, opts);

  Vector raw = work.diagonal().real();
  const auto order = ascending_order(raw);
  HermEig out;
  out.values.resize(a.rows());
  out.vectors.resize(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    out.values[k] = raw[order[static_cast<std::size_t>(k)]];
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    Eigen::Index imax = 0;
    out.vectors.col(k).cwiseAbs().maxCoeff(&imax);
    const Complex z = out.vectors(imax, k);
    const double za = std::abs(z);
    if (za > 0.0) out.vectors.col(k) *= std::conj(z) / za;
  }
  return out;
}

int numerical_rank(const Vector& values, double rel_tol) {
  if (values.size() == 0) return 0;
  const double vmax = values.cwiseAbs().maxCoeff();
  if (vmax == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (std::abs(values[i]) > rel_tol * vmax) ++rank;
  return rank;
}

Matrix spectral_inverse(const SymEig& eig, double rel_tol) {
  const Eigen::Index n = eig.values.size();
  if (n == 0) throw FaithfulnessError("spectral_inverse: empty decomposition");
  const double vmax = eig.values.cwiseAbs().maxCoeff();
  if (vmax == 0.0 || numerical_rank(eig.values, rel_tol) < n)
    throw FaithfulnessError("spectral_inverse: matrix is numerically singular");
  Matrix inv = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    inv += (1.0 / eig.values[k]) * (eig.vectors.col(k) * eig.vectors.col(k).transpose());
  return inv;
}

SpectralSolve spectral_solve(const SymEig& eig, const Vector& rhs, double rel_tol) {
  if (eig.values.size() != rhs.size())
    throw DimensionError("spectral_solve: size mismatch");
  SpectralSolve out;
  out.x = Vector::Zero(rhs.size());
  if (rhs.size() == 0) return out;
  const double vmax = eig.values.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (vmax == 0.0 || std::abs(eig.values[k]) <= rel_tol * vmax) continue;
    out.x += (eig.vectors.col(k).dot(rhs) / eig.values[k]) * eig.vectors.col(k);
    ++out.rank;
  }
  return out;
}

}  // namespace optheory
