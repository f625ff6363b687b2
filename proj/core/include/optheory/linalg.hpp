// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace optheory {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXd;
using CRowVector = Eigen::RowVectorXcd;
using Complex = std::complex<double>;

/// Kronecker product with block convention (A ⊗ B)(i·p+k, j·q+l) = A(i,j)·B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Column-major flattening; vec(A·X) = (I ⊗ A)·vec(X).
Vector vec(const Matrix& m);
CVector vec(const CMatrix& m);
Matrix unvec(const Vector& v, int rows, int cols);
CMatrix unvec(const CVector& v, int rows, int cols);

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename Derived>
auto cplx(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Complex>().eval();
}

}  // namespace optheory
