// SPDX-License-Identifier: Apache-2.0
#include "optheory/linalg.hpp"

namespace optheory {
namespace {

template <typename Mat>
Mat kron_impl(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) { return kron_impl(a, b); }
CMatrix kron(const CMatrix& a, const CMatrix& b) { return kron_impl(a, b); }

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int rows, int cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

CMatrix unvec(const CVector& v, int rows, int cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

}  // namespace optheory
