// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#include "entevo/linalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <sstream>
#include <stdexcept>

namespace entevo {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

SvdResult svd(const Matrix& m) {
  if (!is_finite(m))
    throw std::invalid_argument("svd: input has non-finite entries");
  Eigen::JacobiSVD<Matrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (dec.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "svd: decomposition of a " << m.rows() << "x" << m.cols()
        << " matrix did not converge";
    throw std::runtime_error(msg.str());
  }
  SvdResult out{dec.matrixU(), dec.singularValues(), dec.matrixV()};
  if (!out.singular_values.allFinite())
    throw std::runtime_error("svd: non-finite singular values");
  return out;
}

Complex det(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det: matrix is not square");
  if (!is_finite(m))
    throw std::invalid_argument("det: input has non-finite entries");
  if (m.rows() == 0) return Complex(1.0, 0.0);
  return Eigen::PartialPivLU<Matrix>(m).determinant();
}

Matrix partial_trace(const Matrix& rho, Index d, Index f, Side side) {
  if (d < 1 || f < 1 || rho.rows() != d * f || rho.cols() != d * f)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (side == Side::second) {
    Matrix out = Matrix::Zero(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index ip = 0; ip < d; ++ip)
        for (Index j = 0; j < f; ++j) out(i, ip) += rho(i * f + j, ip * f + j);
    return out;
  }
  Matrix out = Matrix::Zero(f, f);
  for (Index j = 0; j < f; ++j)
    for (Index jp = 0; jp < f; ++jp)
      for (Index i = 0; i < d; ++i) out(j, jp) += rho(i * f + j, i * f + jp);
  return out;
}

Matrix ginibre(Index rows, Index cols, Rng& rng) {
  Matrix out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = rng.complex_normal();
  return out;
}

Matrix haar_unitary(Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
  Matrix a = ginibre(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: fold the phases of diag(R) into Q so the distribution
  // is Haar rather than QR-convention dependent.
  for (Index i = 0; i < n; ++i) {
    Complex rii = r(i, i);
    double mag = std::abs(rii);
    q.col(i) *= (mag > 0.0) ? rii / mag : Complex(1.0, 0.0);
  }
  return q;
}

bool is_finite(const Matrix& m) { return m.allFinite(); }

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

}  // namespace entevo
