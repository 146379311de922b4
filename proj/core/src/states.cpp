// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#include "entevo/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace entevo {

void PureState::validate() {
  if (d_ < 1 || f_ < 1)
    throw std::invalid_argument("PureState: dimensions must be positive");
  if (d_ > f_)
    throw std::invalid_argument("PureState: requires d <= f");
  if (coeffs_.rows() != d_ || coeffs_.cols() != f_)
    throw std::invalid_argument("PureState: coefficient matrix shape mismatch");
  if (!is_finite(coeffs_))
    throw std::invalid_argument("PureState: non-finite amplitudes");
  squared_norm_ = coeffs_.squaredNorm();
}

PureState::PureState(Index d, Index f, Matrix coeffs)
    : d_(d), f_(f), coeffs_(std::move(coeffs)) {
  validate();
}

// members initialize in declaration order, so the dimensions are read
// before the matrix is moved from
PureState::PureState(Matrix coeffs)
    : d_(coeffs.rows()), f_(coeffs.cols()), coeffs_(std::move(coeffs)) {
  validate();
}

bool PureState::is_normalized(double tol) const {
  return std::abs(squared_norm_ - 1.0) <= tol;
}

PureState PureState::normalized() const {
  if (squared_norm_ <= 0.0)
    throw std::invalid_argument("PureState::normalized: zero vector");
  return PureState(d_, f_, coeffs_ / std::sqrt(squared_norm_));
}

Vector PureState::vector() const {
  Vector v(d_ * f_);
  for (Index i = 0; i < d_; ++i)
    for (Index j = 0; j < f_; ++j) v(i * f_ + j) = coeffs_(i, j);
  return v;
}

DensityMatrix PureState::projector() const {
  Vector v = vector();
  return DensityMatrix(d_, f_, v * v.adjoint());
}

DensityMatrix::DensityMatrix(Index d, Index f, Matrix matrix)
    : d_(d), f_(f), matrix_(std::move(matrix)) {
  if (d_ < 1 || f_ < 1)
    throw std::invalid_argument("DensityMatrix: dimensions must be positive");
  const Index n = d_ * f_;
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw std::invalid_argument("DensityMatrix: shape does not match d*f");
  if (!is_finite(matrix_))
    throw std::invalid_argument("DensityMatrix: non-finite entries");
  if (max_abs(matrix_ - matrix_.adjoint()) > tol::kHermitian)
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_,
                                           Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("DensityMatrix: eigenvalue check failed");
  if (es.eigenvalues().minCoeff() < -tol::kPsd)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

double DensityMatrix::trace() const { return matrix_.trace().real(); }

bool DensityMatrix::is_normalized(double tol) const {
  return std::abs(trace() - 1.0) <= tol;
}

Matrix DensityMatrix::reduced(Side side) const {
  return partial_trace(matrix_, d_, f_, side);
}

PureState max_entangled(Index d) {
  if (d < 2) throw std::invalid_argument("max_entangled: requires d >= 2");
  Matrix a = Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d));
  return PureState(d, d, std::move(a));
}

Matrix filtering_operator(const PureState& chi) {
  if (chi.d() != chi.f())
    throw std::invalid_argument("filtering_operator: requires d = f");
  if (!chi.is_normalized())
    throw std::invalid_argument("filtering_operator: state must be normalized");
  return std::sqrt(static_cast<double>(chi.d())) * chi.coeffs();
}

PureState random_pure_state(Index d, Index f, Rng& rng) {
  Matrix a = ginibre(d, f, rng);
  a /= a.norm();
  return PureState(d, f, std::move(a));
}

DensityMatrix random_density_matrix(Index d, Index f, Index rank, Rng& rng) {
  if (rank < 1 || rank > d * f)
    throw std::invalid_argument("random_density_matrix: invalid rank");
  Matrix g = ginibre(d * f, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(d, f, std::move(rho));
}

PureState extract_pure(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("extract_pure: eigendecomposition failed");
  const RealVector& vals = es.eigenvalues();  // ascending
  const Index last = vals.size() - 1;
  if (vals(last) <= 0.0 ||
      (vals.size() > 1 && vals(last - 1) > 1e-10 * vals(last)))
    throw std::invalid_argument("extract_pure: state is not rank one");
  Vector v = std::sqrt(vals(last)) * es.eigenvectors().col(last);
  Matrix coeffs(rho.d(), rho.f());
  for (Index i = 0; i < rho.d(); ++i)
    for (Index j = 0; j < rho.f(); ++j) coeffs(i, j) = v(i * rho.f() + j);
  return PureState(rho.d(), rho.f(), std::move(coeffs));
}

DensityMatrix isotropic_state(Index d, double fidelity) {
  if (d < 2) throw std::invalid_argument("isotropic_state: requires d >= 2");
  const double dim2 = static_cast<double>(d * d);
  if (!(fidelity >= 1.0 / dim2 && fidelity <= 1.0))
    throw std::invalid_argument(
        "isotropic_state: fidelity must lie in [1/d^2, 1]");
  Vector phi = max_entangled(d).vector();
  Matrix proj = phi * phi.adjoint();
  Matrix rho = ((1.0 - fidelity) / (dim2 - 1.0)) *
                   (Matrix::Identity(d * d, d * d) - proj) +
               fidelity * proj;
  return DensityMatrix(d, d, std::move(rho));
}

double fidelity_at_time(Index d, double gamma, double t) {
  if (d < 2) throw std::invalid_argument("fidelity_at_time: requires d >= 2");
  if (gamma <= 0.0)
    throw std::invalid_argument("fidelity_at_time: requires Gamma > 0");
  if (t < 0.0) throw std::invalid_argument("fidelity_at_time: requires t >= 0");
  const double dim2 = static_cast<double>(d * d);
  return (1.0 + (dim2 - 1.0) * std::exp(-2.0 * d * gamma * t)) / dim2;
}

double depolarizing_probability_at_time(Index d, double gamma, double t) {
  if (d < 2)
    throw std::invalid_argument(
        "depolarizing_probability_at_time: requires d >= 2");
  if (gamma <= 0.0)
    throw std::invalid_argument(
        "depolarizing_probability_at_time: requires Gamma > 0");
  if (t < 0.0)
    throw std::invalid_argument(
        "depolarizing_probability_at_time: requires t >= 0");
  return 1.0 - std::exp(-2.0 * d * gamma * t);
}

double depolarizing_fidelity(Index d, double p) {
  if (d < 2)
    throw std::invalid_argument("depolarizing_fidelity: requires d >= 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("depolarizing_fidelity: p outside [0, 1]");
  const double dim2 = static_cast<double>(d * d);
  return 1.0 - p + p / dim2;
}

}  // namespace entevo
