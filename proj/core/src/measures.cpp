// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#include "entevo/measures.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "entevo/measures_detail.hpp"

namespace entevo {

namespace detail {

RealVector lambdas_from_coeffs(const Matrix& coeffs) {
  RealVector sv = svd(coeffs).singular_values;
  const Index n = std::min(coeffs.rows(), coeffs.cols());
  RealVector lambdas(n);
  for (Index i = 0; i < n; ++i) lambdas(i) = sv(i) * sv(i);
  return lambdas;
}

int rank_of_lambdas(const RealVector& lambdas) {
  if (lambdas.size() == 0) return 0;
  const double cutoff = tol::kSingularZeroRel * lambdas(0);
  if (lambdas(0) <= 0.0) return 0;
  int rank = 0;
  for (Index i = 0; i < lambdas.size(); ++i)
    if (lambdas(i) > cutoff) ++rank;
  return rank;
}

double g_from_lambdas(const RealVector& lambdas) {
  const Index d = lambdas.size();
  if (rank_of_lambdas(lambdas) < d) return 0.0;
  double prod = 1.0;
  for (Index i = 0; i < d; ++i) prod *= lambdas(i);
  return static_cast<double>(d) *
         std::pow(prod, 1.0 / static_cast<double>(d));
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i)
    out *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

double ck_from_lambdas(const RealVector& lambdas, int k) {
  const int d = static_cast<int>(lambdas.size());
  if (k < 1 || k > d)
    throw std::invalid_argument("c_k: k outside [1, d]");
  if (k == d) return g_from_lambdas(lambdas);  // C_d coincides with G_d
  const double cutoff =
      lambdas.size() ? tol::kSingularZeroRel * lambdas(0) : 0.0;
  // e_k via the coefficient recurrence of prod_i (1 + lambda_i x).
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (Index i = 0; i < lambdas.size(); ++i) {
    const double lam = lambdas(i) > cutoff ? lambdas(i) : 0.0;
    for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j)
      e[j] += lam * e[j - 1];
  }
  const double scaled = e[static_cast<std::size_t>(k)] / binomial(d, k);
  return static_cast<double>(d) * std::pow(scaled, 1.0 / k);
}

}  // namespace detail

SchmidtSpectrum schmidt_spectrum(const PureState& chi) {
  RealVector lambdas = detail::lambdas_from_coeffs(chi.coeffs());
  return SchmidtSpectrum{lambdas, lambdas.sum()};
}

int schmidt_rank(const PureState& chi) {
  return detail::rank_of_lambdas(detail::lambdas_from_coeffs(chi.coeffs()));
}

double g_concurrence_pure(const PureState& chi) {
  return detail::g_from_lambdas(detail::lambdas_from_coeffs(chi.coeffs()));
}

double c_k_pure(const PureState& chi, int k) {
  return detail::ck_from_lambdas(detail::lambdas_from_coeffs(chi.coeffs()), k);
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.d() != 2 || rho.f() != 2)
    throw std::invalid_argument(
        "wootters_concurrence: defined for a 2x2 bipartition");
  Matrix yy(4, 4);
  yy << 0, 0, 0, -1,
        0, 0, 1, 0,
        0, 1, 0, 0,
       -1, 0, 0, 0;
  // mu_i^2 are the eigenvalues of rho*rho_tilde; computed through the
  // Hermitian form sqrt(rho) rho_tilde sqrt(rho), which shares the nonzero
  // spectrum and keeps small eigenvalues at absolute machine accuracy.
  Eigen::SelfAdjointEigenSolver<Matrix> rho_es(rho.matrix());
  if (rho_es.info() != Eigen::Success)
    throw std::runtime_error("wootters_concurrence: eigensolver failure");
  RealVector sqrt_vals = rho_es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Matrix sqrt_rho = rho_es.eigenvectors() * sqrt_vals.asDiagonal() *
                    rho_es.eigenvectors().adjoint();
  Matrix tilde = yy * rho.matrix().conjugate() * yy;
  Matrix herm = sqrt_rho * tilde * sqrt_rho;
  herm = 0.5 * (herm + herm.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("wootters_concurrence: eigensolver failure");
  RealVector nu = es.eigenvalues().cwiseMax(0.0);  // ascending
  // Eigenvalues that vanish exactly must not resurface as sqrt(noise).
  const double cutoff = tol::kSingularZeroRel * nu(3);
  double c = 0.0;
  for (Index i = 0; i < 4; ++i) {
    const double mu = (nu(i) > cutoff) ? std::sqrt(nu(i)) : 0.0;
    c += (i == 3) ? mu : -mu;
  }
  return std::max(0.0, c);
}

double isotropic_concurrence(Index d, double fidelity) {
  if (d < 2)
    throw std::invalid_argument("isotropic_concurrence: requires d >= 2");
  const double dd = static_cast<double>(d);
  if (!(fidelity >= 1.0 / (dd * dd) && fidelity <= 1.0))
    throw std::invalid_argument(
        "isotropic_concurrence: fidelity outside [1/d^2, 1]");
  if (fidelity < 1.0 / dd) return 0.0;
  return (fidelity * dd - 1.0) / (dd - 1.0);
}

int isotropic_schmidt_number(Index d, double fidelity) {
  if (d < 2)
    throw std::invalid_argument("isotropic_schmidt_number: requires d >= 2");
  const double dd = static_cast<double>(d);
  if (!(fidelity >= 1.0 / (dd * dd) && fidelity <= 1.0))
    throw std::invalid_argument(
        "isotropic_schmidt_number: fidelity outside [1/d^2, 1]");
  int k = static_cast<int>(std::ceil(fidelity * dd));
  return std::clamp(k, 1, static_cast<int>(d));
}

double drop_time(Index d, double gamma, int k) {
  if (d < 2) throw std::invalid_argument("drop_time: requires d >= 2");
  if (gamma <= 0.0) throw std::invalid_argument("drop_time: requires Gamma > 0");
  if (k < 2 || k > d)
    throw std::invalid_argument("drop_time: k outside [2, d]");
  const double dd = static_cast<double>(d);
  return std::log((dd * dd - 1.0) / (dd * k - dd - 1.0)) /
         (2.0 * dd * gamma);
}

double concurrence_trajectory(Index d, double gamma, double t) {
  if (d < 2)
    throw std::invalid_argument("concurrence_trajectory: requires d >= 2");
  if (gamma <= 0.0)
    throw std::invalid_argument("concurrence_trajectory: requires Gamma > 0");
  if (t < 0.0)
    throw std::invalid_argument("concurrence_trajectory: requires t >= 0");
  const double dd = static_cast<double>(d);
  return std::max(0.0, ((dd + 1.0) * std::exp(-2.0 * dd * gamma * t) - 1.0) /
                           dd);
}

double rate_ratio_at(Index d, double gamma) {
  if (d < 2) throw std::invalid_argument("rate_ratio: requires d >= 2");
  if (gamma <= 0.0)
    throw std::invalid_argument("rate_ratio: requires Gamma > 0");
  const double gamma_g = 1.0 / drop_time(d, gamma, static_cast<int>(d));
  const double gamma_c0 = 2.0 * gamma * (static_cast<double>(d) + 1.0);
  return gamma_g / gamma_c0;
}

double rate_ratio(Index d) { return rate_ratio_at(d, 1.0); }

}  // namespace entevo
