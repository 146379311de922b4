// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTEVO_MEASURES_HPP
#define ENTEVO_MEASURES_HPP

#include "entevo/states.hpp"

namespace entevo {

/// Squared Schmidt coefficients lambda_i of a pure state, descending.
/// For a normalized state they sum to one; for a subnormalized state the
/// total equals its squared norm.
struct SchmidtSpectrum {
  RealVector lambdas;
  double total;
};

SchmidtSpectrum schmidt_spectrum(const PureState& chi);

/// Number of lambda_i above the relative cutoff 1e-12 * lambda_max.
int schmidt_rank(const PureState& chi);

/// G-concurrence G_d = d [det(A^dagger A)]^(1/d) = d (prod lambda_i)^(1/d),
/// evaluated on the d leading Schmidt coefficients when f > d. Exactly zero
/// when the Schmidt rank is below d (same cutoff as schmidt_rank). Degree-2
/// homogeneous in the amplitudes, so subnormalized input scales the value
/// by the squared norm.
double g_concurrence_pure(const PureState& chi);

/// Hierarchy member C_k = d [e_k(lambda) / binom(d,k)]^(1/k) with e_k the
/// k-th elementary symmetric polynomial. Normalized so C_k(Phi) = 1; the
/// last member C_d coincides with G_d (same code path).
double c_k_pure(const PureState& chi, int k);

/// Wootters' closed form for a 2x2 bipartition:
/// max(0, mu_1 - mu_2 - mu_3 - mu_4), mu_i the descending square roots of
/// the eigenvalues of rho (Y(x)Y) rho^* (Y(x)Y). The exact d=2 oracle.
double wootters_concurrence(const DensityMatrix& rho);

/// Closed-form isotropic-state concurrence, normalized to C(Phi) = 1:
/// (F d - 1)/(d - 1) for 1/d <= F <= 1, zero otherwise.
double isotropic_concurrence(Index d, double fidelity);

/// The unique k in {1,...,d} with k-1 < F d <= k.
int isotropic_schmidt_number(Index d, double fidelity);

/// Time at which the depolarizing trajectory drops from Schmidt number k
/// to k-1: t_k = ln[(d^2-1)/(d k - d - 1)] / (2 d Gamma), 2 <= k <= d.
double drop_time(Index d, double gamma, int k);

/// Concurrence along the depolarizing trajectory:
/// C(t) = max(0, ((d+1) exp(-2 d Gamma t) - 1)/d).
double concurrence_trajectory(Index d, double gamma, double t);

/// Gamma_G / Gamma_C(0) evaluated at interaction rate `gamma`, with
/// Gamma_G = 1/t_d and Gamma_C(0) = -C'(0)/C(0) = 2 Gamma (d+1). The rate
/// cancels; rate_ratio(d) evaluates at Gamma = 1 and tests confirm the
/// cancellation numerically.
double rate_ratio_at(Index d, double gamma);
double rate_ratio(Index d);

}  // namespace entevo

#endif  // ENTEVO_MEASURES_HPP
