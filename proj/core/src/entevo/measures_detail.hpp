// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

// Internal helpers shared by the pure measures and the roof optimizer so
// both evaluate identical arithmetic on a Schmidt spectrum.

#ifndef ENTEVO_MEASURES_DETAIL_HPP
#define ENTEVO_MEASURES_DETAIL_HPP

#include "entevo/linalg.hpp"

namespace entevo::detail {

/// Squared singular values of a coefficient matrix, descending.
RealVector lambdas_from_coeffs(const Matrix& coeffs);

/// Count above the relative cutoff 1e-12 * lambda_max.
int rank_of_lambdas(const RealVector& lambdas);

/// d (prod lambda)^(1/d); exactly zero below full rank.
double g_from_lambdas(const RealVector& lambdas);

/// d [e_k(lambda)/binom(d,k)]^(1/k); k = d routes through g_from_lambdas.
double ck_from_lambdas(const RealVector& lambdas, int k);

double binomial(int n, int k);

}  // namespace entevo::detail

#endif  // ENTEVO_MEASURES_DETAIL_HPP
