// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTEVO_LINALG_HPP
#define ENTEVO_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "entevo/rng.hpp"

namespace entevo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Which subsystem of a bipartite space an operation refers to.
enum class Side { first, second };

namespace tol {
// A singular value (or decomposition eigenvalue) counts as zero below this
// relative cutoff; scale-relative so rank decisions survive renormalization.
inline constexpr double kSingularZeroRel = 1e-12;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kKraus = 1e-10;
}  // namespace tol

struct SvdResult {
  Matrix left_vectors;         // U, unitary
  RealVector singular_values;  // descending, nonnegative
  Matrix right_vectors;        // V, unitary; input = U * diag(sv) * V^dagger
};

/// Kronecker product; dimensions multiply.
Matrix kron(const Matrix& a, const Matrix& b);

/// Full SVD. Throws std::invalid_argument on non-finite input and
/// std::runtime_error if the decomposition fails to converge.
SvdResult svd(const Matrix& m);

/// Determinant via partially pivoted LU. Square input required.
Complex det(const Matrix& m);

/// Trace out one subsystem of a (d*f)x(d*f) bipartite operator.
/// `side` names the subsystem removed: tracing the second yields d x d,
/// tracing the first yields f x f.
Matrix partial_trace(const Matrix& rho, Index d, Index f, Side side);

/// Haar-distributed n x n unitary: QR of a complex Ginibre matrix with the
/// phases of diag(R) absorbed into Q (Mezzadri's recipe).
Matrix haar_unitary(Index n, Rng& rng);

/// Complex matrix with iid standard complex normal entries.
Matrix ginibre(Index rows, Index cols, Rng& rng);

bool is_finite(const Matrix& m);

/// Largest |entry| of a matrix (max norm).
double max_abs(const Matrix& m);

}  // namespace entevo

#endif  // ENTEVO_LINALG_HPP
