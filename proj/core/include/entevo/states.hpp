// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTEVO_STATES_HPP
#define ENTEVO_STATES_HPP

#include "entevo/linalg.hpp"

namespace entevo {

class DensityMatrix;

/// Bipartite pure vector |chi> = sum_ij A_ij |i>|j> held as its d x f
/// coefficient matrix A, d <= f. May be subnormalized; tr(A^dagger A) is
/// cached as squared_norm.
class PureState {
 public:
  PureState(Index d, Index f, Matrix coeffs);
  explicit PureState(Matrix coeffs);

  Index d() const { return d_; }
  Index f() const { return f_; }
  const Matrix& coeffs() const { return coeffs_; }
  double squared_norm() const { return squared_norm_; }

  bool is_normalized(double tol = 1e-10) const;
  PureState normalized() const;

  /// Flattened amplitudes, index i*f + j (kron ordering).
  Vector vector() const;

  /// |chi><chi| as a density matrix (subnormalized if chi is).
  DensityMatrix projector() const;

 private:
  void validate();

  Index d_, f_;
  Matrix coeffs_;
  double squared_norm_ = 0.0;
};

/// Bipartite density operator on C^d (x) C^f with validated invariants:
/// Hermitian within 1e-12, min eigenvalue >= -1e-10, finite entries.
/// Trace may differ from one; is_normalized() reports |tr - 1| <= 1e-10.
class DensityMatrix {
 public:
  DensityMatrix(Index d, Index f, Matrix matrix);

  Index d() const { return d_; }
  Index f() const { return f_; }
  const Matrix& matrix() const { return matrix_; }
  double trace() const;
  bool is_normalized(double tol = 1e-10) const;

  /// Reduced state after tracing out `side`.
  Matrix reduced(Side side) const;

 private:
  Index d_, f_;
  Matrix matrix_;
};

/// |Phi> = sum_n |n>|n>/sqrt(d); A = I/sqrt(d). Requires d >= 2.
PureState max_entangled(Index d);

/// Filter M_chi = sqrt(d) * A for a normalized d = f state, so that
/// (M_chi (x) 1)|Phi> = |chi>.
Matrix filtering_operator(const PureState& chi);

/// Haar-random normalized pure state on C^d (x) C^f.
PureState random_pure_state(Index d, Index f, Rng& rng);

/// Random rank-r bipartite density matrix (normalized Wishart).
DensityMatrix random_density_matrix(Index d, Index f, Index rank, Rng& rng);

/// The pure vector of a rank-one density matrix, subnormalized by its
/// trace. Throws if the input is not rank one within the relative cutoff.
PureState extract_pure(const DensityMatrix& rho);

/// rho_F = (1-F)/(d^2-1) (I - |Phi><Phi|) + F |Phi><Phi|, for F in
/// [1/d^2, 1]; values below 1/d^2 lie outside the depolarizing trajectory
/// and are rejected.
DensityMatrix isotropic_state(Index d, double fidelity);

/// Fidelity of the depolarizing trajectory at time t:
/// F(t) = [1 + (d^2-1) exp(-2 d Gamma t)] / d^2.
double fidelity_at_time(Index d, double gamma, double t);

/// Mixing probability p(t) = 1 - exp(-2 d Gamma t) of the depolarizing
/// semigroup, and the fidelity a depolarizing channel of strength p maps
/// |Phi><Phi| to. Single source of the p <-> F <-> t dictionary.
double depolarizing_probability_at_time(Index d, double gamma, double t);
double depolarizing_fidelity(Index d, double p);

}  // namespace entevo

#endif  // ENTEVO_STATES_HPP
