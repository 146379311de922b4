// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTEVO_CHANNELS_HPP
#define ENTEVO_CHANNELS_HPP

#include <vector>

#include "entevo/states.hpp"

namespace entevo {

/// Completely positive map on d-level states given by Kraus operators
/// K_i (all d x d). Validated: sum K_i^dagger K_i <= I within 1e-10.
/// trace_preserving() reports equality with I within 1e-10; sub-unital
/// sums describe filters (trace-decreasing operations).
class KrausChannel {
 public:
  KrausChannel(Index dim, std::vector<Matrix> kraus);

  Index dim() const { return dim_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  bool trace_preserving() const { return trace_preserving_; }

  static KrausChannel identity(Index d);
  static KrausChannel unitary(Matrix u);

  /// sum_i K_i rho K_i^dagger on a plain d x d operator.
  Matrix apply(const Matrix& rho) const;

 private:
  Index dim_;
  std::vector<Matrix> kraus_;
  bool trace_preserving_;
};

/// Generalized Pauli W_ab = X^a Z^b with X the cyclic shift and
/// Z = diag(omega^k), omega = exp(2 pi i / d).
Matrix weyl_operator(Index d, Index a, Index b);

/// rho -> (1-p) rho + p tr(rho) I/d realized by d^2 Kraus operators:
/// sqrt(1-p+p/d^2) I plus sqrt(p/d^2) W_ab over the d^2-1 nontrivial
/// Weyl operators.
KrausChannel depolarizing_channel(Index d, double p);

/// Trace-preserving channel sampled by slicing a Haar-random isometry
/// from C^d into C^(d*n_kraus) into n_kraus blocks. 1 <= n_kraus <= d^2.
KrausChannel random_channel(Index d, Index n_kraus, Rng& rng);

/// Single-Kraus filter {M / sigma_max(M)} with M complex Ginibre; a valid
/// (trace-decreasing) operation.
KrausChannel random_filter_channel(Index d, Rng& rng);

/// rho' = sum_i (... K_i ...) rho (... K_i^dagger ...) with the channel on
/// one side of the bipartition.
DensityMatrix apply_one_sided(const KrausChannel& ch, const DensityMatrix& rho,
                              Side side);
DensityMatrix apply_one_sided(const KrausChannel& ch, const PureState& chi,
                              Side side);

/// ($1 (x) $2) rho; equals the two one-sided applications in either order.
DensityMatrix apply_two_sided(const KrausChannel& ch1, const KrausChannel& ch2,
                              const DensityMatrix& rho);

/// Pure-state output of a single Kraus operator on one side; the result is
/// subnormalized unless K is an isometry. Coefficients: K A (first side)
/// or A K^T (second side).
PureState apply_single_kraus(const Matrix& k, const PureState& chi, Side side);

/// rho_$ = (1 (x) $) |Phi><Phi|, the Jamiolkowski state of the channel.
DensityMatrix jamiolkowski_state(const KrausChannel& ch);

/// Reconstruct a channel from its Jamiolkowski state via eigendecomposition.
/// Requires a d x d bipartite state whose first reduction is maximally mixed
/// within 1e-8 (the image of a trace-preserving channel).
KrausChannel channel_from_jamiolkowski(const DensityMatrix& rho);

/// (M_chi (x) 1) rho_$ (M_chi^dagger (x) 1): the order-exchanged form of
/// (1 (x) $)|chi><chi|. chi normalized with d = f.
DensityMatrix dual_form(const PureState& chi, const KrausChannel& ch);

/// Largest max-norm discrepancy of the two channels' action on the matrix
/// unit basis E_ij. Kraus lists are gauge-dependent; action is not.
double action_distance(const KrausChannel& a, const KrausChannel& b);

}  // namespace entevo

#endif  // ENTEVO_CHANNELS_HPP
