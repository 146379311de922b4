// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTEVO_ROOF_HPP
#define ENTEVO_ROOF_HPP

#include <cstdint>

#include "entevo/measures.hpp"

namespace entevo {

/// Which pure-state measure a convex-roof estimate minimizes.
struct RoofMeasure {
  enum class Kind { g_concurrence, c_k };
  Kind kind = Kind::g_concurrence;
  int k = 0;  // only read for c_k

  static RoofMeasure g() { return {Kind::g_concurrence, 0}; }
  static RoofMeasure ck(int k) { return {Kind::c_k, k}; }
};

struct RoofParams {
  /// Pure states per decomposition; 0 picks min(d^2, 2*rank). Must be at
  /// least the rank of the input.
  int ensemble_size = 0;
  int restarts = 20;
  /// Cap on descent iterations per restart; one iteration proposes one
  /// pairwise rotation.
  int max_iters = 20000;
  /// Value floor: the measure is nonnegative, so a restart stops once the
  /// estimate falls below tol.
  double tol = 1e-10;
};

struct RoofEstimate {
  double value = 0.0;       // best decomposition average found (upper bound)
  int ensemble_size = 0;
  int restarts = 0;
  long long iterations = 0; // total across restarts
  bool converged = false;   // every restart hit the step floor or value floor
  double residual = 0.0;    // last accepted improvement of the best restart
};

/// Upper bound on the convex roof inf sum_i p_i m(|phi_i>) over all
/// decompositions rho = sum_i p_i |phi_i><phi_i|.
///
/// rho is eigendecomposed into r subnormalized columns V; every size-m
/// decomposition is W = V Q^dagger for an m x r isometry Q
/// (Schrodinger-HJW). The decomposition average is minimized over Q by
/// accept-if-improved small random rotations: each step mixes one random
/// pair of ensemble members by a near-identity U(2), which preserves rho
/// exactly and re-evaluates only the two touched members. The step is
/// halved after 20 consecutive rejections and a restart finishes when it
/// drops below 1e-6. Restart 0 starts from the eigendecomposition itself;
/// the others from Haar-random isometries. Streams are split per restart
/// from `rng`, so enlarging restarts or max_iters never increases the
/// result for a fixed seed.
///
/// Requires a normalized d = f input and ensemble_size >= rank(rho).
RoofEstimate roof_estimate(const DensityMatrix& rho, const RoofMeasure& measure,
                           const RoofParams& params, const Rng& rng);

}  // namespace entevo

#endif  // ENTEVO_ROOF_HPP
