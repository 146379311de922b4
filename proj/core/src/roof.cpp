// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#include "entevo/roof.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "entevo/measures_detail.hpp"

namespace entevo {

namespace {

constexpr double kInitialStep = 0.5;
constexpr double kStepShrink = 0.5;
constexpr double kMinStep = 1e-6;
constexpr int kShrinkAfterRejects = 20;
constexpr int kProposalBatch = 8;    // candidate rotations per iteration
constexpr int kSpreadIters = 20000;  // internal cap of the spread phase
constexpr int kRefreshEvery = 2000;  // re-orthonormalize Q against drift

double column_measure(const Vector& w, Index d, Index f,
                      const RoofMeasure& measure) {
  Matrix a(d, f);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < f; ++j) a(i, j) = w(i * f + j);
  RealVector lambdas = detail::lambdas_from_coeffs(a);
  return (measure.kind == RoofMeasure::Kind::g_concurrence)
             ? detail::g_from_lambdas(lambdas)
             : detail::ck_from_lambdas(lambdas, measure.k);
}

// Thin QR factor: rows x cols with orthonormal columns.
Matrix orthonormalize(const Matrix& p) {
  Eigen::HouseholderQR<Matrix> qr(p);
  return qr.householderQ() * Matrix::Identity(p.rows(), p.cols());
}

// Random U(2) in the vicinity of the identity; `step` scales the mixing.
Eigen::Matrix2cd small_rotation(double step, Rng& rng) {
  Eigen::Matrix2cd g;
  g << 1.0 + step * rng.complex_normal(), step * rng.complex_normal(),
      step * rng.complex_normal(), 1.0 + step * rng.complex_normal();
  // Gram-Schmidt keeps it exactly unitary.
  g.col(0) /= g.col(0).norm();
  g.col(1) -= g.col(0).dot(g.col(1)) * g.col(0);
  g.col(1) /= g.col(1).norm();
  return g;
}

struct DescentState {
  Matrix q;          // m x r isometry; W = V Q^dagger
  RealVector values; // per-member measure of the current decomposition
  double total = 0.0;
};

void refresh(const Matrix& v, Index d, Index f, const RoofMeasure& measure,
             DescentState& s) {
  s.q = orthonormalize(s.q);
  for (Index i = 0; i < s.q.rows(); ++i)
    s.values(i) = column_measure(v * s.q.row(i).adjoint(), d, f, measure);
  s.total = s.values.sum();
}

// One descent phase over pairwise rotations of the decomposition.
// `squared` scores a pair by v_j^2 + v_k^2, which spreads the residual
// measure across the ensemble instead of parking it on one member; the
// final phase scores by v_j + v_k, the quantity actually reported. Each
// iteration draws a batch of candidate rotations for one pair and accepts
// the best strictly improving one.
struct PhaseOutcome {
  long long iterations = 0;
  double last_improvement = 0.0;
  bool step_floor = false;
};

PhaseOutcome descend_phase(const Matrix& v, Index d, Index f,
                           const RoofMeasure& measure, bool squared,
                           int max_iters, double tol, DescentState& s,
                           Rng& rng) {
  const Index m = s.q.rows();
  auto score = [squared](double a, double b) {
    return squared ? a * a + b * b : a + b;
  };
  PhaseOutcome out;
  double step = kInitialStep;
  int rejects = 0;
  // The spread phase hands over once relative progress stalls; only the
  // polish phase needs to ride its schedule to the step floor.
  double marker_total = s.total;
  int marker_iter = 0;
  for (int iter = 0; iter < max_iters; ++iter) {
    if (s.total <= tol) return out;
    if (squared) {
      if (s.total < 0.995 * marker_total) {
        marker_total = s.total;
        marker_iter = iter;
      } else if (iter - marker_iter > 500) {
        return out;
      }
    }
    ++out.iterations;
    if (out.iterations % kRefreshEvery == 0) refresh(v, d, f, measure, s);
    // Half the time aim the first slot at members still carrying measure.
    Index j;
    if (rng.uniform() < 0.5 && s.total > 0.0) {
      double target = rng.uniform() * s.total;
      j = m - 1;
      for (Index i = 0; i < m; ++i) {
        target -= s.values(i);
        if (target <= 0.0) {
          j = i;
          break;
        }
      }
    } else {
      j = static_cast<Index>(rng.next_u64() % static_cast<std::uint64_t>(m));
    }
    Index k = static_cast<Index>(rng.next_u64() %
                                 static_cast<std::uint64_t>(m - 1));
    if (k >= j) ++k;

    const Vector row_j = s.q.row(j).transpose();
    const Vector row_k = s.q.row(k).transpose();
    double best_delta = 0.0;
    Vector best_qj, best_qk;
    double best_vj = 0.0, best_vk = 0.0;
    for (int b = 0; b < kProposalBatch; ++b) {
      const Eigen::Matrix2cd g = small_rotation(step, rng);
      Vector qj = g(0, 0) * row_j + g(1, 0) * row_k;
      Vector qk = g(0, 1) * row_j + g(1, 1) * row_k;
      const double vj = column_measure(v * qj.conjugate(), d, f, measure);
      const double vk = column_measure(v * qk.conjugate(), d, f, measure);
      const double delta = score(vj, vk) - score(s.values(j), s.values(k));
      if (delta < best_delta) {
        best_delta = delta;
        best_qj = std::move(qj);
        best_qk = std::move(qk);
        best_vj = vj;
        best_vk = vk;
      }
    }
    if (best_delta < 0.0) {
      s.q.row(j) = best_qj.transpose();
      s.q.row(k) = best_qk.transpose();
      const double before = s.values(j) + s.values(k);
      s.values(j) = best_vj;
      s.values(k) = best_vk;
      s.total += best_vj + best_vk - before;
      out.last_improvement = before - (best_vj + best_vk);
      rejects = 0;
    } else if (++rejects >= kShrinkAfterRejects) {
      rejects = 0;
      step *= kStepShrink;
      if (step < kMinStep) {
        out.step_floor = true;
        return out;
      }
    }
  }
  return out;
}

}  // namespace

RoofEstimate roof_estimate(const DensityMatrix& rho, const RoofMeasure& measure,
                           const RoofParams& params, const Rng& rng) {
  if (rho.d() != rho.f())
    throw std::invalid_argument("roof_estimate: requires d = f");
  if (!rho.is_normalized())
    throw std::invalid_argument("roof_estimate: state must be normalized");
  if (measure.kind == RoofMeasure::Kind::c_k &&
      (measure.k < 1 || measure.k > rho.d()))
    throw std::invalid_argument("roof_estimate: k outside [1, d]");
  if (params.restarts < 1 || params.max_iters < 1)
    throw std::invalid_argument("roof_estimate: invalid optimizer budget");

  const Index d = rho.d();
  const Index f = rho.f();
  const Index n = d * f;

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("roof_estimate: eigendecomposition failed");
  const RealVector& vals = es.eigenvalues();  // ascending
  const double cutoff = tol::kSingularZeroRel * vals.maxCoeff();
  Index rank = 0;
  for (Index i = 0; i < vals.size(); ++i)
    if (vals(i) > cutoff) ++rank;
  if (rank == 0)
    throw std::invalid_argument("roof_estimate: input has no support");

  // Subnormalized eigencomponents as columns, leading weight first.
  Matrix v(n, rank);
  for (Index i = 0; i < rank; ++i) {
    const Index src = vals.size() - 1 - i;
    v.col(i) = std::sqrt(vals(src)) * es.eigenvectors().col(src);
  }

  if (rank == 1) {
    // Every decomposition of a pure state averages to the same value.
    RoofEstimate out;
    out.value = column_measure(v.col(0), d, f, measure);
    out.ensemble_size = std::max(params.ensemble_size, 1);
    out.restarts = params.restarts;
    out.converged = true;
    return out;
  }

  const Index m = (params.ensemble_size > 0)
                      ? params.ensemble_size
                      : std::min<Index>(d * d, 2 * rank);
  if (m < rank)
    throw std::invalid_argument(
        "roof_estimate: ensemble_size below the state's rank");

  RoofEstimate out;
  out.ensemble_size = static_cast<int>(m);
  out.restarts = params.restarts;
  double best = std::numeric_limits<double>::infinity();
  double best_residual = 0.0;
  bool all_converged = true;

  for (int restart = 0; restart < params.restarts; ++restart) {
    Rng stream = rng.child(static_cast<std::uint64_t>(restart));
    DescentState s;
    s.q.resize(m, rank);
    if (restart == 0) {
      // Eigendecomposition itself: the canonical starting point, whose
      // average pure-state measure the estimate may never exceed.
      s.q.setZero();
      s.q.topLeftCorner(rank, rank).setIdentity();
    } else {
      s.q = orthonormalize(ginibre(m, rank, stream));
    }
    s.values.resize(m);
    for (Index i = 0; i < m; ++i)
      s.values(i) = column_measure(v * s.q.row(i).adjoint(), d, f, measure);
    s.total = s.values.sum();

    PhaseOutcome spread = descend_phase(v, d, f, measure, /*squared=*/true,
                                        kSpreadIters, params.tol, s, stream);
    PhaseOutcome polish = descend_phase(v, d, f, measure, /*squared=*/false,
                                        params.max_iters, params.tol, s,
                                        stream);
    out.iterations += spread.iterations + polish.iterations;
    s.total = s.values.sum();  // shed incremental drift; exact and >= 0
    const bool converged =
        polish.step_floor || s.total <= params.tol;
    all_converged = all_converged && converged;
    if (s.total < best) {
      best = s.total;
      best_residual = polish.last_improvement;
    }
    if (best <= params.tol) break;  // nonnegative measure; nothing to gain
  }

  out.value = best;
  out.converged = all_converged;
  out.residual = best_residual;
  return out;
}

}  // namespace entevo
