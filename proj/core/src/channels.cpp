// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#include "entevo/channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace entevo {

KrausChannel::KrausChannel(Index dim, std::vector<Matrix> kraus)
    : dim_(dim), kraus_(std::move(kraus)) {
  if (dim_ < 1)
    throw std::invalid_argument("KrausChannel: dimension must be positive");
  if (kraus_.empty())
    throw std::invalid_argument("KrausChannel: needs at least one operator");
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (const Matrix& k : kraus_) {
    if (k.rows() != dim_ || k.cols() != dim_)
      throw std::invalid_argument("KrausChannel: operators must be d x d");
    if (!is_finite(k))
      throw std::invalid_argument("KrausChannel: non-finite operator entries");
    sum += k.adjoint() * k;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(sum, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().maxCoeff() > 1.0 + tol::kKraus)
    throw std::invalid_argument(
        "KrausChannel: sum K^dagger K exceeds the identity");
  trace_preserving_ =
      max_abs(sum - Matrix::Identity(dim_, dim_)) <= tol::kKraus;
}

KrausChannel KrausChannel::identity(Index d) {
  return KrausChannel(d, {Matrix::Identity(d, d)});
}

KrausChannel KrausChannel::unitary(Matrix u) {
  const Index d = u.rows();
  if (u.cols() != d)
    throw std::invalid_argument("KrausChannel::unitary: not square");
  return KrausChannel(d, {std::move(u)});
}

Matrix KrausChannel::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_)
    throw std::invalid_argument("KrausChannel::apply: dimension mismatch");
  Matrix out = Matrix::Zero(dim_, dim_);
  for (const Matrix& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

Matrix weyl_operator(Index d, Index a, Index b) {
  if (d < 1) throw std::invalid_argument("weyl_operator: d must be positive");
  if (a < 0 || a >= d || b < 0 || b >= d)
    throw std::invalid_argument("weyl_operator: indices must lie in [0, d)");
  Matrix w = Matrix::Zero(d, d);
  const double theta = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (Index k = 0; k < d; ++k) {
    // (X^a Z^b)|k> = omega^(b k) |k + a mod d>
    w((k + a) % d, k) = std::polar(1.0, theta * static_cast<double>(b * k));
  }
  return w;
}

KrausChannel depolarizing_channel(Index d, double p) {
  if (d < 2)
    throw std::invalid_argument("depolarizing_channel: requires d >= 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("depolarizing_channel: p outside [0, 1]");
  const double dim2 = static_cast<double>(d * d);
  std::vector<Matrix> kraus;
  kraus.reserve(d * d);
  kraus.push_back(std::sqrt(1.0 - p + p / dim2) * Matrix::Identity(d, d));
  const double w = std::sqrt(p / dim2);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      if (a == 0 && b == 0) continue;
      kraus.push_back(w * weyl_operator(d, a, b));
    }
  return KrausChannel(d, std::move(kraus));
}

KrausChannel random_channel(Index d, Index n_kraus, Rng& rng) {
  if (d < 2) throw std::invalid_argument("random_channel: requires d >= 2");
  if (n_kraus < 1 || n_kraus > d * d)
    throw std::invalid_argument("random_channel: n_kraus outside [1, d^2]");
  // First d columns of a Haar unitary on C^(d*n) form a random isometry;
  // its d x d row blocks are the Kraus operators.
  Matrix u = haar_unitary(d * n_kraus, rng);
  Matrix v = u.leftCols(d);
  std::vector<Matrix> kraus;
  kraus.reserve(n_kraus);
  for (Index i = 0; i < n_kraus; ++i)
    kraus.push_back(v.middleRows(i * d, d));
  return KrausChannel(d, std::move(kraus));
}

KrausChannel random_filter_channel(Index d, Rng& rng) {
  if (d < 2)
    throw std::invalid_argument("random_filter_channel: requires d >= 2");
  Matrix m = ginibre(d, d, rng);
  double smax = svd(m).singular_values(0);
  if (smax <= 0.0) m = Matrix::Identity(d, d);  // zero draw; vanishing chance
  else m /= smax;
  return KrausChannel(d, {std::move(m)});
}

namespace {

Matrix one_sided_output(const KrausChannel& ch, const Matrix& rho, Index d,
                        Index f, Side side) {
  const Index other = (side == Side::first) ? f : d;
  Matrix out = Matrix::Zero(d * f, d * f);
  Matrix eye = Matrix::Identity(other, other);
  for (const Matrix& k : ch.kraus()) {
    Matrix lifted = (side == Side::first) ? kron(k, eye) : kron(eye, k);
    out += lifted * rho * lifted.adjoint();
  }
  return out;
}

}  // namespace

DensityMatrix apply_one_sided(const KrausChannel& ch, const DensityMatrix& rho,
                              Side side) {
  const Index acted = (side == Side::first) ? rho.d() : rho.f();
  if (ch.dim() != acted)
    throw std::invalid_argument("apply_one_sided: channel dimension mismatch");
  return DensityMatrix(rho.d(), rho.f(),
                       one_sided_output(ch, rho.matrix(), rho.d(), rho.f(),
                                        side));
}

DensityMatrix apply_one_sided(const KrausChannel& ch, const PureState& chi,
                              Side side) {
  return apply_one_sided(ch, chi.projector(), side);
}

DensityMatrix apply_two_sided(const KrausChannel& ch1, const KrausChannel& ch2,
                              const DensityMatrix& rho) {
  return apply_one_sided(ch2, apply_one_sided(ch1, rho, Side::first),
                         Side::second);
}

PureState apply_single_kraus(const Matrix& k, const PureState& chi, Side side) {
  if (side == Side::first) {
    if (k.cols() != chi.d())
      throw std::invalid_argument("apply_single_kraus: dimension mismatch");
    return PureState(k * chi.coeffs());
  }
  if (k.cols() != chi.f())
    throw std::invalid_argument("apply_single_kraus: dimension mismatch");
  return PureState(chi.coeffs() * k.transpose());
}

DensityMatrix jamiolkowski_state(const KrausChannel& ch) {
  return apply_one_sided(ch, max_entangled(ch.dim()), Side::second);
}

KrausChannel channel_from_jamiolkowski(const DensityMatrix& rho) {
  if (rho.d() != rho.f())
    throw std::invalid_argument("channel_from_jamiolkowski: requires d = f");
  const Index d = rho.d();
  Matrix first = rho.reduced(Side::second);
  if (max_abs(first - Matrix::Identity(d, d) / static_cast<double>(d)) > 1e-8)
    throw std::invalid_argument(
        "channel_from_jamiolkowski: first reduction is not maximally mixed; "
        "not the image of a trace-preserving channel");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("channel_from_jamiolkowski: eigensolver failure");
  const RealVector& vals = es.eigenvalues();  // ascending
  const double cutoff = tol::kSingularZeroRel * vals.maxCoeff();
  std::vector<Matrix> kraus;
  for (Index idx = vals.size() - 1; idx >= 0; --idx) {
    if (vals(idx) <= cutoff) break;
    // Eigenvector v of rho_$ with weight mu encodes a Kraus operator via
    // (1 (x) K)|Phi>: v[n*d + i] = K_(i,n)/sqrt(d).
    Vector v = es.eigenvectors().col(idx);
    Matrix k(d, d);
    for (Index n = 0; n < d; ++n)
      for (Index i = 0; i < d; ++i) k(i, n) = v(n * d + i);
    k *= std::sqrt(vals(idx) * static_cast<double>(d));
    kraus.push_back(std::move(k));
  }
  return KrausChannel(d, std::move(kraus));
}

DensityMatrix dual_form(const PureState& chi, const KrausChannel& ch) {
  if (chi.d() != chi.f())
    throw std::invalid_argument("dual_form: requires d = f");
  if (ch.dim() != chi.d())
    throw std::invalid_argument("dual_form: channel dimension mismatch");
  Matrix filter = filtering_operator(chi);
  Matrix lifted = kron(filter, Matrix::Identity(chi.d(), chi.d()));
  DensityMatrix rho_ch = jamiolkowski_state(ch);
  return DensityMatrix(chi.d(), chi.d(),
                       lifted * rho_ch.matrix() * lifted.adjoint());
}

double action_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("action_distance: dimension mismatch");
  const Index d = a.dim();
  double worst = 0.0;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Matrix unit = Matrix::Zero(d, d);
      unit(i, j) = 1.0;
      worst = std::max(worst, max_abs(a.apply(unit) - b.apply(unit)));
    }
  return worst;
}

}  // namespace entevo
