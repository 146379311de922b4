// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "entevo/channels.hpp"
#include "entevo/roof.hpp"

using namespace entevo;

namespace {

// Explicit decomposition of the d = 3 isotropic state at F in [1/3, 2/3]
// into twelve Schmidt-rank-2 vectors: for each of the four phase-space
// lines, the three cyclic shifts of cos(theta)|00> + sin(theta)|11>
// expressed in that line's basis, with sin(2 theta) = 3F - 1. Used as an
// independent certificate that the roof of G vanishes there.
std::vector<Matrix> rank2_isotropic_decomposition(double fidelity) {
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  Matrix x = weyl_operator(3, 1, 0);
  Matrix fourier(3, 3);
  for (Index j = 0; j < 3; ++j)
    for (Index k = 0; k < 3; ++k)
      fourier(j, k) = std::pow(omega, static_cast<double>(j * k)) /
                      std::sqrt(3.0);
  Matrix phase = Matrix::Identity(3, 3);
  phase(2, 2) = omega;

  const double theta = 0.5 * std::asin(3.0 * fidelity - 1.0);
  Matrix seed = Matrix::Zero(3, 3);
  seed(0, 0) = std::cos(theta);
  seed(1, 1) = std::sin(theta);

  std::vector<Matrix> line;
  for (Index c = 0; c < 3; ++c) {
    Matrix xc = Matrix::Identity(3, 3);
    for (Index i = 0; i < c; ++i) xc = x * xc;
    line.push_back(xc * seed * xc.transpose());
  }
  std::vector<Matrix> vectors = line;
  auto conjugate_line = [](const std::vector<Matrix>& in, const Matrix& v) {
    std::vector<Matrix> out;
    for (const Matrix& a : in) out.push_back(v * a * v.conjugate().transpose());
    return out;
  };
  std::vector<Matrix> l2 = conjugate_line(line, fourier);
  std::vector<Matrix> l3 = conjugate_line(l2, phase);
  std::vector<Matrix> l4 = conjugate_line(l3, phase);
  vectors.insert(vectors.end(), l2.begin(), l2.end());
  vectors.insert(vectors.end(), l3.begin(), l3.end());
  vectors.insert(vectors.end(), l4.begin(), l4.end());
  return vectors;
}

}  // namespace

TEST_SUITE("roof") {

TEST_CASE("rank-one inputs evaluate exactly, independent of parameters") {
  RoofParams tiny;
  tiny.restarts = 1;
  tiny.max_iters = 1;
  CHECK(roof_estimate(max_entangled(3).projector(), RoofMeasure::g(), tiny,
                      Rng(1))
            .value == doctest::Approx(1.0).epsilon(1e-10));

  Rng rng(2);
  PureState chi = random_pure_state(3, 3, rng);
  RoofEstimate est = roof_estimate(chi.projector(), RoofMeasure::g(),
                                   RoofParams{}, Rng(3));
  CHECK(est.value == doctest::Approx(g_concurrence_pure(chi)).epsilon(1e-10));
  CHECK(est.converged);

  // rank-deficient pure state: exactly zero
  Matrix bell3 = Matrix::Zero(3, 3);
  bell3(0, 0) = bell3(1, 1) = 1.0 / std::sqrt(2.0);
  CHECK(roof_estimate(PureState(bell3).projector(), RoofMeasure::g(),
                      RoofParams{}, Rng(4))
            .value == 0.0);
}

TEST_CASE("input validation") {
  Rng rng(5);
  DensityMatrix rho = random_density_matrix(2, 2, 3, rng);
  RoofParams params;

  params.ensemble_size = 2;  // below rank 3
  CHECK_THROWS_AS(roof_estimate(rho, RoofMeasure::g(), params, Rng(1)),
                  std::invalid_argument);

  params.ensemble_size = 0;
  CHECK_THROWS_AS(roof_estimate(rho, RoofMeasure::ck(5), params, Rng(1)),
                  std::invalid_argument);

  DensityMatrix sub(2, 2, 0.5 * rho.matrix());
  CHECK_THROWS_AS(roof_estimate(sub, RoofMeasure::g(), params, Rng(1)),
                  std::invalid_argument);

  DensityMatrix rect = random_pure_state(2, 3, rng).projector();
  CHECK_THROWS_AS(roof_estimate(rect, RoofMeasure::g(), params, Rng(1)),
                  std::invalid_argument);
}

TEST_CASE("estimate never exceeds the eigendecomposition average") {
  Rng rng(6);
  for (int rep = 0; rep < 5; ++rep) {
    DensityMatrix rho = random_density_matrix(2, 2, 4, rng);
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
    double eigen_avg = 0.0;
    for (Index i = 0; i < 4; ++i) {
      Matrix a(2, 2);
      Vector v = std::sqrt(std::max(0.0, es.eigenvalues()(i))) *
                 es.eigenvectors().col(i);
      a << v(0), v(1), v(2), v(3);
      eigen_avg += g_concurrence_pure(PureState(a));
    }
    RoofParams quick;
    quick.restarts = 2;
    quick.max_iters = 200;
    RoofEstimate est =
        roof_estimate(rho, RoofMeasure::g(), quick, Rng(100 + rep));
    CHECK(est.value <= eigen_avg + 1e-12);
    CHECK(est.value >= 0.0);
  }
}

TEST_CASE("d = 2 estimates agree with the Wootters oracle") {
  Rng rng(7);
  RoofParams params;
  params.ensemble_size = 8;
  params.restarts = 20;
  for (int rep = 0; rep < 8; ++rep) {
    DensityMatrix rho = random_density_matrix(2, 2, 4, rng);
    double exact = wootters_concurrence(rho);
    double est =
        roof_estimate(rho, RoofMeasure::g(), params, rng.child(rep)).value;
    CHECK(est - exact >= -1e-9);
    CHECK(est - exact <= 1e-3);
  }

  CHECK(roof_estimate(isotropic_state(2, 0.625), RoofMeasure::g(), params,
                      Rng(8))
            .value == doctest::Approx(0.25).epsilon(1e-3));
}

TEST_CASE("the twelve-vector certificate reconstructs iso(3, 0.6)") {
  std::vector<Matrix> vectors = rank2_isotropic_decomposition(0.6);
  REQUIRE(vectors.size() == 12);
  Matrix sum = Matrix::Zero(9, 9);
  for (const Matrix& a : vectors) {
    PureState state(a);
    CHECK(schmidt_rank(state) == 2);
    CHECK(g_concurrence_pure(state) == 0.0);
    Vector v = state.vector();
    sum += v * v.adjoint() / 12.0;
  }
  CHECK(max_abs(sum - isotropic_state(3, 0.6).matrix()) <= 1e-12);
}

TEST_CASE("optimizer reaches the vanishing G of iso(3, 0.6)") {
  // below F = (d-1)/d the roof is exactly zero (certificate above);
  // default settings must get within 0.02 of it
  RoofEstimate est = roof_estimate(isotropic_state(3, 0.6), RoofMeasure::g(),
                                   RoofParams{}, Rng(9));
  CHECK(est.value <= 0.02);
  CHECK(est.value >= 0.0);
}

TEST_CASE("more restarts or iterations never worsen the estimate") {
  Rng rng(10);
  DensityMatrix rho = random_density_matrix(2, 2, 4, rng);

  RoofParams a;
  a.restarts = 3;
  a.max_iters = 400;
  RoofParams b = a;
  b.restarts = 9;
  RoofParams c = a;
  c.max_iters = 2500;

  double va = roof_estimate(rho, RoofMeasure::g(), a, Rng(11)).value;
  double vb = roof_estimate(rho, RoofMeasure::g(), b, Rng(11)).value;
  double vc = roof_estimate(rho, RoofMeasure::g(), c, Rng(11)).value;
  CHECK(vb <= va + 1e-12);
  CHECK(vc <= va + 1e-12);
}

TEST_CASE("c_k roof of the maximally entangled state is exact") {
  for (int k = 2; k <= 3; ++k) {
    RoofEstimate est = roof_estimate(max_entangled(3).projector(),
                                     RoofMeasure::ck(k), RoofParams{}, Rng(12));
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
  }
}

}  // TEST_SUITE
