// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTEVO_EVOLUTION_HPP
#define ENTEVO_EVOLUTION_HPP

#include <string>
#include <vector>

#include "entevo/channels.hpp"
#include "entevo/roof.hpp"

namespace entevo {

/// Estimator used when an experiment needs a mixed-state entanglement value.
///  - exact_pure: single-Kraus (or unitary) channels only; outputs stay pure
///    and the homogeneous pure-state formula is exact.
///  - wootters:   d = 2 only; the closed-form oracle.
///  - roof:       convex-roof upper bound at documented optimizer settings.
enum class Method { exact_pure, wootters, roof };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// One check of the factorization law
/// G[(1 (x) $)|chi><chi|] = G(|chi>) * G[(1 (x) $)|Phi><Phi|].
struct FactorizationReport {
  double lhs = 0.0;          // evolved-state entanglement
  double rhs_initial = 0.0;  // G_d(chi)
  double rhs_channel = 0.0;  // entanglement of the Jamiolkowski state
  double abs_error = 0.0;    // |lhs - rhs_initial * rhs_channel|
  Method method = Method::roof;
  std::uint64_t seed = 0;
  RoofParams params;
};

/// One check of the two-sided upper bound
/// G[($1 (x) $2) rho0] <= G(rho0) G[($1 (x) 1)Phi] G[(1 (x) $2)Phi].
struct TwoSidedReport {
  double lhs = 0.0;
  double rhs_state = 0.0;
  double rhs_channel_1 = 0.0;
  double rhs_channel_2 = 0.0;
  double rhs = 0.0;    // product of the three factors
  double slack = 0.0;  // rhs - lhs; negative values breach the bound
  Method method = Method::roof;
  std::uint64_t seed = 0;
  RoofParams params;
};

/// One check of the hierarchy inequality
/// C_k[(1 (x) $)|chi><chi|] <= C_k(chi) C_k[rho_$] binom(d,k)^(1/k).
struct CkReport {
  int k = 0;
  double lhs = 0.0;
  double rhs_initial = 0.0;
  double rhs_channel = 0.0;
  double binom_factor = 0.0;  // binom(d,k)^(1/k)
  double rhs = 0.0;
  double slack = 0.0;
  Method method = Method::roof;
  std::uint64_t seed = 0;
  RoofParams params;
};

FactorizationReport verify_factorization(const PureState& chi,
                                         const KrausChannel& ch, Method method,
                                         const RoofParams& params,
                                         const Rng& rng);

TwoSidedReport verify_two_sided_bound(const DensityMatrix& rho0,
                                      const KrausChannel& ch1,
                                      const KrausChannel& ch2, Method method,
                                      const RoofParams& params, const Rng& rng);

CkReport verify_ck_bound(const PureState& chi, const KrausChannel& ch, int k,
                         Method method, const RoofParams& params,
                         const Rng& rng);

/// One time point of the depolarizing evolution of |Phi>.
struct TrajectoryRecord {
  double t = 0.0;
  double fidelity = 0.0;
  double concurrence = 0.0;
  int schmidt_number = 0;
  bool g_positive = false;        // t < t_d
  std::vector<double> c_k;        // roof estimates for k = 2..d; empty unless requested
};

/// Uniform grid of `steps` records covering [0, t_max] inclusive.
/// with_ck_roofs additionally roof-estimates C_k of the isotropic state at
/// every grid point (expensive; meant for small grids).
std::vector<TrajectoryRecord> trajectory(Index d, double gamma, double t_max,
                                         int steps, bool with_ck_roofs,
                                         const RoofParams& params,
                                         const Rng& rng);

enum class Law { factorization, two_sided, ck };

std::string law_name(Law law);
Law law_from_name(const std::string& name);

struct SweepConfig {
  Index d = 2;
  Law law = Law::factorization;
  int n_states = 0;
  int n_channels = 1;   // channels per state
  Index n_kraus = 0;    // 0: sampled per case from [1, d^2]
  int k = 0;            // for Law::ck
  Method method = Method::wootters;
  RoofParams params;
  double tolerance = 0.0;  // 0: tier default (1e-9 exact, 5e-3 roof)
  std::uint64_t seed = 0;
};

struct SweepCase {
  int state_index = 0;
  int channel_index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_error = 0.0;  // factorization law
  double slack = 0.0;      // inequality laws
  bool failed = false;
};

struct SweepSummary {
  SweepConfig config;
  double tolerance = 0.0;
  int n_cases = 0;
  int failures = 0;
  double max_abs_error = 0.0;
  double mean_abs_error = 0.0;
  double min_slack = 0.0;
  std::vector<SweepCase> cases;
};

/// Tier default tolerance for a method: 1e-9 for exact estimators,
/// 5e-3 for roof-based ones (optimizer noise).
double method_tolerance(Method m);

/// Deterministic Monte Carlo aggregation of the chosen law over random
/// states and channels. A case fails when abs_error exceeds the tolerance
/// (factorization) or slack falls below -tolerance (inequalities).
SweepSummary monte_carlo_sweep(const SweepConfig& config);

}  // namespace entevo

#endif  // ENTEVO_EVOLUTION_HPP
