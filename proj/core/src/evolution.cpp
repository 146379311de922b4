// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#include "entevo/evolution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "entevo/measures_detail.hpp"

namespace entevo {

std::string method_name(Method m) {
  switch (m) {
    case Method::exact_pure: return "exact_pure";
    case Method::wootters: return "wootters";
    case Method::roof: return "roof";
  }
  throw std::logic_error("method_name: unknown method");
}

Method method_from_name(const std::string& name) {
  if (name == "exact_pure") return Method::exact_pure;
  if (name == "wootters") return Method::wootters;
  if (name == "roof") return Method::roof;
  throw std::invalid_argument("unknown method: " + name);
}

std::string law_name(Law law) {
  switch (law) {
    case Law::factorization: return "factorization";
    case Law::two_sided: return "two-sided";
    case Law::ck: return "ck";
  }
  throw std::logic_error("law_name: unknown law");
}

Law law_from_name(const std::string& name) {
  if (name == "factorization") return Law::factorization;
  if (name == "two-sided") return Law::two_sided;
  if (name == "ck") return Law::ck;
  throw std::invalid_argument("unknown law: " + name);
}

double method_tolerance(Method m) {
  return (m == Method::roof) ? 5e-3 : 1e-9;
}

namespace {

const Matrix& single_kraus(const KrausChannel& ch, const char* where) {
  if (ch.kraus().size() != 1)
    throw std::invalid_argument(std::string(where) +
                                ": exact_pure needs a single-Kraus channel");
  return ch.kraus().front();
}

// Mixed-state measure dispatch. Pure inputs short-circuit through the
// rank-one fast path inside roof_estimate.
double mixed_measure(const DensityMatrix& rho, const RoofMeasure& measure,
                     Method method, const RoofParams& params, const Rng& rng) {
  switch (method) {
    case Method::wootters:
      // C_2 coincides with G_2, so either measure maps to the oracle.
      if (rho.d() != 2 || rho.f() != 2)
        throw std::invalid_argument("wootters method requires d = 2");
      if (measure.kind == RoofMeasure::Kind::c_k && measure.k != 2)
        throw std::invalid_argument("wootters method covers only C_2 at d = 2");
      return wootters_concurrence(rho);
    case Method::roof:
      return roof_estimate(rho, measure, params, rng).value;
    case Method::exact_pure:
      throw std::invalid_argument(
          "exact_pure cannot evaluate a generic mixed state");
  }
  throw std::logic_error("mixed_measure: unknown method");
}

double pure_measure(const PureState& chi, const RoofMeasure& measure) {
  return (measure.kind == RoofMeasure::Kind::g_concurrence)
             ? g_concurrence_pure(chi)
             : c_k_pure(chi, measure.k);
}

void require_square(const PureState& chi, const KrausChannel& ch,
                    const char* where) {
  if (chi.d() != chi.f())
    throw std::invalid_argument(std::string(where) + ": requires d = f");
  if (ch.dim() != chi.d())
    throw std::invalid_argument(std::string(where) +
                                ": channel dimension mismatch");
  if (!chi.is_normalized())
    throw std::invalid_argument(std::string(where) +
                                ": initial state must be normalized");
}

struct LawValues {
  double lhs, rhs_initial, rhs_channel;
};

// Shared body of the factorization and C_k checks: evaluate the evolved
// state, the initial state and the Jamiolkowski state with one measure.
LawValues evaluate_one_sided_law(const PureState& chi, const KrausChannel& ch,
                                 const RoofMeasure& measure, Method method,
                                 const RoofParams& params, const Rng& rng) {
  switch (method) {
    case Method::exact_pure: {
      const Matrix& k = single_kraus(ch, "evaluate_one_sided_law");
      // Homogeneous convention: measure the subnormalized outputs directly.
      PureState evolved = apply_single_kraus(k, chi, Side::second);
      PureState phi_out =
          apply_single_kraus(k, max_entangled(chi.d()), Side::second);
      return {pure_measure(evolved, measure), pure_measure(chi, measure),
              pure_measure(phi_out, measure)};
    }
    case Method::wootters:
    case Method::roof: {
      DensityMatrix evolved = apply_one_sided(ch, chi, Side::second);
      DensityMatrix rho_ch = jamiolkowski_state(ch);
      double lhs = mixed_measure(evolved, measure, method, params, rng.child(0));
      double rhs_channel =
          mixed_measure(rho_ch, measure, method, params, rng.child(1));
      return {lhs, pure_measure(chi, measure), rhs_channel};
    }
  }
  throw std::logic_error("evaluate_one_sided_law: unknown method");
}

}  // namespace

FactorizationReport verify_factorization(const PureState& chi,
                                         const KrausChannel& ch, Method method,
                                         const RoofParams& params,
                                         const Rng& rng) {
  require_square(chi, ch, "verify_factorization");
  LawValues v = evaluate_one_sided_law(chi, ch, RoofMeasure::g(), method,
                                       params, rng);
  FactorizationReport report;
  report.lhs = v.lhs;
  report.rhs_initial = v.rhs_initial;
  report.rhs_channel = v.rhs_channel;
  report.abs_error = std::abs(v.lhs - v.rhs_initial * v.rhs_channel);
  report.method = method;
  report.seed = rng.seed();
  report.params = params;
  return report;
}

TwoSidedReport verify_two_sided_bound(const DensityMatrix& rho0,
                                      const KrausChannel& ch1,
                                      const KrausChannel& ch2, Method method,
                                      const RoofParams& params,
                                      const Rng& rng) {
  if (rho0.d() != rho0.f())
    throw std::invalid_argument("verify_two_sided_bound: requires d = f");
  if (ch1.dim() != rho0.d() || ch2.dim() != rho0.f())
    throw std::invalid_argument(
        "verify_two_sided_bound: channel dimension mismatch");
  const Index d = rho0.d();
  const RoofMeasure measure = RoofMeasure::g();
  TwoSidedReport report;
  report.method = method;
  report.seed = rng.seed();
  report.params = params;

  PureState phi = max_entangled(d);
  if (method == Method::exact_pure) {
    const Matrix& k1 = single_kraus(ch1, "verify_two_sided_bound");
    const Matrix& k2 = single_kraus(ch2, "verify_two_sided_bound");
    PureState chi = extract_pure(rho0);
    PureState evolved =
        apply_single_kraus(k2, apply_single_kraus(k1, chi, Side::first),
                           Side::second);
    report.lhs = pure_measure(evolved, measure);
    report.rhs_state = pure_measure(chi, measure);
    report.rhs_channel_1 =
        pure_measure(apply_single_kraus(k1, phi, Side::first), measure);
    report.rhs_channel_2 =
        pure_measure(apply_single_kraus(k2, phi, Side::second), measure);
  } else {
    DensityMatrix evolved = apply_two_sided(ch1, ch2, rho0);
    DensityMatrix j1 = apply_one_sided(ch1, phi, Side::first);
    DensityMatrix j2 = apply_one_sided(ch2, phi, Side::second);
    report.lhs = mixed_measure(evolved, measure, method, params, rng.child(0));
    report.rhs_channel_1 =
        mixed_measure(j1, measure, method, params, rng.child(1));
    report.rhs_channel_2 =
        mixed_measure(j2, measure, method, params, rng.child(2));
    report.rhs_state =
        mixed_measure(rho0, measure, method, params, rng.child(3));
  }
  report.rhs = report.rhs_state * report.rhs_channel_1 * report.rhs_channel_2;
  report.slack = report.rhs - report.lhs;
  return report;
}

CkReport verify_ck_bound(const PureState& chi, const KrausChannel& ch, int k,
                         Method method, const RoofParams& params,
                         const Rng& rng) {
  require_square(chi, ch, "verify_ck_bound");
  const int d = static_cast<int>(chi.d());
  if (k < 2 || k > d)
    throw std::invalid_argument("verify_ck_bound: k outside [2, d]");
  LawValues v = evaluate_one_sided_law(chi, ch, RoofMeasure::ck(k), method,
                                       params, rng);
  CkReport report;
  report.k = k;
  report.lhs = v.lhs;
  report.rhs_initial = v.rhs_initial;
  report.rhs_channel = v.rhs_channel;
  report.binom_factor = std::pow(detail::binomial(d, k), 1.0 / k);
  report.rhs = v.rhs_initial * v.rhs_channel * report.binom_factor;
  report.slack = report.rhs - report.lhs;
  report.method = method;
  report.seed = rng.seed();
  report.params = params;
  return report;
}

std::vector<TrajectoryRecord> trajectory(Index d, double gamma, double t_max,
                                         int steps, bool with_ck_roofs,
                                         const RoofParams& params,
                                         const Rng& rng) {
  if (steps < 2) throw std::invalid_argument("trajectory: steps must be >= 2");
  if (!(t_max > 0.0))
    throw std::invalid_argument("trajectory: t_max must be positive");
  const double t_d = drop_time(d, gamma, static_cast<int>(d));
  std::vector<TrajectoryRecord> records;
  records.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    TrajectoryRecord rec;
    rec.t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    rec.fidelity = fidelity_at_time(d, gamma, rec.t);
    rec.concurrence = concurrence_trajectory(d, gamma, rec.t);
    rec.schmidt_number = isotropic_schmidt_number(d, rec.fidelity);
    rec.g_positive = rec.t < t_d;
    if (with_ck_roofs) {
      DensityMatrix iso = isotropic_state(d, rec.fidelity);
      Rng point_rng = rng.child(static_cast<std::uint64_t>(i));
      for (int k = 2; k <= d; ++k)
        rec.c_k.push_back(roof_estimate(iso, RoofMeasure::ck(k), params,
                                        point_rng.child(k))
                              .value);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

SweepSummary monte_carlo_sweep(const SweepConfig& config) {
  if (config.d < 2)
    throw std::invalid_argument("monte_carlo_sweep: requires d >= 2");
  if (config.n_states < 0 || config.n_channels < 1)
    throw std::invalid_argument("monte_carlo_sweep: invalid case counts");
  if (config.n_kraus < 0 || config.n_kraus > config.d * config.d)
    throw std::invalid_argument("monte_carlo_sweep: n_kraus outside [0, d^2]");
  if (config.method == Method::wootters && config.d != 2)
    throw std::invalid_argument("monte_carlo_sweep: wootters requires d = 2");
  if (config.law == Law::ck &&
      (config.k < 2 || config.k > static_cast<int>(config.d)))
    throw std::invalid_argument("monte_carlo_sweep: k outside [2, d]");

  SweepSummary summary;
  summary.config = config;
  summary.tolerance = (config.tolerance > 0.0) ? config.tolerance
                                               : method_tolerance(config.method);
  summary.n_cases = config.n_states * config.n_channels;
  summary.min_slack = std::numeric_limits<double>::infinity();
  summary.cases.reserve(static_cast<std::size_t>(summary.n_cases));

  const Rng base(config.seed);
  const Index d = config.d;
  double error_sum = 0.0;

  for (int s = 0; s < config.n_states; ++s) {
    Rng state_rng = base.child(0).child(static_cast<std::uint64_t>(s));
    PureState chi = random_pure_state(d, d, state_rng);
    for (int c = 0; c < config.n_channels; ++c) {
      const std::uint64_t case_index =
          static_cast<std::uint64_t>(s) *
              static_cast<std::uint64_t>(config.n_channels) +
          static_cast<std::uint64_t>(c);
      Rng channel_rng = base.child(1).child(case_index);
      Index n_kraus = config.n_kraus;
      if (n_kraus == 0)
        n_kraus = 1 + static_cast<Index>(channel_rng.next_u64() %
                                         static_cast<std::uint64_t>(d * d));
      KrausChannel ch =
          (config.method == Method::exact_pure)
              ? random_filter_channel(d, channel_rng)
              : random_channel(d, n_kraus, channel_rng);
      Rng verify_rng = base.child(2).child(case_index);

      SweepCase record;
      record.state_index = s;
      record.channel_index = c;
      switch (config.law) {
        case Law::factorization: {
          FactorizationReport rep = verify_factorization(
              chi, ch, config.method, config.params, verify_rng);
          record.lhs = rep.lhs;
          record.rhs = rep.rhs_initial * rep.rhs_channel;
          record.abs_error = rep.abs_error;
          record.failed = rep.abs_error > summary.tolerance;
          break;
        }
        case Law::two_sided: {
          KrausChannel ch2 =
              (config.method == Method::exact_pure)
                  ? random_filter_channel(d, channel_rng)
                  : random_channel(d, n_kraus, channel_rng);
          TwoSidedReport rep =
              verify_two_sided_bound(chi.projector(), ch, ch2, config.method,
                                     config.params, verify_rng);
          record.lhs = rep.lhs;
          record.rhs = rep.rhs;
          record.slack = rep.slack;
          record.failed = rep.slack < -summary.tolerance;
          break;
        }
        case Law::ck: {
          CkReport rep = verify_ck_bound(chi, ch, config.k, config.method,
                                         config.params, verify_rng);
          record.lhs = rep.lhs;
          record.rhs = rep.rhs;
          record.slack = rep.slack;
          record.failed = rep.slack < -summary.tolerance;
          break;
        }
      }
      if (record.failed) ++summary.failures;
      summary.max_abs_error = std::max(summary.max_abs_error, record.abs_error);
      summary.min_slack = std::min(summary.min_slack, record.slack);
      error_sum += record.abs_error;
      summary.cases.push_back(record);
    }
  }
  if (summary.n_cases > 0) summary.mean_abs_error = error_sum / summary.n_cases;
  if (summary.cases.empty()) summary.min_slack = 0.0;
  return summary;
}

}  // namespace entevo
