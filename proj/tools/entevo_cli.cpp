// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: seeded experiments emitting plot-ready CSV and
// JSON reports. Exit codes: 0 success, 1 verification failure, 2 usage
// error, 3 I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "entevo/evolution.hpp"
#include "entevo/serialization.hpp"

namespace {

using entevo::Index;
using entevo::Rng;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed 9 significant digits, C locale, '.' separator.
std::string fmt9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path resolve_out(const std::string& out,
                                  const std::string& fallback) {
  if (!out.empty()) return out;
  if (const char* dir = std::getenv("ENTEVO_OUT_DIR"))
    return std::filesystem::path(dir) / fallback;
  return fallback;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw IoError("cannot open " + path.string() + " for writing");
  stream << text;
  stream.flush();
  if (!stream.good()) throw IoError("failed to write " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

struct RoofFlags {
  int ensemble = 0;
  int restarts = 20;
  int max_iters = 20000;
  double tol = 1e-10;

  entevo::RoofParams params() const {
    entevo::RoofParams p;
    p.ensemble_size = ensemble;
    p.restarts = restarts;
    p.max_iters = max_iters;
    p.tol = tol;
    return p;
  }
};

void add_roof_flags(CLI::App* cmd, RoofFlags& flags) {
  cmd->add_option("--ensemble", flags.ensemble,
                  "Decomposition size (0: min(d^2, 2*rank))");
  cmd->add_option("--restarts", flags.restarts, "Optimizer restarts");
  cmd->add_option("--max-iters", flags.max_iters,
                  "Descent iterations per restart");
  cmd->add_option("--tol", flags.tol, "Value floor for early stopping");
}

json roof_estimate_to_json(const entevo::RoofEstimate& est) {
  return json{{"value", est.value},
              {"ensemble_size", est.ensemble_size},
              {"restarts", est.restarts},
              {"iterations", est.iterations},
              {"converged", est.converged},
              {"residual", est.residual}};
}

// ---------------------------------------------------------------------------
// trajectory

struct TrajectoryOptions {
  Index d = 5;
  double gamma = 1.0;
  double t_max = 0.35;
  int steps = 200;
  bool ck_roofs = false;
  std::uint64_t seed = 12345;
  std::string out;
  RoofFlags roof;
};

int run_trajectory(const TrajectoryOptions& opt) {
  auto records = entevo::trajectory(opt.d, opt.gamma, opt.t_max, opt.steps,
                                    opt.ck_roofs, opt.roof.params(),
                                    Rng(opt.seed));
  std::ostringstream csv;
  csv << "t,F,concurrence,schmidt_number,g_positive";
  if (opt.ck_roofs)
    for (int k = 2; k <= opt.d; ++k) csv << ",c_" << k;
  csv << "\n";
  for (const auto& rec : records) {
    csv << fmt9(rec.t) << ',' << fmt9(rec.fidelity) << ','
        << fmt9(rec.concurrence) << ',' << rec.schmidt_number << ','
        << (rec.g_positive ? "true" : "false");
    for (double value : rec.c_k) csv << ',' << fmt9(value);
    csv << "\n";
  }

  json markers{{"command", "trajectory"},
               {"d", opt.d},
               {"gamma", opt.gamma},
               {"ratio_eq9", entevo::rate_ratio(opt.d)},
               {"timestamp", timestamp_utc()}};
  for (int k = 2; k <= opt.d; ++k)
    markers["t_" + std::to_string(k)] = entevo::drop_time(opt.d, opt.gamma, k);

  auto csv_path = resolve_out(opt.out, "trajectory.csv");
  auto sidecar = csv_path;
  sidecar.replace_extension(".markers.json");
  write_file(csv_path, csv.str());
  write_file(sidecar, markers.dump(2) + "\n");
  std::cout << "wrote " << csv_path.string() << " and " << sidecar.string()
            << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string law = "factorization";
  Index d = 2;
  int samples = 100;
  int channels = 1;
  Index n_kraus = 0;
  int k = 0;
  std::string method = "auto";
  double tolerance = 0.0;
  std::uint64_t seed = 12345;
  std::string out;
  RoofFlags roof;
};

int run_verify(const VerifyOptions& opt) {
  entevo::SweepConfig config;
  config.d = opt.d;
  config.law = entevo::law_from_name(opt.law);
  config.n_states = opt.samples;
  config.n_channels = opt.channels;
  config.n_kraus = opt.n_kraus;
  config.k = opt.k;
  config.method = (opt.method == "auto")
                      ? (opt.d == 2 ? entevo::Method::wootters
                                    : entevo::Method::roof)
                      : entevo::method_from_name(opt.method);
  config.params = opt.roof.params();
  config.tolerance = opt.tolerance;
  config.seed = opt.seed;

  entevo::SweepSummary summary = entevo::monte_carlo_sweep(config);

  json cases = json::array();
  for (const auto& c : summary.cases) {
    json entry{{"state", c.state_index},
               {"channel", c.channel_index},
               {"lhs", c.lhs},
               {"rhs", c.rhs},
               {"failed", c.failed}};
    if (config.law == entevo::Law::factorization)
      entry["abs_error"] = c.abs_error;
    else
      entry["slack"] = c.slack;
    cases.push_back(std::move(entry));
  }
  json doc{{"command", "verify"},
           {"law", entevo::law_name(config.law)},
           {"d", config.d},
           {"method", entevo::method_name(config.method)},
           {"samples", config.n_states},
           {"channels_per_state", config.n_channels},
           {"n_kraus", config.n_kraus},
           {"seed", config.seed},
           {"tolerance", summary.tolerance},
           {"n_cases", summary.n_cases},
           {"failures", summary.failures},
           {"max_abs_error", summary.max_abs_error},
           {"mean_abs_error", summary.mean_abs_error},
           {"min_slack", summary.min_slack},
           {"cases", std::move(cases)},
           {"timestamp", timestamp_utc()}};
  if (config.law == entevo::Law::ck) doc["k"] = config.k;

  write_file(resolve_out(opt.out, "verify.json"), doc.dump(2) + "\n");
  std::cout << "law=" << entevo::law_name(config.law)
            << " cases=" << summary.n_cases
            << " failures=" << summary.failures
            << " max_abs_error=" << fmt9(summary.max_abs_error)
            << " min_slack=" << fmt9(summary.min_slack) << "\n";
  return summary.failures == 0 ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// rates

struct RatesOptions {
  Index d_min = 2;
  Index d_max = 10;
  std::string out;
};

int run_rates(const RatesOptions& opt) {
  if (opt.d_min < 2 || opt.d_max < opt.d_min)
    throw std::invalid_argument("rates: need 2 <= d-min <= d-max");
  std::ostringstream csv;
  csv << "d,t_2,t_d,ratio,ratio_over_d\n";
  for (Index d = opt.d_min; d <= opt.d_max; ++d) {
    const double ratio = entevo::rate_ratio(d);
    csv << d << ',' << fmt9(entevo::drop_time(d, 1.0, 2)) << ','
        << fmt9(entevo::drop_time(d, 1.0, static_cast<int>(d))) << ','
        << fmt9(ratio) << ',' << fmt9(ratio / static_cast<double>(d)) << "\n";
  }
  auto path = resolve_out(opt.out, "rates.csv");
  write_file(path, csv.str());
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// roof

struct RoofOptions {
  std::string input;
  std::string measure = "G";
  int k = 0;
  std::uint64_t seed = 12345;
  std::string out;
  RoofFlags roof;
};

int run_roof(const RoofOptions& opt) {
  entevo::DensityMatrix rho =
      entevo::parse_state_as_density(read_file(opt.input));
  entevo::RoofMeasure measure = entevo::RoofMeasure::g();
  if (opt.measure == "C") {
    if (opt.k < 1)
      throw std::invalid_argument("roof: --measure C requires --k");
    measure = entevo::RoofMeasure::ck(opt.k);
  } else if (opt.measure != "G") {
    throw std::invalid_argument("roof: --measure must be G or C");
  }
  entevo::RoofEstimate est =
      entevo::roof_estimate(rho, measure, opt.roof.params(), Rng(opt.seed));
  json doc{{"command", "roof"},
           {"input", opt.input},
           {"measure", opt.measure},
           {"d", rho.d()},
           {"f", rho.f()},
           {"seed", opt.seed},
           {"estimate", roof_estimate_to_json(est)},
           {"timestamp", timestamp_utc()}};
  if (opt.measure == "C") doc["k"] = opt.k;
  write_file(resolve_out(opt.out, "roof.json"), doc.dump(2) + "\n");
  std::cout << "value=" << fmt9(est.value)
            << " converged=" << (est.converged ? "true" : "false") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "entevo: entanglement evolution of bipartite d-level systems under "
      "quantum channels"};
  app.require_subcommand(1);

  TrajectoryOptions traj;
  CLI::App* traj_cmd = app.add_subcommand(
      "trajectory", "Depolarizing evolution of the maximally entangled state");
  traj_cmd->add_option("--d", traj.d, "Subsystem dimension (>= 2)");
  traj_cmd->add_option("--gamma", traj.gamma, "Interaction rate Gamma");
  traj_cmd->add_option("--t-max", traj.t_max, "Last grid time");
  traj_cmd->add_option("--steps", traj.steps, "Grid points incl. 0 and t-max");
  traj_cmd->add_flag("--ck-roofs", traj.ck_roofs,
                     "Roof-estimate C_k at every grid point (slow)");
  traj_cmd->add_option("--seed", traj.seed, "Random seed");
  traj_cmd->add_option("--out", traj.out, "CSV path (default trajectory.csv)");
  add_roof_flags(traj_cmd, traj.roof);

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Monte Carlo check of the factorization law or its bounds");
  verify_cmd
      ->add_option("--law", verify.law,
                   "factorization | two-sided | ck")
      ->check(CLI::IsMember({"factorization", "two-sided", "ck"}));
  verify_cmd->add_option("--d", verify.d, "Subsystem dimension (>= 2)");
  verify_cmd->add_option("--samples", verify.samples, "Random initial states");
  verify_cmd->add_option("--channels", verify.channels,
                         "Random channels per state");
  verify_cmd->add_option("--n-kraus", verify.n_kraus,
                         "Kraus rank (0: sampled per case)");
  verify_cmd->add_option("--k", verify.k, "Hierarchy level for --law ck");
  verify_cmd
      ->add_option("--method", verify.method,
                   "auto | wootters | roof | exact_pure")
      ->check(CLI::IsMember({"auto", "wootters", "roof", "exact_pure"}));
  verify_cmd->add_option("--tolerance", verify.tolerance,
                         "Failure threshold (0: method tier default)");
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--out", verify.out,
                         "JSON path (default verify.json)");
  add_roof_flags(verify_cmd, verify.roof);

  RatesOptions rates;
  CLI::App* rates_cmd = app.add_subcommand(
      "rates", "Drop times and the dimension-only rate ratio per d");
  rates_cmd->add_option("--d-min", rates.d_min, "Smallest dimension");
  rates_cmd->add_option("--d-max", rates.d_max, "Largest dimension");
  rates_cmd->add_option("--out", rates.out, "CSV path (default rates.csv)");

  RoofOptions roof;
  CLI::App* roof_cmd = app.add_subcommand(
      "roof", "Convex-roof estimate for a state read from JSON");
  roof_cmd->add_option("--input", roof.input, "pure_state or density_matrix JSON")
      ->required();
  roof_cmd->add_option("--measure", roof.measure, "G | C")
      ->check(CLI::IsMember({"G", "C"}));
  roof_cmd->add_option("--k", roof.k, "Hierarchy level for --measure C");
  roof_cmd->add_option("--seed", roof.seed, "Random seed");
  roof_cmd->add_option("--out", roof.out, "JSON path (default roof.json)");
  add_roof_flags(roof_cmd, roof.roof);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(traj_cmd)) return run_trajectory(traj);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify);
    if (app.got_subcommand(rates_cmd)) return run_rates(rates);
    if (app.got_subcommand(roof_cmd)) return run_roof(roof);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
