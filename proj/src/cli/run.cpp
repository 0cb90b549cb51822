// Copyright 2026 The decoherence-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "collapse/classicize.hpp"
#include "collapse/collapse.hpp"
#include "collapse/order_parameter.hpp"
#include "common/constants.hpp"
#include "common/error.hpp"
#include "hilbert/algebra.hpp"
#include "scenarios/bell.hpp"
#include "scenarios/bose.hpp"
#include "scenarios/sterngerlach.hpp"
#include "supersystem/correlated.hpp"
#include "wavepacket/criteria.hpp"
#include "wavepacket/spectral.hpp"

namespace decolab::cli {

namespace {

using json = nlohmann::ordered_json;
using wavepacket::GaussianPacket;
using wavepacket::Grid1D;

std::size_t positive_count(const RunConfig& config, const std::string& key, std::int64_t fallback) {
  const std::int64_t v = config.integer(key, fallback);
  require(v >= 1, ErrorCode::kNonPositiveInput, key + " must be at least 1");
  return static_cast<std::size_t>(v);
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

ScenarioResult run_sterngerlach(const RunConfig& config, const PhysicalConstants& constants) {
  scenarios::SGConfig sg;
  sg.beta_z = config.real("beta_z", 1e3);
  sg.mass = config.real("mass", config.paper_constants ? 1e-25 : 1.79e-25);
  sg.mu_b = config.real("mu_b", constants.bohr_magneton);
  sg.delta_z = config.real("delta_z", 1e-9);
  sg.sigma0 = config.real("sigma0", sg.delta_z);
  const double s = 1.0 / std::sqrt(2.0);
  sg.c_minus = config.complex("c_minus", Complex(s, 0.0));
  sg.c_plus = config.complex("c_plus", Complex(s, 0.0));
  sg.t_max = config.real("t_max", 3e-7);
  sg.n_steps = positive_count(config, "n_steps", 1000);
  const std::size_t n_points = positive_count(config, "grid_points", 2048);
  sg.grid = Grid1D(config.real("grid_min", -16e-9), config.real("grid_max", 16e-9), n_points);
  sg.spreading = config.flag("spreading", false);
  const std::size_t n_trials = positive_count(config, "n_trials", 10000);

  const scenarios::SGResult r = scenarios::sg_run(sg, n_trials, config.seed);
  const double dt = sg.t_max / static_cast<double>(sg.n_steps);

  ScenarioResult out;
  json& m = out.summary;
  m["tau_c_analytic"] = r.tau_c_analytic;
  m["tau_c_numeric"] = optional_json(r.tau_c_numeric);
  m["time_step"] = dt;
  m["crossing_error_steps"] =
      r.tau_c_numeric ? json(std::abs(*r.tau_c_numeric - r.tau_c_analytic) / dt) : json(nullptr);
  m["z_plus_at_tau_c"] = scenarios::sg_moments(sg, r.tau_c_analytic).z_plus;
  m["spreading_factor_at_tau"] = r.spreading_factor_at_tau;
  m["residual_at_0_1_tau_c"] = optional_json(r.residual_early);
  m["residual_at_2_tau_c"] = optional_json(r.residual_late);
  m["collapsed"] = r.collapsed;
  m["n_trials"] = r.n_trials;
  m["count_minus"] = r.count_minus;
  m["count_plus"] = r.count_plus;
  const double n = static_cast<double>(r.n_trials);
  m["freq_minus"] = r.collapsed ? json(static_cast<double>(r.count_minus) / n) : json(nullptr);
  m["freq_plus"] = r.collapsed ? json(static_cast<double>(r.count_plus) / n) : json(nullptr);
  m["weight_minus"] = r.weight_minus;
  m["weight_plus"] = r.weight_plus;
  m["warnings"] = r.warnings;

  out.traces.emplace_back("order_parameter", r.trace.to_table());
  Table moments;
  moments.columns = {"t", "z_plus", "z_minus", "p_plus", "p_minus"};
  for (const double t : r.trace.times) {
    const auto z = scenarios::sg_moments(sg, t);
    moments.add_row({t, z.z_plus, z.z_minus, z.p_plus, z.p_minus});
  }
  out.traces.emplace_back("moments", std::move(moments));
  out.documents.emplace_back("sterngerlach_correlated_state.json",
                             supersystem::to_json(scenarios::sg_initial_state(sg)).dump(2) + "\n");

  json& echo = out.provenance["config"];
  echo["beta_z"] = sg.beta_z;
  echo["mass"] = sg.mass;
  echo["mu_b"] = sg.mu_b;
  echo["delta_z"] = sg.delta_z;
  echo["sigma0"] = sg.sigma0;
  echo["c_minus"] = complex_json(sg.c_minus);
  echo["c_plus"] = complex_json(sg.c_plus);
  echo["t_max"] = sg.t_max;
  echo["n_steps"] = sg.n_steps;
  echo["n_trials"] = n_trials;
  echo["grid_min"] = sg.grid.x_min();
  echo["grid_max"] = sg.grid.x_max();
  echo["grid_points"] = sg.grid.size();
  echo["spreading"] = sg.spreading;
  return out;
}

ScenarioResult run_bell(const RunConfig& config) {
  const std::size_t n_configs = positive_count(config, "n_configs", 20);
  const double separation = config.real("separation", 16.0);
  require(separation > 0.0, ErrorCode::kNonPositiveInput, "separation must be positive");
  const std::size_t n_points = positive_count(config, "grid_points", 1024);
  const std::int64_t sign = config.integer("sign", 1);
  const double half = 0.5 * separation + 10.0;
  const Grid1D grid(-half, half, n_points);

  ScenarioResult out;
  Table table;
  table.columns = {"config", "lhs", "rhs", "satisfied", "approx_conditions_met", "chsh_value"};
  std::size_t n_satisfied = 0;
  std::size_t n_met = 0;
  for (std::size_t i = 0; i < n_configs; ++i) {
    const auto setup = scenarios::random_compliant_setup(collapse::split_seed(config.seed, i), grid,
                                                         separation, 1.0);
    const auto rep = scenarios::bell_evaluate(setup.state, setup.observables, static_cast<int>(sign), true);
    n_satisfied += rep.satisfied ? 1 : 0;
    n_met += rep.approx_conditions_met ? 1 : 0;
    table.add_row({static_cast<double>(i), rep.lhs, rep.rhs, rep.satisfied ? 1.0 : 0.0,
                   rep.approx_conditions_met ? 1.0 : 0.0, rep.chsh_value});
  }
  const double chsh = scenarios::chsh_singlet_optimal();
  json& m = out.summary;
  m["n_configs"] = n_configs;
  m["n_approx_conditions_met"] = n_met;
  m["n_satisfied"] = n_satisfied;
  m["all_satisfied"] = n_satisfied == n_configs;
  m["chsh_value"] = chsh;
  m["classical_bound"] = 2.0;
  m["tsirelson_bound"] = 2.0 * std::sqrt(2.0);
  m["chsh_exceeds_classical"] = chsh > 2.0;
  out.traces.emplace_back("configs", std::move(table));

  json& echo = out.provenance["config"];
  echo["n_configs"] = n_configs;
  echo["separation"] = separation;
  echo["grid_points"] = n_points;
  echo["sign"] = sign;
  return out;
}

ScenarioResult run_bose(const RunConfig& config, const PhysicalConstants& constants) {
  scenarios::BoseConfig bose;
  bose.mass = config.real("mass", 1.443e-25);
  bose.spacing = config.real("spacing", 2e-7);
  bose.temperatures = config.real_list("temps", {});
  const auto threshold = scenarios::bose_critical_temperature(bose, constants);

  ScenarioResult out;
  json& m = out.summary;
  m["t_c"] = threshold.t_c;
  m["lambda_at_t_c"] = scenarios::thermal_de_broglie(bose.mass, threshold.t_c, constants);
  json phases = json::array();
  Table table;
  table.columns = {"temperature", "lambda", "lambda_over_spacing", "condensed"};
  for (std::size_t i = 0; i < bose.temperatures.size(); ++i) {
    const double t = bose.temperatures[i];
    const double lambda = scenarios::thermal_de_broglie(bose.mass, t, constants);
    json p;
    p["temperature"] = t;
    p["lambda"] = lambda;
    p["phase"] = std::string(scenarios::to_string(threshold.phases[i]));
    phases.push_back(std::move(p));
    table.add_row({t, lambda, lambda / bose.spacing,
                   threshold.phases[i] == scenarios::BosePhase::kCondensed ? 1.0 : 0.0});
  }
  m["phases"] = std::move(phases);
  out.traces.emplace_back("sweep", std::move(table));

  json& echo = out.provenance["config"];
  echo["mass"] = bose.mass;
  echo["spacing"] = bose.spacing;
  echo["temps"] = bose.temperatures;
  return out;
}

ScenarioResult run_classicize(const RunConfig& config) {
  const std::vector<double> coeffs = config.real_list("coefficients", {});
  require(coeffs.size() >= 2, ErrorCode::kInvalidArgument, "classicize needs at least two coefficients");
  std::vector<Complex> amps(coeffs.begin(), coeffs.end());
  const hilbert::StateVector psi = hilbert::make_state(amps, "branch");
  const double eps = config.real("eps", kPi);
  const double speed = config.real("speed", 1.0);
  const double sigma = config.real("sigma", 1.0);
  const double t_max = config.real("t_max", 4.0);
  require(speed > 0.0 && sigma > 0.0 && t_max > 0.0, ErrorCode::kNonPositiveInput,
          "speed, sigma and t_max must be positive");
  const std::size_t n_steps = positive_count(config, "n_steps", 400);
  const double t = config.real("t", t_max);
  const std::size_t n_trials = positive_count(config, "n_trials", 1000);

  std::vector<supersystem::Branch> branches;
  std::vector<collapse::BranchTrajectory> trajectories;
  for (std::size_t n = 0; n < psi.dim(); ++n) {
    const double v = speed * static_cast<double>(n);
    branches.push_back(supersystem::Branch{psi[n], hilbert::StateVector::basis(psi.dim(), n, "branch"),
                                           GaussianPacket{0.0, 0.0, sigma, 1.0}, std::nullopt});
    trajectories.emplace_back([v, sigma](double s) { return GaussianPacket{v * s, v, sigma, 1.0}; });
  }
  const supersystem::CorrelatedState state(std::move(branches));
  std::vector<double> times(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k)
    times[k] = t_max * (static_cast<double>(k) / static_cast<double>(n_steps));
  const auto trace =
      collapse::order_parameter_trace(trajectories, collapse::TraceObservable::kPosition, times);

  ScenarioResult out;
  std::vector<std::size_t> counts(psi.dim(), 0);
  std::ostringstream lines;
  bool collapsed = false;
  for (std::size_t i = 0; i < n_trials; ++i) {
    const std::uint64_t trial_seed = collapse::split_seed(config.seed, i);
    const auto result = collapse::classicize(state, trace, t, trial_seed);
    if (const auto* p = std::get_if<collapse::CollapsedProduct>(&result)) {
      collapsed = true;
      ++counts[p->branch_index];
      collapse::CollapseOutcome o;
      o.branch_index = p->branch_index;
      o.prior = p->prior;
      o.posterior.assign(psi.dim(), 0.0);
      o.posterior[p->branch_index] = 1.0;
      o.seed = trial_seed;
      lines << collapse::to_json_line(o) << '\n';
    }
  }

  const hilbert::StateVector exact_w = hilbert::apply_w(psi, psi, eps);
  const hilbert::StateVector approx_w = collapse::approx_w_transform(psi, eps);
  json& m = out.summary;
  m["tau"] = optional_json(trace.tau);
  m["t"] = t;
  m["collapsed"] = collapsed;
  m["n_trials"] = n_trials;
  json weights = json::array();
  json freqs = json::array();
  json geometric = json::array();
  for (std::size_t n = 0; n < psi.dim(); ++n) {
    weights.push_back(std::norm(psi[n]));
    freqs.push_back(collapsed ? json(static_cast<double>(counts[n]) / static_cast<double>(n_trials))
                              : json(nullptr));
    geometric.push_back(collapse::geometric_reduction(psi[n], 1.0).probability);
  }
  m["weights"] = std::move(weights);
  m["frequencies"] = std::move(freqs);
  m["geometric_probabilities"] = std::move(geometric);
  m["phase_spread"] = collapse::decoherence_phase_spread(psi, eps);
  m["approx_vs_exact_w_deviation"] = (approx_w.amplitudes() - exact_w.amplitudes()).norm();

  out.traces.emplace_back("order_parameter", trace.to_table());
  if (collapsed) out.documents.emplace_back("classicize_outcomes.jsonl", lines.str());

  json& echo = out.provenance["config"];
  echo["coefficients"] = coeffs;
  echo["eps"] = eps;
  echo["speed"] = speed;
  echo["sigma"] = sigma;
  echo["t_max"] = t_max;
  echo["n_steps"] = n_steps;
  echo["t"] = t;
  echo["n_trials"] = n_trials;
  return out;
}

ScenarioResult run_wavepacket_check(const RunConfig& config) {
  const std::size_t n_packets = positive_count(config, "n_packets", 2);
  require(n_packets == 2 || n_packets == 3, ErrorCode::kInvalidArgument, "n_packets must be 2 or 3");
  const double separation = config.real("separation", 8.0);
  require(separation > 0.0, ErrorCode::kNonPositiveInput, "separation must be positive");
  const std::vector<double> coeffs = config.real_list("coefficients", std::vector<double>(n_packets, 1.0));
  require(coeffs.size() == n_packets, ErrorCode::kDimensionMismatch,
          "one coefficient per packet is required");
  const std::size_t n_points = positive_count(config, "grid_points", 4096);

  const double span = separation * static_cast<double>(n_packets - 1);
  const Grid1D grid(-0.5 * span - 12.0, 0.5 * span + 12.0, n_points);
  std::vector<GaussianPacket> packets;
  for (std::size_t k = 0; k < n_packets; ++k)
    packets.push_back(GaussianPacket{-0.5 * span + separation * static_cast<double>(k), 0.0, 1.0, 1.0});
  std::vector<Complex> amps(coeffs.begin(), coeffs.end());

  const auto verdict = wavepacket::superposition_packet_test(packets, amps, grid);
  const auto centered = wavepacket::discretize_gaussian(grid, GaussianPacket{0.0, 0.0, 1.0, 1.0});
  const wavepacket::AnalyticObservable quartic{
      "x^4", [](double x) { return x * x * x * x; }, [](double x) { return 4.0 * x * x * x; },
      [](double x) { return 12.0 * x * x; }};
  const wavepacket::AnalyticObservable quadratic{
      "x^2 + 10", [](double x) { return x * x + 10.0; }, [](double x) { return 2.0 * x; },
      [](double) { return 2.0; }};
  const auto quart = wavepacket::wavepacket_criterion(centered, quartic, grid);
  const auto quad = wavepacket::wavepacket_criterion(centered, quadratic, grid);

  CVector sum = CVector::Zero(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t k = 0; k < n_packets; ++k)
    sum += amps[k] * wavepacket::discretize_gaussian(grid, packets[k]).amplitudes();
  const hilbert::StateVector superposition = hilbert::make_state(sum, "grid:x");

  ScenarioResult out;
  json& m = out.summary;
  m["constituent_ratios"] = verdict.constituent_ratios;
  m["each_passes"] = verdict.each_passes;
  m["superposition_ratio"] = verdict.superposition_ratio;
  m["superposition_passes"] = verdict.superposition_passes;
  m["quadratic_taylor_residual"] = quad.taylor_residual;
  m["quartic_taylor_residual"] = quart.taylor_residual;
  m["quartic_analytic_residual"] = 3.0;
  m["superposition_momentum_mean"] = wavepacket::momentum_moments(grid, superposition).mean;
  out.traces.emplace_back("superposition", wavepacket::grid_state_table(grid, superposition));

  json& echo = out.provenance["config"];
  echo["n_packets"] = n_packets;
  echo["separation"] = separation;
  echo["coefficients"] = coeffs;
  echo["grid_points"] = n_points;
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(f), ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  f << content;
  f.close();
  require(!f.fail(), ErrorCode::kIoError, "failed writing " + path.string());
}

}  // namespace

ScenarioResult run(const RunConfig& config) {
  const PhysicalConstants& constants = config.paper_constants ? kPaperRound : kCodata;
  ScenarioResult result;
  switch (config.scenario) {
    case Scenario::kSternGerlach: result = run_sterngerlach(config, constants); break;
    case Scenario::kBell: result = run_bell(config); break;
    case Scenario::kBose: result = run_bose(config, constants); break;
    case Scenario::kClassicize: result = run_classicize(config); break;
    case Scenario::kWavepacketCheck: result = run_wavepacket_check(config); break;
  }
  result.scenario = config.scenario;
  json provenance;
  provenance["constants_version"] = std::string(constants.version);
  provenance["seed"] = config.seed;
  provenance["config"] = std::move(result.provenance["config"]);
  result.provenance = std::move(provenance);
  return result;
}

std::string summary_json(const ScenarioResult& result) {
  json doc;
  doc["scenario"] = std::string(to_string(result.scenario));
  doc["summary"] = result.summary;
  doc["provenance"] = result.provenance;
  return doc.dump(2) + "\n";
}

std::vector<std::string> emit(const ScenarioResult& result, const RunConfig& config) {
  namespace fs = std::filesystem;
  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  require(!ec, ErrorCode::kIoError, "cannot create output directory " + dir.string() + ": " + ec.message());

  std::vector<std::string> written;
  const fs::path summary = dir / "summary.json";
  write_file(summary, summary_json(result));
  written.push_back(summary.string());
  if (config.write_csv) {
    for (const auto& [name, table] : result.traces) {
      const fs::path path = dir / (std::string(to_string(result.scenario)) + "_" + name + ".csv");
      std::ostringstream csv;
      write_csv(csv, table);
      write_file(path, csv.str());
      written.push_back(path.string());
    }
  }
  if (config.write_json) {
    for (const auto& [name, content] : result.documents) {
      const fs::path path = dir / name;
      write_file(path, content);
      written.push_back(path.string());
    }
  }
  return written;
}

}  // namespace decolab::cli
