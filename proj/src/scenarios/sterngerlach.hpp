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

/**
 * @file
 * Stern-Gerlach measurement as a phase transition. The spin (sub-system 1)
 * couples to the centre-of-mass packet (sub-system 2) through
 * V = diag(-mu_B, +mu_B) ⊗ (-beta_z z); the two branches separate until their
 * position gap reaches the packet width, after which the device packet
 * classicizes and the spin follows.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collapse/order_parameter.hpp"
#include "supersystem/correlated.hpp"
#include "supersystem/hamiltonian.hpp"
#include "wavepacket/evolution.hpp"
#include "wavepacket/grid.hpp"

namespace decolab::scenarios {

struct SGConfig {
  double beta_z = 1e3;     // T/m
  double mass = 1e-25;     // kg
  double mu_b = 1e-23;     // J/T
  double delta_z = 1e-9;   // m, critical width
  Complex c_minus{0.70710678118654752440, 0.0};
  Complex c_plus{0.70710678118654752440, 0.0};
  double sigma0 = 1e-9;    // m, initial packet width
  wavepacket::Grid1D grid{-16e-9, 16e-9, 2048};
  double t_max = 3e-7;     // s
  std::size_t n_steps = 1000;
  /// Let the branch packets spread freely instead of holding their width.
  bool spreading = false;

  /// Throws NonPositiveInput or NotNormalized.
  void validate() const;
};

struct SGMoments {
  double z_plus;
  double z_minus;
  double p_plus;
  double p_minus;
};

/// z± = ±(mu_B / 2m) beta_z t^2, p± = ±mu_B beta_z t.
SGMoments sg_moments(const SGConfig& config, double t);

/// tau_c = sqrt(delta_z m / (mu_B beta_z)).
double sg_critical_time(const SGConfig& config);

/// Spin ⊗ centre-of-mass Hamiltonian with H1 = 0.
supersystem::InteractionHamiltonian sg_hamiltonian(const SGConfig& config);

/// c_- |-⟩ ⊗ u(z) + c_+ |+⟩ ⊗ u(z) with u centred at rest at the origin.
/// Branch 0 is spin down, branch 1 spin up.
supersystem::CorrelatedState sg_initial_state(const SGConfig& config);

/// linspace(0, t_max, n_steps + 1).
std::vector<double> sg_times(const SGConfig& config);

struct SGResult {
  collapse::OrderParameterTrace trace;
  double tau_c_analytic = 0.0;
  std::optional<double> tau_c_numeric;
  std::size_t n_trials = 0;
  bool collapsed = false;           // false when t_max precedes the transition
  std::size_t count_minus = 0;
  std::size_t count_plus = 0;
  double weight_minus = 0.0;
  double weight_plus = 0.0;
  double spreading_factor_at_tau = 1.0;  // sigma(tau_c) / sigma0 under free spreading
  std::optional<double> residual_early;  // at 0.1 tau_c
  std::optional<double> residual_late;   // at 2 tau_c
  std::vector<std::string> warnings;
};

/**
 * Traces the position gap of the two branches, then classicizes n_trials
 * times at t_max with seeds split from seed. If t_max precedes the transition
 * (or there is none) a TMaxBeforeCritical warning is recorded and only the
 * exact branch weights are reported. Throws InvalidArgument for n_trials = 0.
 */
SGResult sg_run(const SGConfig& config, std::size_t n_trials, std::uint64_t seed);

}  // namespace decolab::scenarios
