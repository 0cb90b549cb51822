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

#include "scenarios/sterngerlach.hpp"

#include <cmath>
#include <variant>

#include "collapse/classicize.hpp"
#include "collapse/collapse.hpp"
#include "common/error.hpp"

namespace decolab::scenarios {

using supersystem::Branch;
using supersystem::CorrelatedState;
using supersystem::InteractionHamiltonian;
using wavepacket::GaussianPacket;
using wavepacket::PacketEvolution;

void SGConfig::validate() const {
  require(beta_z > 0.0 && mass > 0.0 && mu_b > 0.0 && delta_z > 0.0 && sigma0 > 0.0 && t_max > 0.0,
          ErrorCode::kNonPositiveInput, "Stern-Gerlach constants must be positive");
  require(n_steps >= 1, ErrorCode::kNonPositiveInput, "n_steps must be at least 1");
  require(std::abs(std::norm(c_minus) + std::norm(c_plus) - 1.0) <= kNormTol,
          ErrorCode::kNotNormalized, "|c_-|^2 + |c_+|^2 must equal 1");
}

SGMoments sg_moments(const SGConfig& config, double t) {
  const double z = config.mu_b / (2.0 * config.mass) * config.beta_z * t * t;
  const double p = config.mu_b * config.beta_z * t;
  return SGMoments{z, -z, p, -p};
}

double sg_critical_time(const SGConfig& config) {
  config.validate();
  return std::sqrt(config.delta_z * config.mass / (config.mu_b * config.beta_z));
}

InteractionHamiltonian sg_hamiltonian(const SGConfig& config) {
  hilbert::OperatorMatrix h1(CMatrix::Zero(2, 2), {.hermitian = true, .unitary = false}, "J");
  RVector v(2);
  v << -config.mu_b, config.mu_b;
  return InteractionHamiltonian(std::move(h1), config.mass, hilbert::OperatorMatrix::diagonal(v, "J/T"),
                                supersystem::PositionFactor::linear(-config.beta_z, 0.0, "-beta_z z"));
}

CorrelatedState sg_initial_state(const SGConfig& config) {
  config.validate();
  const GaussianPacket u{0.0, 0.0, config.sigma0, config.mass};
  std::vector<Branch> branches;
  branches.push_back(Branch{config.c_minus, hilbert::StateVector::basis(2, 0, "spin"), u, std::nullopt});
  branches.push_back(Branch{config.c_plus, hilbert::StateVector::basis(2, 1, "spin"), u, std::nullopt});
  return CorrelatedState(std::move(branches));
}

std::vector<double> sg_times(const SGConfig& config) {
  std::vector<double> times(config.n_steps + 1);
  const double n = static_cast<double>(config.n_steps);
  for (std::size_t k = 0; k <= config.n_steps; ++k)
    times[k] = config.t_max * (static_cast<double>(k) / n);
  return times;
}

SGResult sg_run(const SGConfig& config, std::size_t n_trials, std::uint64_t seed) {
  require(n_trials >= 1, ErrorCode::kInvalidArgument, "at least one trial is required");
  config.validate();
  const InteractionHamiltonian ham = sg_hamiltonian(config);
  const CorrelatedState state = sg_initial_state(config);
  const PacketEvolution mode = config.spreading ? PacketEvolution::kSpreading : PacketEvolution::kFixedWidth;

  std::vector<collapse::BranchTrajectory> trajectories;
  for (const auto& b : state.branches()) {
    const double v = ham.v1().sandwich(b.sub1.amplitudes(), b.sub1.amplitudes()).real();
    const GaussianPacket initial = std::get<GaussianPacket>(b.sub2);
    if (mode == PacketEvolution::kFixedWidth) {
      trajectories.emplace_back([&ham, v, initial](double t) {
        return supersystem::branch_evolve(ham, v, initial, t);
      });
    } else {
      const double f = supersystem::branch_force(ham, v);
      trajectories.emplace_back([initial, f](double t) {
        return wavepacket::evolve_packet(initial, f, t, PacketEvolution::kSpreading);
      });
    }
  }

  SGResult r;
  const std::vector<double> times = sg_times(config);
  r.trace = collapse::order_parameter_trace(trajectories, collapse::TraceObservable::kPosition, times);
  r.tau_c_analytic = sg_critical_time(config);
  r.tau_c_numeric = r.trace.tau;
  r.n_trials = n_trials;
  r.weight_minus = std::norm(config.c_minus);
  r.weight_plus = std::norm(config.c_plus);
  r.spreading_factor_at_tau =
      wavepacket::spread_width(config.sigma0, config.mass, r.tau_c_analytic) / config.sigma0;

  for (const double frac : {0.1, 2.0}) {
    std::optional<double> value;
    try {
      value = supersystem::schrodinger_residual(ham, state, frac * r.tau_c_analytic, config.grid, mode);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPacketOutsideGrid) throw;
      r.warnings.push_back("residual at " + std::to_string(frac) + " tau_c skipped: " + e.what());
    }
    (frac < 1.0 ? r.residual_early : r.residual_late) = value;
  }

  if (!r.trace.tau || config.t_max < *r.trace.tau) {
    r.warnings.push_back(std::string(to_string(ErrorCode::kTMaxBeforeCritical)) +
                         ": t_max precedes the transition; reporting exact branch weights");
    return r;
  }
  r.collapsed = true;
  for (std::size_t i = 0; i < n_trials; ++i) {
    const auto outcome =
        collapse::classicize(state, r.trace, config.t_max, collapse::split_seed(seed, i));
    const auto& product = std::get<collapse::CollapsedProduct>(outcome);
    (product.branch_index == 0 ? r.count_minus : r.count_plus) += 1;
  }
  return r;
}

}  // namespace decolab::scenarios
