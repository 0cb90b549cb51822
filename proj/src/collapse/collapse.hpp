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
 * Superposition breaking at the approximate level: the cross-term-free
 * W transform, its relative dephasing, seeded branch selection with
 * probability |c_n|^2 and the interval-width form of that probability.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbert/state.hpp"

namespace decolab::collapse {

/// sum_n c_n exp(i eps |c_n|^2) |u_n⟩: the W transform with the projector's
/// cross terms dropped, valid when the basis packets are weakly interfering.
hilbert::StateVector approx_w_transform(const hilbert::StateVector& psi, double eps);

/// Branches with |c_n|^2 below this are ignored by the phase spread.
inline constexpr double kNegligibleWeight = 1e-12;

/// max_{n,m} eps | |c_n|^2 - |c_m|^2 | over non-negligible branches. Zero
/// exactly when the approximate transform reduces to a global phase.
double decoherence_phase_spread(const hilbert::StateVector& psi, double eps);

struct CollapseOutcome {
  std::size_t branch_index = 0;
  double prior = 0.0;              // |c_n|^2 of the selected branch
  std::vector<double> posterior;   // delta_{n k}
  std::uint64_t seed = 0;
};

/// seed_i = base XOR (0x9E3779B97F4A7C15 * i mod 2^64). Distinct trials of a
/// batch draw from independent generator streams.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) noexcept;

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
double uniform_from_seed(std::uint64_t seed);

/// Picks branch n with probability |c_n|^2 by inverse CDF over cumulative
/// weights in branch order. Deterministic for a fixed seed. Rounding left over
/// at the top of the CDF goes to the last branch with nonzero weight.
CollapseOutcome sample_collapse(const hilbert::StateVector& psi, std::uint64_t seed);

/// Same selection rule on raw weights (need not be normalized exactly).
std::size_t select_branch(const std::vector<double>& weights, double u);

/// JSON-lines record: {"branch_index":n,"prior":w,"posterior":[...],"seed":s}.
std::string to_json_line(const CollapseOutcome& outcome);

struct GeometricReduction {
  double reduced_width = 0.0;
  double probability = 0.0;
};

/// Reduced interval width |c_n|^2 * full_width and its ratio to the full
/// width, which is |c_n|^2.
GeometricReduction geometric_reduction(Complex c_n, double full_width);

}  // namespace decolab::collapse
