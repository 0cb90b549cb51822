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
 * Order parameter (inter-branch mean gap) against its critical value (half
 * sum of the branch spreads), sampled along branch trajectories, with the
 * transition time at which the gap first reaches the critical value.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "common/table.hpp"
#include "wavepacket/grid.hpp"

namespace decolab::collapse {

/// Branch packet as a function of time in seconds.
using BranchTrajectory = std::function<wavepacket::GaussianPacket(double)>;

enum class TraceObservable {
  kPosition,  // mean x0, spread sigma_x
  kMomentum,  // mean p0, spread hbar / (2 sigma_x)
};

struct OrderParameterTrace {
  std::vector<double> times;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // n < m
  std::vector<std::vector<double>> gap;       // [pair][time]
  std::vector<std::vector<double>> critical;  // [pair][time]
  std::vector<std::optional<double>> tau_pair;
  std::optional<double> tau;  // none if any pair never crosses

  /// Columns "t, gap, critical" for a single pair, otherwise
  /// "t, gap_n_m..., critical_n_m...".
  Table to_table() const;
};

/**
 * First time with gap >= critical. Between samples the crossing is located by
 * linear interpolation of gap - critical; a crossing at the first sample
 * returns that sample's time.
 */
std::optional<double> first_crossing(std::span<const double> times, std::span<const double> gap,
                                     std::span<const double> critical);

/// Throws EmptyTimes, or InvalidArgument for fewer than two branches or times
/// that are negative or not strictly increasing.
OrderParameterTrace order_parameter_trace(std::span<const BranchTrajectory> branches,
                                          TraceObservable observable,
                                          std::span<const double> times);

}  // namespace decolab::collapse
