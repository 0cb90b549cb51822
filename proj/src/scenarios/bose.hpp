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
 * Ideal Bose gas threshold: the thermal de Broglie wavelength
 * h / sqrt(m k_B T) against the interparticle spacing.
 */

#pragma once

#include <string_view>
#include <vector>

#include "common/constants.hpp"

namespace decolab::scenarios {

struct BoseConfig {
  double mass = 1.443e-25;  // kg, Rb-87
  double spacing = 2e-7;    // m
  std::vector<double> temperatures;  // K
};

enum class BosePhase { kCondensed, kSeparated };

std::string_view to_string(BosePhase phase) noexcept;

/// h / sqrt(m k_B T). Throws NonPositiveInput.
double thermal_de_broglie(double mass, double temperature,
                          const PhysicalConstants& constants = kCodata);

struct BoseThreshold {
  double t_c = 0.0;  // K
  std::vector<BosePhase> phases;  // one per configured temperature
};

/// T_c = h^2 / (m k_B d^2). T < T_c is condensed; T >= T_c is separated.
/// Throws NonPositiveInput.
BoseThreshold bose_critical_temperature(const BoseConfig& config,
                                        const PhysicalConstants& constants = kCodata);

}  // namespace decolab::scenarios
