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

#include "scenarios/bose.hpp"

#include <cmath>

#include "common/error.hpp"

namespace decolab::scenarios {

std::string_view to_string(BosePhase phase) noexcept {
  return phase == BosePhase::kCondensed ? "condensed" : "separated";
}

double thermal_de_broglie(double mass, double temperature, const PhysicalConstants& constants) {
  require(mass > 0.0 && temperature > 0.0, ErrorCode::kNonPositiveInput,
          "mass and temperature must be positive");
  return constants.planck / std::sqrt(mass * constants.boltzmann * temperature);
}

BoseThreshold bose_critical_temperature(const BoseConfig& config, const PhysicalConstants& constants) {
  require(config.mass > 0.0 && config.spacing > 0.0, ErrorCode::kNonPositiveInput,
          "mass and spacing must be positive");
  BoseThreshold out;
  const double h = constants.planck;
  out.t_c = h * h / (config.mass * constants.boltzmann * config.spacing * config.spacing);
  for (const double t : config.temperatures) {
    require(t > 0.0, ErrorCode::kNonPositiveInput, "temperatures must be positive");
    out.phases.push_back(t < out.t_c ? BosePhase::kCondensed : BosePhase::kSeparated);
  }
  return out;
}

}  // namespace decolab::scenarios
