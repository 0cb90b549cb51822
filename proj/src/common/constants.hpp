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

#pragma once

#include <string_view>

namespace decolab {

/// Versioned table of physical constants in SI units. Every scenario reads its
/// constants from one of these tables so that results can be traced back to
/// the exact values used.
struct PhysicalConstants {
  std::string_view version;
  double hbar;       // J s
  double planck;     // J s
  double boltzmann;  // J/K
  double bohr_magneton;  // J/T
};

inline constexpr PhysicalConstants kCodata{
    "codata-2018/v1",
    1.0545718e-34,
    6.62607015e-34,
    1.380649e-23,
    9.2740100783e-24,
};

/// Round order-of-magnitude values for reproducing the Stern-Gerlach estimate
/// (mu_B ~ 1e-23). Only the magneton differs from CODATA.
inline constexpr PhysicalConstants kPaperRound{
    "paper-round/v1",
    1.0545718e-34,
    6.62607015e-34,
    1.380649e-23,
    1.0e-23,
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace decolab
