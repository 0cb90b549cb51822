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
 * Bell-type bound |⟨AB⟩ - ⟨AD⟩| <= 2 ± (⟨CD⟩ + ⟨CB⟩) for a correlated state
 * whose sub-system 2 basis is made of weakly interfering packets, next to the
 * exact CHSH value that violates the classical bound for a spin singlet.
 *
 * A and C act on sub-system 1, B and D on sub-system 2.
 */

#pragma once

#include <cstdint>

#include "hilbert/state.hpp"
#include "supersystem/correlated.hpp"
#include "wavepacket/grid.hpp"

namespace decolab::scenarios {

struct BellObservables {
  hilbert::OperatorMatrix a;  // on sub1
  hilbert::OperatorMatrix b;  // on sub2
  hilbert::OperatorMatrix c;  // on sub1
  hilbert::OperatorMatrix d;  // on sub2
};

struct BellReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  bool approx_conditions_met = false;  // a1/a2 audit of B and D on the sub2 basis
  bool used_diagonal_form = false;
  double chsh_value = 0.0;  // exact |⟨AB⟩ - ⟨AD⟩ + ⟨CB⟩ + ⟨CD⟩|
};

/// ⟨Psi| X ⊗ Y |Psi⟩ = sum_{n,m} c_n^* c_m ⟨1_n|X|1_m⟩ ⟨2_n|Y|2_m⟩.
Complex exact_correlation(const supersystem::CorrelatedState& state, const hilbert::OperatorMatrix& x,
                          const hilbert::OperatorMatrix& y);

/// sum_n |c_n|^2 ⟨1_n|X|1_n⟩ ⟨2_n|Y|2_n⟩, the cross-term-free form.
double diagonal_correlation(const supersystem::CorrelatedState& state, const hilbert::OperatorMatrix& x,
                            const hilbert::OperatorMatrix& y);

/**
 * Evaluates the bound with sign = +1 or -1. Every branch must satisfy
 * |⟨α⟩_n| >= 1 (to 1e-10) for each observable on the space it acts on, else
 * ConditionViolated. With enforce_approx the a1 ratio (>= 10) and the a2
 * off-diagonal bound (<= 0.05 of the larger diagonal) are audited for B and D
 * over the sub2 states, and the diagonal form is used when they pass. Exact
 * expectations are used otherwise. Throws NonHermitian, DimensionMismatch,
 * InvalidArgument (sign or packet-valued sub2).
 */
BellReport bell_evaluate(const supersystem::CorrelatedState& state, const BellObservables& obs,
                         int sign, bool enforce_approx);

/// cos(theta) sigma_z + sin(theta) sigma_x.
hilbert::OperatorMatrix spin_observable(double theta);

/// (|0⟩|1⟩ - |1⟩|0⟩) / sqrt(2) as two branches.
supersystem::CorrelatedState singlet_state();

/// Exact CHSH value of the singlet for spin_observable at the given angles.
double chsh_singlet(double theta_a, double theta_b, double theta_c, double theta_d);

/// Analytic optimum angles (0, pi/4, pi/2, 3pi/4) give 2 sqrt(2).
double chsh_singlet_optimal();

struct BellSetup {
  supersystem::CorrelatedState state;
  BellObservables observables;
};

/**
 * Seeded random two-branch configuration meeting the exact and approximate
 * conditions: random complex coefficients, sub1 = e_0, e_1, sub2 = Gaussian
 * packets at ∓separation/2 on the grid, A and C diagonal with random ±1
 * entries, B = sign(x) and D = ±sign(x) or ±1.
 */
BellSetup random_compliant_setup(std::uint64_t seed, const wavepacket::Grid1D& grid,
                                 double separation, double sigma);

}  // namespace decolab::scenarios
