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
 * H = H1 ⊗ 1 + 1 ⊗ H2 + V1 ⊗ V2(x) with H2 the free kinetic energy of a
 * particle on a line. Because H1 and V1 share an eigenbasis, each branch n
 * moves in the potential v_n V2(x) independently of the others.
 */

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hilbert/state.hpp"
#include "supersystem/correlated.hpp"
#include "wavepacket/evolution.hpp"
#include "wavepacket/grid.hpp"

namespace decolab::supersystem {

struct AffineForm {
  double slope = 0.0;   // V2(x) = slope * x + offset
  double offset = 0.0;
};

/// Position-dependent factor V2(x). Only the affine form admits closed-form
/// branch evolution.
struct PositionFactor {
  std::string name;
  std::function<double(double)> value;
  std::optional<AffineForm> affine;

  static PositionFactor linear(double slope, double offset = 0.0, std::string name = "affine");
  static PositionFactor general(std::function<double(double)> fn, std::string name);
};

class InteractionHamiltonian {
 public:
  /**
   * Throws NonHermitian for h1 or v1, DimensionMismatch if they differ in
   * size, NonCommuting if ||[H1, V1]|| exceeds 1e-10 * ||H1|| ||V1||,
   * DegenerateSpectrum if two eigenvalues of V1 coincide within 1e-10 of the
   * largest magnitude, InvalidArgument for a non-positive mass.
   */
  InteractionHamiltonian(OperatorMatrix h1, double mass, OperatorMatrix v1, PositionFactor v2);

  const OperatorMatrix& h1() const noexcept { return h1_; }
  const OperatorMatrix& v1() const noexcept { return v1_; }
  const PositionFactor& v2() const noexcept { return v2_; }
  double mass() const noexcept { return mass_; }
  /// Ascending eigenvalues of V1.
  const RVector& v1_eigenvalues() const noexcept { return v1_eigs_; }

 private:
  OperatorMatrix h1_;
  double mass_;
  OperatorMatrix v1_;
  PositionFactor v2_;
  RVector v1_eigs_;
};

/**
 * Packet of the branch with V1 eigenvalue v after time t under H2 + v V2(x).
 * For V2 = slope x + offset the force is f = -v slope and the moments follow
 * Ehrenfest exactly; the width is held fixed. Throws NonlinearPotential when
 * V2 is not affine, InvalidArgument for t < 0 or a packet mass that differs
 * from the Hamiltonian's.
 */
GaussianPacket branch_evolve(const InteractionHamiltonian& ham, double v_eigenvalue,
                             const GaussianPacket& initial, double t);

/// Force on a branch whose sub1 has V1 expectation v.
double branch_force(const InteractionHamiltonian& ham, double v_eigenvalue);

/**
 * ||(H - i hbar d/dt) Psi(t)|| / ||H Psi(t)|| for the branch-product state
 * Psi(t) = sum_n c_n e^{-i E_n t / hbar} |1_n⟩ ⊗ phi_n(t), where E_n is the
 * branch's H1 value plus v_n times the V2 offset and phi_n is the closed-form
 * packet of the chosen mode sampled on the grid. The time derivative is a
 * central difference with dt = max(1e-3 t, 1e-12 s). Kinetic energy is
 * applied spectrally. The ratio is dimensionless; when H Psi vanishes the
 * absolute norm is returned.
 *
 * Throws NonlinearPotential, InvalidArgument for vector-valued sub2 states,
 * PacketOutsideGrid when a packet's 6-sigma support leaves the grid.
 */
double schrodinger_residual(const InteractionHamiltonian& ham, const CorrelatedState& correlated,
                            double t, const wavepacket::Grid1D& grid,
                            wavepacket::PacketEvolution mode = wavepacket::PacketEvolution::kFixedWidth);

}  // namespace decolab::supersystem
