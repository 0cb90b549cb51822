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

#include "hilbert/state.hpp"
#include "wavepacket/grid.hpp"

namespace decolab::wavepacket {

/// How a packet's width behaves in time. kFixedWidth neglects dispersion
/// (the default); kSpreading uses the exact free-particle width
/// sigma(t) = sigma sqrt(1 + (hbar t / (2 m sigma^2))^2).
enum class PacketEvolution { kFixedWidth, kSpreading };

double spread_width(double sigma, double mass, double t);

/// Closed-form moments under a uniform force f (potential -f x):
/// ⟨p⟩ = p0 + f t, ⟨x⟩ = x0 + p0 t/m + f t^2/(2m).
GaussianPacket evolve_packet(const GaussianPacket& initial, double force, double t,
                             PacketEvolution mode = PacketEvolution::kFixedWidth);

/**
 * Samples the evolved packet on the grid, amplitudes psi(x_k) sqrt(dx) without
 * renormalization.
 *
 * kSpreading: the exact solution of i hbar dpsi/dt = (p^2/2m - f x) psi for a
 * Gaussian initial state.
 * kFixedWidth: the dispersion-free packet with the classical action phase
 * S(t) = ∫ (p^2/2m + f x) dt, i.e. the effective wave-packet solution.
 */
CVector sample_packet(const Grid1D& grid, const GaussianPacket& initial, double force, double t,
                      PacketEvolution mode);

}  // namespace decolab::wavepacket
