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
 * Spectral (discrete-Fourier) derivatives on a Grid1D. The grid is treated as
 * one period of length n * dx, which is exact for packets that vanish at the
 * edges.
 */

#pragma once

#include "hilbert/state.hpp"
#include "wavepacket/grid.hpp"

namespace decolab::wavepacket {

/// Angular wavenumbers in FFT order: 2 pi j / (n dx), j folded to [-n/2, n/2).
RVector wavenumbers(const Grid1D& grid);

/// Unnormalized forward DFT (FFTW sign convention -1).
CVector forward_fft(const CVector& v);
/// Inverse of forward_fft, including the 1/n factor.
CVector inverse_fft(const CVector& v);

/// -i hbar d/dx applied spectrally.
CVector apply_momentum(const Grid1D& grid, const CVector& v);

/// -(hbar^2 / 2m) d^2/dx^2 applied spectrally.
CVector apply_kinetic(const Grid1D& grid, const CVector& v, double mass);

struct MomentumMoments {
  double mean = 0.0;       // kg m/s
  double deviation = 0.0;  // kg m/s
};

/// ⟨p⟩ and Δp from the discrete momentum distribution.
MomentumMoments momentum_moments(const Grid1D& grid, const hilbert::StateVector& psi);

}  // namespace decolab::wavepacket
