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
 * Uniform 1-D position grid and analytic Gaussian wave packets sampled on it.
 *
 * Grid states are stored as unit StateVectors with amplitudes
 * c_k = psi(x_k) sqrt(dx), so that sum |c_k|^2 = sum |psi(x_k)|^2 dx = 1.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "common/constants.hpp"
#include "common/table.hpp"
#include "hilbert/state.hpp"

namespace decolab::wavepacket {

inline constexpr double kHbar = kCodata.hbar;

/// Points x_k = x_min + k dx, k = 0..n-1, dx = (x_max - x_min) / (n - 1).
class Grid1D {
 public:
  /// Throws InvalidGrid unless x_max > x_min and n_points >= 16.
  Grid1D(double x_min, double x_max, std::size_t n_points);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double dx() const noexcept { return (x_max_ - x_min_) / static_cast<double>(n_ - 1); }
  double x(std::size_t k) const noexcept { return x_min_ + static_cast<double>(k) * dx(); }
  RVector positions() const;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
};

/// Minimal-uncertainty Gaussian: spread sigma_x in position, hbar/(2 sigma_x)
/// in momentum.
struct GaussianPacket {
  double x0 = 0.0;       // m
  double p0 = 0.0;       // kg m/s
  double sigma_x = 0.0;  // m
  double mass = 0.0;     // kg

  /// Throws InvalidArgument unless sigma_x > 0 and mass > 0.
  void validate() const;
  double momentum_spread() const noexcept { return kHbar / (2.0 * sigma_x); }
};

/// psi(x) ∝ exp(-(x-x0)^2/(4 sigma^2)) exp(i p0 x / hbar), discretely
/// normalized. Throws PacketOutsideGrid unless x0 ± 6 sigma lies in the grid.
hilbert::StateVector discretize_gaussian(const Grid1D& grid, const GaussianPacket& packet);

/// Position operator (diagonal, metres).
hilbert::OperatorMatrix position_operator(const Grid1D& grid);

/// Diagonal operator f(x) on the grid.
hilbert::OperatorMatrix function_operator(const Grid1D& grid, const std::function<double(double)>& f,
                                          std::string units = {});

/// Probability-weighted moments of x for a grid state.
struct PositionMoments {
  double mean = 0.0;
  double deviation = 0.0;
};
PositionMoments position_moments(const Grid1D& grid, const hilbert::StateVector& psi);

/// Columns x, re_psi, im_psi, abs2 with psi in continuum normalization.
Table grid_state_table(const Grid1D& grid, const hilbert::StateVector& psi);

}  // namespace decolab::wavepacket
