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

#include "wavepacket/evolution.hpp"

#include <cmath>

#include "common/constants.hpp"

namespace decolab::wavepacket {

using Eigen::Index;

double spread_width(double sigma, double mass, double t) {
  const double s = kHbar * t / (2.0 * mass * sigma * sigma);
  return sigma * std::sqrt(1.0 + s * s);
}

GaussianPacket evolve_packet(const GaussianPacket& initial, double force, double t,
                             PacketEvolution mode) {
  initial.validate();
  const double m = initial.mass;
  GaussianPacket out = initial;
  out.p0 = initial.p0 + force * t;
  out.x0 = initial.x0 + initial.p0 * t / m + force * t * t / (2.0 * m);
  if (mode == PacketEvolution::kSpreading) out.sigma_x = spread_width(initial.sigma_x, m, t);
  return out;
}

CVector sample_packet(const Grid1D& grid, const GaussianPacket& initial, double force, double t,
                      PacketEvolution mode) {
  initial.validate();
  const double m = initial.mass;
  const double sigma = initial.sigma_x;
  const double x0 = initial.x0;
  const double p0 = initial.p0;
  const double sqrt_dx = std::sqrt(grid.dx());
  CVector out(static_cast<Index>(grid.size()));

  if (mode == PacketEvolution::kFixedWidth) {
    const GaussianPacket now = evolve_packet(initial, force, t, mode);
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double action = (p0 * p0 * t + p0 * force * t2 + force * force * t3 / 3.0) / (2.0 * m) +
                          force * (x0 * t + p0 * t2 / (2.0 * m) + force * t3 / (6.0 * m));
    const double norm = std::pow(2.0 * kPi * sigma * sigma, -0.25) * sqrt_dx;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double y = grid.x(k) - now.x0;
      const double phase = (now.p0 * y + action) / kHbar;
      out[static_cast<Index>(k)] = std::polar(norm * std::exp(-y * y / (4.0 * sigma * sigma)), phase);
    }
    return out;
  }

  // Free Gaussian in the frame accelerating with a = f t^2 / (2m), times the
  // gauge phase exp(i (f t x - f^2 t^3 / (6m)) / hbar).
  const Complex alpha(sigma * sigma, kHbar * t / (2.0 * m));
  const Complex prefactor = std::pow(2.0 * kPi, -0.25) * std::sqrt(sigma) / std::sqrt(alpha) * sqrt_dx;
  const double shift = force * t * t / (2.0 * m);
  const double gauge_const = -force * force * t * t * t / (6.0 * m);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.x(k);
    const double xi = x - shift;
    const double d = xi - x0 - p0 * t / m;
    const Complex exponent = -d * d / (4.0 * alpha) +
                             Complex(0.0, (p0 * (xi - x0) - p0 * p0 * t / (2.0 * m)) / kHbar) +
                             Complex(0.0, (force * t * x + gauge_const) / kHbar);
    out[static_cast<Index>(k)] = prefactor * std::exp(exponent);
  }
  return out;
}

}  // namespace decolab::wavepacket
