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

#include "wavepacket/grid.hpp"

#include <cmath>
#include <sstream>

#include "common/error.hpp"
#include "hilbert/algebra.hpp"

namespace decolab::wavepacket {

using Eigen::Index;

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
  require(std::isfinite(x_min) && std::isfinite(x_max) && x_max > x_min, ErrorCode::kInvalidGrid,
          "grid requires finite x_max > x_min");
  require(n_points >= 16, ErrorCode::kInvalidGrid, "grid requires at least 16 points");
}

RVector Grid1D::positions() const {
  RVector xs(static_cast<Index>(n_));
  for (std::size_t k = 0; k < n_; ++k) xs[static_cast<Index>(k)] = x(k);
  return xs;
}

void GaussianPacket::validate() const {
  require(std::isfinite(sigma_x) && sigma_x > 0.0, ErrorCode::kInvalidArgument,
          "packet width sigma_x must be positive");
  require(std::isfinite(mass) && mass > 0.0, ErrorCode::kInvalidArgument,
          "packet mass must be positive");
}

hilbert::StateVector discretize_gaussian(const Grid1D& grid, const GaussianPacket& packet) {
  packet.validate();
  if (packet.x0 - 6.0 * packet.sigma_x < grid.x_min() ||
      packet.x0 + 6.0 * packet.sigma_x > grid.x_max()) {
    std::ostringstream os;
    os << "packet support x0 ± 6 sigma = [" << packet.x0 - 6.0 * packet.sigma_x << ", "
       << packet.x0 + 6.0 * packet.sigma_x << "] leaves the grid [" << grid.x_min() << ", "
       << grid.x_max() << "]";
    fail(ErrorCode::kPacketOutsideGrid, os.str());
  }
  const double k0 = packet.p0 / kHbar;
  const double inv4s2 = 1.0 / (4.0 * packet.sigma_x * packet.sigma_x);
  CVector amps(static_cast<Index>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.x(k);
    const double d = x - packet.x0;
    amps[static_cast<Index>(k)] = std::polar(std::exp(-d * d * inv4s2), k0 * x);
  }
  return hilbert::make_state(amps, "grid:x");
}

hilbert::OperatorMatrix position_operator(const Grid1D& grid) {
  return hilbert::OperatorMatrix::diagonal(grid.positions(), "m");
}

hilbert::OperatorMatrix function_operator(const Grid1D& grid, const std::function<double(double)>& f,
                                          std::string units) {
  RVector values(static_cast<Index>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) values[static_cast<Index>(k)] = f(grid.x(k));
  return hilbert::OperatorMatrix::diagonal(std::move(values), std::move(units));
}

PositionMoments position_moments(const Grid1D& grid, const hilbert::StateVector& psi) {
  require(psi.dim() == grid.size(), ErrorCode::kDimensionMismatch,
          "state dimension does not match the grid");
  const RVector w = psi.amplitudes().cwiseAbs2();
  const RVector xs = grid.positions();
  const double mean = w.dot(xs);
  const double var = w.dot((xs.array() - mean).square().matrix());
  return PositionMoments{mean, std::sqrt(var)};
}

Table grid_state_table(const Grid1D& grid, const hilbert::StateVector& psi) {
  require(psi.dim() == grid.size(), ErrorCode::kDimensionMismatch,
          "state dimension does not match the grid");
  Table t{{"x", "re_psi", "im_psi", "abs2"}, {}};
  const double scale = 1.0 / std::sqrt(grid.dx());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Complex v = psi[k] * scale;
    t.add_row({grid.x(k), v.real(), v.imag(), std::norm(v)});
  }
  return t;
}

}  // namespace decolab::wavepacket
