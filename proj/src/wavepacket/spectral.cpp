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

#include "wavepacket/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "common/constants.hpp"
#include "common/error.hpp"

namespace decolab::wavepacket {

using Eigen::Index;

namespace {

// fftw planner calls are not reentrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

CVector run_fft(const CVector& in, int sign) {
  CVector src = in;
  CVector out(in.size());
  auto* src_ptr = reinterpret_cast<fftw_complex*>(src.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(in.size()), src_ptr, out_ptr, sign, FFTW_ESTIMATE);
  }
  require(plan != nullptr, ErrorCode::kInternal, "fftw failed to create a plan");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

void require_grid_size(const Grid1D& grid, const CVector& v) {
  require(static_cast<std::size_t>(v.size()) == grid.size(), ErrorCode::kDimensionMismatch,
          "vector length does not match the grid");
}

}  // namespace

RVector wavenumbers(const Grid1D& grid) {
  const auto n = static_cast<Index>(grid.size());
  const double dk = 2.0 * kPi / (static_cast<double>(n) * grid.dx());
  RVector k(n);
  for (Index j = 0; j < n; ++j) {
    const Index folded = j < (n + 1) / 2 ? j : j - n;
    k[j] = dk * static_cast<double>(folded);
  }
  return k;
}

CVector forward_fft(const CVector& v) { return run_fft(v, FFTW_FORWARD); }

CVector inverse_fft(const CVector& v) {
  return run_fft(v, FFTW_BACKWARD) / static_cast<double>(v.size());
}

CVector apply_momentum(const Grid1D& grid, const CVector& v) {
  require_grid_size(grid, v);
  const RVector k = wavenumbers(grid);
  CVector spec = forward_fft(v);
  spec = spec.cwiseProduct((kHbar * k).cast<Complex>());
  return inverse_fft(spec);
}

CVector apply_kinetic(const Grid1D& grid, const CVector& v, double mass) {
  require_grid_size(grid, v);
  require(mass > 0.0, ErrorCode::kInvalidArgument, "mass must be positive");
  const RVector k = wavenumbers(grid);
  const RVector energy = (kHbar * kHbar / (2.0 * mass)) * k.array().square().matrix();
  CVector spec = forward_fft(v);
  spec = spec.cwiseProduct(energy.cast<Complex>());
  return inverse_fft(spec);
}

MomentumMoments momentum_moments(const Grid1D& grid, const hilbert::StateVector& psi) {
  require_grid_size(grid, psi.amplitudes());
  const RVector p = kHbar * wavenumbers(grid);
  const RVector w = forward_fft(psi.amplitudes()).cwiseAbs2();
  const double total = w.sum();
  const double mean = w.dot(p) / total;
  const double var = w.dot((p.array() - mean).square().matrix()) / total;
  return MomentumMoments{mean, std::sqrt(var)};
}

}  // namespace decolab::wavepacket
