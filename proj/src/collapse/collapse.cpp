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

#include "collapse/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "json.hpp"

#include "common/error.hpp"

namespace decolab::collapse {

using Eigen::Index;

hilbert::StateVector approx_w_transform(const hilbert::StateVector& psi, double eps) {
  CVector out = psi.amplitudes();
  for (Index n = 0; n < out.size(); ++n) out[n] *= std::polar(1.0, eps * std::norm(out[n]));
  return hilbert::StateVector(std::move(out), psi.basis_label());
}

double decoherence_phase_spread(const hilbert::StateVector& psi, double eps) {
  double lo = 2.0;
  double hi = -1.0;
  for (Index n = 0; n < psi.amplitudes().size(); ++n) {
    const double w = std::norm(psi.amplitudes()[n]);
    if (w <= kNegligibleWeight) continue;
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  if (hi < lo) return 0.0;
  return std::abs(eps) * (hi - lo);
}

std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return base ^ (0x9E3779B97F4A7C15ULL * index);
}

double uniform_from_seed(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::size_t select_branch(const std::vector<double>& weights, double u) {
  require(!weights.empty(), ErrorCode::kEmptyInput, "no branches to select from");
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  bool any = false;
  for (std::size_t n = 0; n < weights.size(); ++n) {
    if (weights[n] <= 0.0) continue;
    cumulative += weights[n];
    last_nonzero = n;
    any = true;
    if (u < cumulative) return n;
  }
  require(any, ErrorCode::kZeroVector, "all branch weights are zero");
  return last_nonzero;
}

CollapseOutcome sample_collapse(const hilbert::StateVector& psi, std::uint64_t seed) {
  std::vector<double> weights(psi.dim());
  for (std::size_t n = 0; n < psi.dim(); ++n) weights[n] = std::norm(psi[n]);
  CollapseOutcome out;
  out.seed = seed;
  out.branch_index = select_branch(weights, uniform_from_seed(seed));
  out.prior = weights[out.branch_index];
  out.posterior.assign(psi.dim(), 0.0);
  out.posterior[out.branch_index] = 1.0;
  return out;
}

std::string to_json_line(const CollapseOutcome& outcome) {
  nlohmann::ordered_json j;
  j["branch_index"] = outcome.branch_index;
  j["prior"] = outcome.prior;
  j["posterior"] = outcome.posterior;
  j["seed"] = outcome.seed;
  return j.dump();
}

GeometricReduction geometric_reduction(Complex c_n, double full_width) {
  require(full_width > 0.0, ErrorCode::kInvalidArgument, "interval width must be positive");
  const double w = std::norm(c_n);
  require(w <= 1.0 + kNormTol, ErrorCode::kInvalidArgument, "|c_n| exceeds one");
  // The probability is |c_n|^2 itself rather than reduced / full_width so it
  // matches the sampling weight bit for bit.
  return GeometricReduction{w * full_width, w};
}

}  // namespace decolab::collapse
