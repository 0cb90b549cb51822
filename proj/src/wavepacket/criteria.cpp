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

#include "wavepacket/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "common/error.hpp"
#include "hilbert/algebra.hpp"

namespace decolab::wavepacket {

using Eigen::Index;
using hilbert::OperatorMatrix;
using hilbert::StateVector;

namespace {

double safe_ratio(double mean, double deviation) {
  const double m = std::abs(mean);
  if (deviation > 0.0) return m / deviation;
  return m > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

// Relative slack so that a constituent sitting exactly on the probe boundary
// is not lost to rounding.
constexpr double kProbeSlack = 1e-9;

}  // namespace

PacketReport check_a1(const StateVector& psi, const OperatorMatrix& op, double ratio_threshold,
                      std::string observable_name) {
  require(op.hermitian(), ErrorCode::kNonHermitian, "A1 check needs a Hermitian observable");
  require(ratio_threshold > 1.0, ErrorCode::kInvalidArgument, "A1 ratio threshold must exceed 1");
  const auto moments = hilbert::expectation_and_deviation(op, psi);
  PacketReport r;
  r.observable_name = std::move(observable_name);
  r.mean = moments.mean.real();
  r.deviation = moments.deviation;
  r.ratio = safe_ratio(r.mean, r.deviation);
  r.passes_a1 = r.ratio >= ratio_threshold;
  return r;
}

bool InterferenceReport::all_pass() const {
  for (std::size_t n = 0; n < passes_a2.size(); ++n)
    for (std::size_t m = 0; m < passes_a2.size(); ++m)
      if (n != m && !passes_a2[n][m]) return false;
  return true;
}

InterferenceReport check_a2(std::span<const StateVector> states, const OperatorMatrix& op,
                            double offdiag_frac) {
  require(states.size() >= 2, ErrorCode::kInvalidArgument, "A2 check needs at least two states");
  require(op.hermitian(), ErrorCode::kNonHermitian, "A2 check needs a Hermitian observable");
  for (const auto& s : states)
    require(s.dim() == op.dim(), ErrorCode::kDimensionMismatch,
            "state and observable dimensions differ");

  const auto n = static_cast<Index>(states.size());
  std::vector<double> mean(states.size());
  std::vector<double> dev(states.size());
  std::vector<CVector> applied(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    applied[i] = op.apply(states[i].amplitudes());
    mean[i] = states[i].amplitudes().dot(applied[i]).real();
    dev[i] = (applied[i] - mean[i] * states[i].amplitudes()).norm();
  }

  InterferenceReport r;
  r.pair_gap = Eigen::MatrixXd::Zero(n, n);
  r.pair_threshold = Eigen::MatrixXd::Zero(n, n);
  r.off_diagonal_magnitude = Eigen::MatrixXd::Zero(n, n);
  r.passes_a2.assign(states.size(), std::vector<bool>(states.size(), false));
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const auto ia = static_cast<std::size_t>(a);
      const auto ib = static_cast<std::size_t>(b);
      const double gap = std::abs(mean[ia] - mean[ib]);
      const double threshold = 0.5 * (dev[ia] + dev[ib]);
      const double off = std::abs(states[ia].amplitudes().dot(applied[ib]));
      const double bound = offdiag_frac * std::max(std::abs(mean[ia]), std::abs(mean[ib]));
      const bool pass = gap >= threshold && off <= bound;
      r.pair_gap(a, b) = r.pair_gap(b, a) = gap;
      r.pair_threshold(a, b) = r.pair_threshold(b, a) = threshold;
      r.off_diagonal_magnitude(a, b) = r.off_diagonal_magnitude(b, a) = off;
      r.passes_a2[ia][ib] = r.passes_a2[ib][ia] = pass;
    }
  }
  return r;
}

PacketReport wavepacket_criterion(const StateVector& psi, const AnalyticObservable& a_of_x,
                                  const Grid1D& grid, const WavepacketThresholds& thresholds) {
  require(static_cast<bool>(a_of_x.value) && static_cast<bool>(a_of_x.first) &&
              static_cast<bool>(a_of_x.second),
          ErrorCode::kInvalidArgument, "observable needs a value and two derivatives");
  const PositionMoments x = position_moments(grid, psi);
  const double a_at_mean = a_of_x.value(x.mean);
  const double d1 = a_of_x.first(x.mean);
  const double d2 = a_of_x.second(x.mean);
  require(std::isfinite(a_at_mean) && std::isfinite(d1) && std::isfinite(d2),
          ErrorCode::kDerivativeUndefined,
          "observable or its derivatives are undefined at the mean position");

  const RVector w = psi.amplitudes().cwiseAbs2();
  RVector values(w.size());
  for (std::size_t k = 0; k < grid.size(); ++k) values[static_cast<Index>(k)] = a_of_x.value(grid.x(k));
  const double mean_a = w.dot(values);
  const double dev_a = std::sqrt(w.dot((values.array() - mean_a).square().matrix()));
  const double correction = 0.5 * d2 * x.deviation * x.deviation;

  PacketReport r;
  r.observable_name = a_of_x.name;
  r.mean = mean_a;
  r.deviation = dev_a;
  r.ratio = safe_ratio(mean_a, dev_a);
  r.passes_a1 = r.ratio >= thresholds.a1_ratio;
  r.taylor_residual = mean_a - a_at_mean - correction;
  r.passes_taylor = std::abs(a_at_mean) >= thresholds.taylor_factor * std::abs(correction);
  return r;
}

SuperpositionVerdict superposition_packet_test(std::span<const GaussianPacket> packets,
                                               std::span<const Complex> coeffs, const Grid1D& grid,
                                               const WavepacketThresholds& thresholds) {
  require(!packets.empty(), ErrorCode::kEmptyInput, "no packets given");
  require(packets.size() == coeffs.size(), ErrorCode::kDimensionMismatch,
          "one coefficient per packet is required");

  std::vector<StateVector> states;
  states.reserve(packets.size());
  for (const auto& p : packets) states.push_back(discretize_gaussian(grid, p));

  const OperatorMatrix x_op = position_operator(grid);
  if (states.size() >= 2) {
    const auto a2 = check_a2(states, x_op, thresholds.a2_offdiag_frac);
    require(a2.all_pass(), ErrorCode::kInvalidArgument,
            "packets are not mutually weakly interfering in position");
  }

  std::vector<PositionMoments> moments;
  for (const auto& s : states) moments.push_back(position_moments(grid, s));
  const double slack = thresholds.a1_ratio * (1.0 + kProbeSlack);
  double left = std::numeric_limits<double>::infinity();
  double right = -std::numeric_limits<double>::infinity();
  for (const auto& m : moments) {
    left = std::min(left, m.mean - slack * m.deviation);
    right = std::max(right, m.mean + slack * m.deviation);
  }
  const OperatorMatrix probe_left = function_operator(grid, [left](double x) { return x - left; }, "m");
  const OperatorMatrix probe_right = function_operator(grid, [right](double x) { return right - x; }, "m");

  auto worst_ratio = [&](const StateVector& s) {
    const double l = check_a1(s, probe_left, thresholds.a1_ratio).ratio;
    const double r = check_a1(s, probe_right, thresholds.a1_ratio).ratio;
    return std::min(l, r);
  };

  SuperpositionVerdict v;
  for (const auto& s : states) {
    const double ratio = worst_ratio(s);
    v.constituent_ratios.push_back(ratio);
    v.each_passes.push_back(ratio >= thresholds.a1_ratio);
  }

  CVector sum = CVector::Zero(static_cast<Index>(grid.size()));
  for (std::size_t n = 0; n < states.size(); ++n) sum += coeffs[n] * states[n].amplitudes();
  const StateVector superposition = hilbert::make_state(sum, "grid:x");
  v.superposition_ratio = worst_ratio(superposition);
  v.superposition_passes = v.superposition_ratio >= thresholds.a1_ratio;
  return v;
}

}  // namespace decolab::wavepacket
