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
 * Wave-packet conditions: A1 (mean dominates spread), A2 (weak interference
 * between basis packets), the Taylor criterion for a smooth observable A(x),
 * and the check that a nontrivial superposition of weakly interfering packets
 * is not itself a packet.
 */

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hilbert/state.hpp"
#include "wavepacket/grid.hpp"

namespace decolab::wavepacket {

/// Quantified readings of the "≫" and "≃" relations.
struct WavepacketThresholds {
  double a1_ratio = 10.0;
  double a2_offdiag_frac = 0.05;
  double taylor_factor = 10.0;
};

struct PacketReport {
  std::string observable_name;
  double mean = 0.0;
  double deviation = 0.0;
  double ratio = 0.0;  // |mean| / deviation
  bool passes_a1 = false;
  double taylor_residual = 0.0;
  /// Set only by wavepacket_criterion.
  std::optional<bool> passes_taylor;
};

/// passes_a1 = |⟨A⟩| >= ratio_threshold * ΔA. Throws NonHermitian, or
/// InvalidArgument when the threshold is not above one.
PacketReport check_a1(const hilbert::StateVector& psi, const hilbert::OperatorMatrix& op,
                      double ratio_threshold, std::string observable_name = {});

struct InterferenceReport {
  Eigen::MatrixXd pair_gap;                // |⟨A⟩_n - ⟨A⟩_m|
  Eigen::MatrixXd pair_threshold;          // (Δ_n A + Δ_m A) / 2
  Eigen::MatrixXd off_diagonal_magnitude;  // |⟨u_n|A|u_m⟩|
  std::vector<std::vector<bool>> passes_a2;  // diagonal entries are false and ignored

  bool all_pass() const;
};

/// Pairwise A2 test: gap >= threshold (inclusive) and the off-diagonal
/// element at most offdiag_frac of the larger diagonal magnitude.
InterferenceReport check_a2(std::span<const hilbert::StateVector> states,
                            const hilbert::OperatorMatrix& op, double offdiag_frac = 0.05);

/// Smooth observable A(x) with analytic first and second derivatives.
struct AnalyticObservable {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;
};

/**
 * Compares ⟨A(x)⟩ on the grid with its second-order Taylor expansion about
 * ⟨x⟩. The residual is ⟨A(x)⟩ - A(⟨x⟩) - A''(⟨x⟩) (Δx)^2 / 2. passes_taylor
 * holds when the second-order correction is small against the classical value:
 * |A(⟨x⟩)| >= taylor_factor * |A''(⟨x⟩)| (Δx)^2 / 2.
 * Throws DerivativeUndefined if A, A' or A'' is not finite at ⟨x⟩.
 */
PacketReport wavepacket_criterion(const hilbert::StateVector& psi, const AnalyticObservable& a_of_x,
                                  const Grid1D& grid, const WavepacketThresholds& thresholds = {});

struct SuperpositionVerdict {
  std::vector<bool> each_passes;
  bool superposition_passes = false;
  std::vector<double> constituent_ratios;  // worst probe per packet
  double superposition_ratio = 0.0;        // worst probe
};

/**
 * Evaluates A1 for each packet and for the superposition sum_n c_n u_n using
 * shifted position probes A = x - x_left and A = x_right - x. The reference
 * points are the tightest ones for which every constituent still meets the A1
 * ratio, so a constituent passes by construction and the superposition passes
 * only if its spread stays on the constituents' scale.
 *
 * Throws InvalidArgument if sizes differ, a coefficient list is all zero, or
 * the packets are not mutually weakly interfering in position.
 */
SuperpositionVerdict superposition_packet_test(std::span<const GaussianPacket> packets,
                                               std::span<const Complex> coeffs, const Grid1D& grid,
                                               const WavepacketThresholds& thresholds = {});

}  // namespace decolab::wavepacket
