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
 * Correlated super-system states written as a branch list
 * sum_n c_n |1_n⟩ ⊗ |2_n⟩ (⊗ |E_n⟩), the von Neumann coupling that produces
 * them, mixtures of the second kind, and Bose symmetrization.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hilbert/state.hpp"
#include "wavepacket/grid.hpp"

namespace decolab::supersystem {

using hilbert::OperatorMatrix;
using hilbert::StateVector;
using wavepacket::GaussianPacket;

/// Sub-system 2 is either a finite-dimensional vector or a Gaussian packet in
/// one spatial dimension (the packet's parameters at t = 0).
using SubTwo = std::variant<StateVector, GaussianPacket>;

struct Branch {
  Complex coefficient;
  StateVector sub1;
  SubTwo sub2;
  std::optional<StateVector> sub_env;
};

class CorrelatedState {
 public:
  /**
   * Validates sum |c_n|^2 = 1, sub1 states pairwise orthogonal and of one
   * dimension, and environment states either absent everywhere or present
   * everywhere and pairwise orthogonal. Throws EmptyInput, NotNormalized,
   * DimensionMismatch or InvalidArgument.
   */
  explicit CorrelatedState(std::vector<Branch> branches);

  const std::vector<Branch>& branches() const noexcept { return branches_; }
  std::size_t size() const noexcept { return branches_.size(); }
  bool has_environment() const noexcept { return branches_.front().sub_env.has_value(); }
  /// True when every sub2 is a StateVector.
  bool discrete_sub2() const noexcept;

  friend bool operator==(const CorrelatedState& a, const CorrelatedState& b);

 private:
  std::vector<Branch> branches_;
};

/// Overlap tolerance for the orthogonality checks.
inline constexpr double kOrthoTol = 1e-10;

/// sum_n c_n 1_n ⊗ 2_n (⊗ E_n). Throws InvalidArgument if a sub2 is a packet.
StateVector to_state_vector(const CorrelatedState& state);

/**
 * U|n⟩|m0⟩ = |n⟩|(n + m0) mod pointer_dim⟩ applied to sum_n c_n |n⟩ ⊗ |m0⟩.
 * Branches with c_n exactly zero are dropped. Throws IndexOutOfRange when
 * pointer_index >= pointer_dim, DimensionMismatch when pointer_dim is smaller
 * than the object dimension.
 */
CorrelatedState von_neumann_couple(const StateVector& object_state, std::size_t pointer_index,
                                   std::size_t pointer_dim);

struct MixtureComponent {
  double weight;
  OperatorMatrix sub1_projector;
  OperatorMatrix sub2_projector;
};

struct SecondKindMixture {
  std::vector<MixtureComponent> components;

  /// sum_k w_k P1_k ⊗ P2_k.
  CMatrix density() const;
};

/// Components (|c_n|^2, |1_n⟩⟨1_n|, |2_n⟩⟨2_n|). Throws MissingEnvironment if
/// the state carries no environment factor, InvalidArgument for packet sub2.
SecondKindMixture second_kind_mixture(const CorrelatedState& state);

inline constexpr std::size_t kMaxBosons = 6;

/**
 * (1/sqrt(n!)) sum_J P_J applied to the product of the inputs, stored with
 * sub1 = first n-1 particles and sub2 = the last one. Identical permuted
 * products are merged and the result renormalized, so repeated inputs give
 * the usual multiplicity weights. For n = 1 the single branch has a
 * one-dimensional trivial sub2. Inputs must share a dimension and be pairwise
 * equal or orthogonal. Throws EmptyInput, TooManyParticles, DimensionMismatch,
 * InvalidArgument.
 */
CorrelatedState symmetrize_bose(const std::vector<StateVector>& single_particle_states);

struct ProductMixture {
  std::vector<double> weights;
  std::vector<StateVector> products;
};

/// The decay counterpart: every one of the n! permuted products with weight
/// 1/n!, duplicates kept.
ProductMixture bose_decay_mixture(const std::vector<StateVector>& single_particle_states);

nlohmann::ordered_json to_json(const StateVector& state);
nlohmann::ordered_json to_json(const GaussianPacket& packet);
nlohmann::ordered_json to_json(const CorrelatedState& state);

}  // namespace decolab::supersystem
