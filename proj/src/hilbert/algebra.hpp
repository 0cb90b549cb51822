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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbert/state.hpp"

namespace decolab::hilbert {

/// Rescales amplitudes to unit norm, keeping relative phases.
/// Throws EmptyInput for an empty list and ZeroVector when all entries vanish.
StateVector make_state(std::span<const Complex> amplitudes, std::string basis_label = {});
StateVector make_state(const CVector& amplitudes, std::string basis_label = {});

/// Amplitude (i, j) of the result sits at index i * dim(b) + j.
StateVector tensor(const StateVector& a, const StateVector& b);
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

Complex inner(const StateVector& bra, const StateVector& ket);

/// |psi⟩⟨psi|, flagged Hermitian.
OperatorMatrix projector(const StateVector& psi);

/// exp(i eps P_psi) in closed form, 1 + (e^{i eps} - 1) P_psi, using P^2 = P.
OperatorMatrix exp_projector(const StateVector& psi, double eps);

/// Action of exp(i eps P_psi) on chi without forming the matrix. Exact in all
/// three regimes (chi parallel to psi, orthogonal, general).
StateVector apply_w(const StateVector& psi, const StateVector& chi, double eps);

/// Applies a unitary-flagged operator; the result is re-checked for unit norm.
StateVector apply_unitary(const OperatorMatrix& op, const StateVector& psi);

struct Moments {
  Complex mean;
  double deviation = 0.0;
};

/// ⟨psi|A|psi⟩ for any square A of matching dimension.
Complex expectation(const OperatorMatrix& op, const StateVector& psi);

/// Mean and standard deviation sqrt(⟨A^2⟩ - ⟨A⟩^2). The deviation is only
/// defined for Hermitian operators (NonHermitian otherwise).
Moments expectation_and_deviation(const OperatorMatrix& op, const StateVector& psi);

/// Generator term c_i^* c_j |u_j⟩⟨u_i|; it occupies matrix entry (row j, column i).
struct GaussTerm {
  std::size_t i;
  std::size_t j;
  Complex value;
};

/**
 * Split of the state projector into its diagonal (charge) part and the
 * raising/lowering generators:
 *   P = sum_i |c_i|^2 |u_i⟩⟨u_i| + sum_{j>i} c_i^* c_j |u_j⟩⟨u_i|
 *                               + sum_{j<i} c_i^* c_j |u_j⟩⟨u_i|.
 * Terms with a vanishing coefficient are omitted, so a basis state has no
 * raising or lowering part.
 */
struct GaussDecomposition {
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, double>> diagonal;
  std::vector<GaussTerm> raising;   // j > i
  std::vector<GaussTerm> lowering;  // j < i

  CMatrix reconstruct() const;
};

GaussDecomposition gauss_decompose(const StateVector& psi);

}  // namespace decolab::hilbert
