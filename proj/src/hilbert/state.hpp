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
 * Value types for finite-dimensional Hilbert spaces: unit state vectors and
 * square operators with verified Hermitian/unitary claims.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace decolab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Tolerance for stateful checks (norms of evolved or constructed states).
inline constexpr double kNormTol = 1e-10;
/// Tolerance for algebraic identities (projector, exponential, reconstruction).
inline constexpr double kAlgTol = 1e-12;

namespace hilbert {

/**
 * A unit-norm amplitude vector over an implicit ordered basis. The basis is
 * identified only by an opaque label; amplitude order is the basis order.
 */
class StateVector {
 public:
  /// Wraps amplitudes that are already unit norm (within kNormTol).
  /// Throws NotNormalized / EmptyInput.
  explicit StateVector(CVector amplitudes, std::string basis_label = {});

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const noexcept { return amps_; }
  const std::string& basis_label() const noexcept { return basis_; }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  /// Unit basis element e_index of dimension dim.
  static StateVector basis(std::size_t dim, std::size_t index, std::string basis_label = {});

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.basis_ == b.basis_ && a.amps_ == b.amps_;
  }

 private:
  CVector amps_;
  std::string basis_;
};

struct OperatorClaims {
  bool hermitian = false;
  bool unitary = false;
};

/**
 * Square complex operator. Claims passed at construction are verified
 * (Hermitian: ||M - M^dagger||_max < 1e-12, unitary: ||M^dagger M - I||_max <
 * 1e-10, both relative to the largest entry when it exceeds one).
 *
 * Real diagonal operators (functions of a grid coordinate) are stored as their
 * diagonal only; dense() materializes them on request.
 */
class OperatorMatrix {
 public:
  explicit OperatorMatrix(CMatrix entries, OperatorClaims claims = {}, std::string units = {});

  static OperatorMatrix diagonal(RVector values, std::string units = {});
  static OperatorMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  bool is_diagonal() const noexcept { return diag_.has_value(); }
  /// True when the operator is Hermitian, whether claimed or detected.
  bool hermitian() const noexcept { return hermitian_; }
  bool unitary() const noexcept { return unitary_; }
  const std::string& units() const noexcept { return units_; }

  CMatrix dense() const;
  /// Diagonal values; only valid when is_diagonal().
  const RVector& diagonal_values() const;
  Complex element(std::size_t row, std::size_t col) const;

  CVector apply(const CVector& v) const;
  /// ⟨a|M|b⟩.
  Complex sandwich(const CVector& a, const CVector& b) const;

 private:
  OperatorMatrix() = default;

  std::size_t dim_ = 0;
  CMatrix dense_;
  std::optional<RVector> diag_;
  bool hermitian_ = false;
  bool unitary_ = false;
  std::string units_;
};

}  // namespace hilbert
}  // namespace decolab
