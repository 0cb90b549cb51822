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

#include "hilbert/algebra.hpp"

#include <cmath>
#include <utility>

#include "common/error.hpp"

namespace decolab::hilbert {

namespace {

using Index = Eigen::Index;

void require_same_dim(const StateVector& a, const StateVector& b) {
  require(a.dim() == b.dim(), ErrorCode::kDimensionMismatch, "state dimensions differ");
}

}  // namespace

StateVector make_state(const CVector& amplitudes, std::string basis_label) {
  require(amplitudes.size() > 0, ErrorCode::kEmptyInput, "amplitude list is empty");
  const double norm = amplitudes.norm();
  require(norm > 0.0, ErrorCode::kZeroVector, "all amplitudes are zero");
  return StateVector(amplitudes / norm, std::move(basis_label));
}

StateVector make_state(std::span<const Complex> amplitudes, std::string basis_label) {
  CVector v(static_cast<Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) v[static_cast<Index>(i)] = amplitudes[i];
  return make_state(v, std::move(basis_label));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const Index na = a.amplitudes().size();
  const Index nb = b.amplitudes().size();
  CVector out(na * nb);
  for (Index i = 0; i < na; ++i) out.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
  std::string label;
  if (!a.basis_label().empty() || !b.basis_label().empty())
    label = a.basis_label() + "⊗" + b.basis_label();
  return StateVector(std::move(out), std::move(label));
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  const CMatrix da = a.dense();
  const CMatrix db = b.dense();
  CMatrix out(da.rows() * db.rows(), da.cols() * db.cols());
  for (Index i = 0; i < da.rows(); ++i)
    for (Index j = 0; j < da.cols(); ++j)
      out.block(i * db.rows(), j * db.cols(), db.rows(), db.cols()) = da(i, j) * db;
  return OperatorMatrix(std::move(out), OperatorClaims{a.hermitian() && b.hermitian(), false});
}

Complex inner(const StateVector& bra, const StateVector& ket) {
  require_same_dim(bra, ket);
  return bra.amplitudes().dot(ket.amplitudes());
}

OperatorMatrix projector(const StateVector& psi) {
  const CVector& c = psi.amplitudes();
  return OperatorMatrix(c * c.adjoint(), OperatorClaims{true, false});
}

OperatorMatrix exp_projector(const StateVector& psi, double eps) {
  const CVector& c = psi.amplitudes();
  const Complex factor = std::polar(1.0, eps) - 1.0;
  CMatrix w = CMatrix::Identity(c.size(), c.size()) + factor * (c * c.adjoint());
  return OperatorMatrix(std::move(w), OperatorClaims{false, true});
}

StateVector apply_w(const StateVector& psi, const StateVector& chi, double eps) {
  require_same_dim(psi, chi);
  const Complex overlap = inner(psi, chi);
  const double mag = std::abs(overlap);
  const Complex phase = std::polar(1.0, eps);
  if (std::abs(mag - 1.0) <= kAlgTol) return StateVector(phase * chi.amplitudes(), chi.basis_label());
  if (mag <= kAlgTol) return chi;
  CVector out = chi.amplitudes() + overlap * (phase - 1.0) * psi.amplitudes();
  return StateVector(std::move(out), chi.basis_label());
}

StateVector apply_unitary(const OperatorMatrix& op, const StateVector& psi) {
  require(op.unitary(), ErrorCode::kNonUnitary, "operator is not flagged unitary");
  return StateVector(op.apply(psi.amplitudes()), psi.basis_label());
}

Complex expectation(const OperatorMatrix& op, const StateVector& psi) {
  require(op.dim() == psi.dim(), ErrorCode::kDimensionMismatch,
          "operator and state dimensions differ");
  return op.sandwich(psi.amplitudes(), psi.amplitudes());
}

Moments expectation_and_deviation(const OperatorMatrix& op, const StateVector& psi) {
  require(op.hermitian(), ErrorCode::kNonHermitian,
          "standard deviation requested for a non-Hermitian operator");
  require(op.dim() == psi.dim(), ErrorCode::kDimensionMismatch,
          "operator and state dimensions differ");
  const CVector a_psi = op.apply(psi.amplitudes());
  const Complex mean_c = psi.amplitudes().dot(a_psi);
  const double mean = mean_c.real();
  // For Hermitian A, ⟨A^2⟩ - ⟨A⟩^2 = ||(A - ⟨A⟩) psi||^2, which cannot go
  // negative through cancellation.
  const double variance = (a_psi - mean * psi.amplitudes()).squaredNorm();
  return Moments{Complex(mean, 0.0), std::sqrt(variance)};
}

GaussDecomposition gauss_decompose(const StateVector& psi) {
  const CVector& c = psi.amplitudes();
  GaussDecomposition out;
  out.dim = psi.dim();
  for (std::size_t i = 0; i < out.dim; ++i) {
    const Complex ci = c[static_cast<Index>(i)];
    if (std::norm(ci) > 0.0) out.diagonal.emplace_back(i, std::norm(ci));
    for (std::size_t j = 0; j < out.dim; ++j) {
      if (i == j) continue;
      const Complex value = std::conj(ci) * c[static_cast<Index>(j)];
      if (value == Complex{}) continue;
      (j > i ? out.raising : out.lowering).push_back(GaussTerm{i, j, value});
    }
  }
  return out;
}

CMatrix GaussDecomposition::reconstruct() const {
  const auto n = static_cast<Index>(dim);
  CMatrix m = CMatrix::Zero(n, n);
  for (const auto& [i, w] : diagonal) m(static_cast<Index>(i), static_cast<Index>(i)) += w;
  // Generator c_i^* c_j |u_j⟩⟨u_i| lands in row j, column i.
  for (const auto* part : {&raising, &lowering})
    for (const auto& t : *part)
      m(static_cast<Index>(t.j), static_cast<Index>(t.i)) += t.value;
  return m;
}

}  // namespace decolab::hilbert
