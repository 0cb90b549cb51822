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

#include "hilbert/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "common/error.hpp"

namespace decolab::hilbert {

namespace {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

StateVector::StateVector(CVector amplitudes, std::string basis_label)
    : amps_(std::move(amplitudes)), basis_(std::move(basis_label)) {
  require(amps_.size() > 0, ErrorCode::kEmptyInput, "state vector has no amplitudes");
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) >= kNormTol) {
    std::ostringstream os;
    os << "state vector is not unit norm (sum |c|^2 = " << norm2 << ")";
    fail(ErrorCode::kNotNormalized, os.str());
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index, std::string basis_label) {
  require(dim > 0, ErrorCode::kEmptyInput, "basis state of dimension zero");
  require(index < dim, ErrorCode::kIndexOutOfRange, "basis index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(std::move(v), std::move(basis_label));
}

OperatorMatrix::OperatorMatrix(CMatrix entries, OperatorClaims claims, std::string units)
    : dense_(std::move(entries)), units_(std::move(units)) {
  require(dense_.rows() == dense_.cols(), ErrorCode::kDimensionMismatch,
          "operator matrix is not square");
  require(dense_.rows() > 0, ErrorCode::kEmptyInput, "operator matrix is empty");
  dim_ = static_cast<std::size_t>(dense_.rows());

  const double scale = std::max(1.0, max_abs(dense_));
  const double herm_dev = max_abs(dense_ - dense_.adjoint());
  hermitian_ = herm_dev < kAlgTol * scale;
  if (claims.hermitian && !hermitian_) {
    std::ostringstream os;
    os << "operator claimed Hermitian but ||M - M^dagger||_max = " << herm_dev;
    fail(ErrorCode::kNonHermitian, os.str());
  }
  if (claims.unitary) {
    const CMatrix gram = dense_.adjoint() * dense_;
    const double dev = max_abs(gram - CMatrix::Identity(dense_.rows(), dense_.cols()));
    if (dev >= kNormTol) {
      std::ostringstream os;
      os << "operator claimed unitary but ||M^dagger M - I||_max = " << dev;
      fail(ErrorCode::kNonUnitary, os.str());
    }
    unitary_ = true;
  }
}

OperatorMatrix OperatorMatrix::diagonal(RVector values, std::string units) {
  require(values.size() > 0, ErrorCode::kEmptyInput, "diagonal operator is empty");
  OperatorMatrix op;
  op.dim_ = static_cast<std::size_t>(values.size());
  op.hermitian_ = true;
  op.unitary_ = values.cwiseAbs().isApproxToConstant(1.0, kNormTol);
  op.diag_ = std::move(values);
  op.units_ = std::move(units);
  return op;
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  return OperatorMatrix(CMatrix::Identity(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim)),
                        OperatorClaims{true, true});
}

CMatrix OperatorMatrix::dense() const {
  if (diag_) return diag_->cast<Complex>().asDiagonal();
  return dense_;
}

const RVector& OperatorMatrix::diagonal_values() const {
  require(diag_.has_value(), ErrorCode::kInvalidArgument, "operator is not stored as a diagonal");
  return *diag_;
}

Complex OperatorMatrix::element(std::size_t row, std::size_t col) const {
  require(row < dim_ && col < dim_, ErrorCode::kIndexOutOfRange, "operator element out of range");
  if (diag_) return row == col ? Complex((*diag_)[static_cast<Eigen::Index>(row)]) : Complex{};
  return dense_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

CVector OperatorMatrix::apply(const CVector& v) const {
  require(static_cast<std::size_t>(v.size()) == dim_, ErrorCode::kDimensionMismatch,
          "operator and vector dimensions differ");
  if (diag_) return diag_->cast<Complex>().cwiseProduct(v);
  return dense_ * v;
}

Complex OperatorMatrix::sandwich(const CVector& a, const CVector& b) const {
  return a.dot(apply(b));
}

}  // namespace decolab::hilbert
