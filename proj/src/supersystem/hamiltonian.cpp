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

#include "supersystem/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "common/error.hpp"
#include "wavepacket/spectral.hpp"

namespace decolab::supersystem {

using Eigen::Index;
using wavepacket::Grid1D;
using wavepacket::kHbar;
using wavepacket::PacketEvolution;

PositionFactor PositionFactor::linear(double slope, double offset, std::string name) {
  return PositionFactor{std::move(name), [slope, offset](double x) { return slope * x + offset; },
                        AffineForm{slope, offset}};
}

PositionFactor PositionFactor::general(std::function<double(double)> fn, std::string name) {
  return PositionFactor{std::move(name), std::move(fn), std::nullopt};
}

InteractionHamiltonian::InteractionHamiltonian(OperatorMatrix h1, double mass, OperatorMatrix v1,
                                               PositionFactor v2)
    : h1_(std::move(h1)), mass_(mass), v1_(std::move(v1)), v2_(std::move(v2)) {
  require(h1_.hermitian(), ErrorCode::kNonHermitian, "H1 must be Hermitian");
  require(v1_.hermitian(), ErrorCode::kNonHermitian, "V1 must be Hermitian");
  require(h1_.dim() == v1_.dim(), ErrorCode::kDimensionMismatch, "H1 and V1 differ in dimension");
  require(mass_ > 0.0, ErrorCode::kInvalidArgument, "mass must be positive");
  require(static_cast<bool>(v2_.value), ErrorCode::kInvalidArgument, "V2 needs a value function");

  const CMatrix h = h1_.dense();
  const CMatrix v = v1_.dense();
  const double scale = h.norm() * v.norm();
  require((h * v - v * h).norm() <= 1e-10 * scale, ErrorCode::kNonCommuting,
          "H1 and V1 do not commute");

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(v, Eigen::EigenvaluesOnly);
  v1_eigs_ = solver.eigenvalues();
  const double vmax = v1_eigs_.cwiseAbs().maxCoeff();
  for (Index k = 1; k < v1_eigs_.size(); ++k)
    require(v1_eigs_[k] - v1_eigs_[k - 1] > 1e-10 * vmax, ErrorCode::kDegenerateSpectrum,
            "V1 has a degenerate spectrum");
}

double branch_force(const InteractionHamiltonian& ham, double v_eigenvalue) {
  require(ham.v2().affine.has_value(), ErrorCode::kNonlinearPotential,
          "closed-form branch evolution needs an affine V2 (" + ham.v2().name + ")");
  return -v_eigenvalue * ham.v2().affine->slope;
}

GaussianPacket branch_evolve(const InteractionHamiltonian& ham, double v_eigenvalue,
                             const GaussianPacket& initial, double t) {
  const double f = branch_force(ham, v_eigenvalue);
  require(t >= 0.0, ErrorCode::kInvalidArgument, "evolution time must be non-negative");
  initial.validate();
  require(std::abs(initial.mass - ham.mass()) <= 1e-12 * ham.mass(), ErrorCode::kInvalidArgument,
          "packet mass differs from the Hamiltonian's mass");
  return wavepacket::evolve_packet(initial, f, t, PacketEvolution::kFixedWidth);
}

namespace {

struct BranchTerms {
  Complex coefficient;
  CVector sub1;
  double energy;  // H1 value plus v times the V2 offset
  double force;
  GaussianPacket packet;
};

CMatrix branch_matrix(const std::vector<BranchTerms>& terms, const Grid1D& grid, double t,
                      PacketEvolution mode) {
  const auto d1 = terms.front().sub1.size();
  CMatrix m = CMatrix::Zero(d1, static_cast<Index>(grid.size()));
  for (const auto& b : terms) {
    const CVector phi = wavepacket::sample_packet(grid, b.packet, b.force, t, mode);
    const Complex weight = b.coefficient * std::polar(1.0, -b.energy * t / kHbar);
    m.noalias() += weight * b.sub1 * phi.transpose();
  }
  return m;
}

void require_on_grid(const Grid1D& grid, const GaussianPacket& p) {
  require(p.x0 - 6.0 * p.sigma_x >= grid.x_min() && p.x0 + 6.0 * p.sigma_x <= grid.x_max(),
          ErrorCode::kPacketOutsideGrid, "branch packet leaves the grid");
}

}  // namespace

double schrodinger_residual(const InteractionHamiltonian& ham, const CorrelatedState& correlated,
                            double t, const Grid1D& grid, PacketEvolution mode) {
  require(!correlated.discrete_sub2(), ErrorCode::kInvalidArgument,
          "the residual needs packet-valued sub2 states");
  require(t >= 0.0, ErrorCode::kInvalidArgument, "evolution time must be non-negative");
  const double offset = ham.v2().affine ? ham.v2().affine->offset : 0.0;

  std::vector<BranchTerms> terms;
  for (const auto& b : correlated.branches()) {
    require(b.sub1.dim() == ham.h1().dim(), ErrorCode::kDimensionMismatch,
            "sub1 dimension differs from H1");
    const double v = ham.v1().sandwich(b.sub1.amplitudes(), b.sub1.amplitudes()).real();
    const double e1 = ham.h1().sandwich(b.sub1.amplitudes(), b.sub1.amplitudes()).real();
    const auto& packet = std::get<GaussianPacket>(b.sub2);
    require(std::abs(packet.mass - ham.mass()) <= 1e-12 * ham.mass(), ErrorCode::kInvalidArgument,
            "packet mass differs from the Hamiltonian's mass");
    terms.push_back(BranchTerms{b.coefficient, b.sub1.amplitudes(), e1 + v * offset,
                                branch_force(ham, v), packet});
  }

  const double dt = std::max(1e-3 * t, 1e-12);
  for (const auto& b : terms)
    for (const double s : {t - dt, t + dt})
      require_on_grid(grid, wavepacket::evolve_packet(b.packet, b.force, s, mode));

  const CMatrix psi = branch_matrix(terms, grid, t, mode);
  const CMatrix dpsi =
      (branch_matrix(terms, grid, t + dt, mode) - branch_matrix(terms, grid, t - dt, mode)) /
      (2.0 * dt);

  CMatrix h_psi = ham.h1().dense() * psi;
  for (Index i = 0; i < psi.rows(); ++i)
    h_psi.row(i) += wavepacket::apply_kinetic(grid, psi.row(i).transpose(), ham.mass()).transpose();
  CMatrix v_psi = ham.v1().dense() * psi;
  for (std::size_t k = 0; k < grid.size(); ++k)
    v_psi.col(static_cast<Index>(k)) *= ham.v2().value(grid.x(k));
  h_psi += v_psi;

  const double residual = (h_psi - Complex(0.0, kHbar) * dpsi).norm();
  const double scale = h_psi.norm();
  return scale > 0.0 ? residual / scale : residual;
}

}  // namespace decolab::supersystem
