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

#include "scenarios/bell.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "common/constants.hpp"
#include "common/error.hpp"
#include "wavepacket/criteria.hpp"

namespace decolab::scenarios {

using hilbert::OperatorMatrix;
using hilbert::StateVector;
using supersystem::Branch;
using supersystem::CorrelatedState;

namespace {

constexpr double kExactMagnitudeTol = 1e-10;

const StateVector& sub2_of(const Branch& b) { return std::get<StateVector>(b.sub2); }

void check_shapes(const CorrelatedState& state, const OperatorMatrix& x, const OperatorMatrix& y) {
  require(state.discrete_sub2(), ErrorCode::kInvalidArgument,
          "correlations need vector-valued sub2 states");
  require(x.hermitian() && y.hermitian(), ErrorCode::kNonHermitian, "observables must be Hermitian");
  const Branch& first = state.branches().front();
  require(x.dim() == first.sub1.dim() && y.dim() == sub2_of(first).dim(),
          ErrorCode::kDimensionMismatch, "observable dimension differs from its sub-system");
}

double diag_mean(const OperatorMatrix& op, const StateVector& s) {
  return op.sandwich(s.amplitudes(), s.amplitudes()).real();
}

// Audits a1 and the a2 off-diagonal bound for one sub2 observable.
bool audit_sub2(const CorrelatedState& state, const OperatorMatrix& y) {
  const wavepacket::WavepacketThresholds th;
  std::vector<double> mean;
  for (const auto& b : state.branches()) {
    const auto report = wavepacket::check_a1(sub2_of(b), y, th.a1_ratio);
    if (!report.passes_a1) return false;
    mean.push_back(report.mean);
  }
  const auto& br = state.branches();
  for (std::size_t n = 0; n < br.size(); ++n) {
    for (std::size_t m = n + 1; m < br.size(); ++m) {
      const double off = std::abs(y.sandwich(sub2_of(br[n]).amplitudes(), sub2_of(br[m]).amplitudes()));
      if (off > th.a2_offdiag_frac * std::max(std::abs(mean[n]), std::abs(mean[m]))) return false;
    }
  }
  return true;
}

}  // namespace

Complex exact_correlation(const CorrelatedState& state, const OperatorMatrix& x, const OperatorMatrix& y) {
  check_shapes(state, x, y);
  Complex sum(0.0, 0.0);
  const auto& br = state.branches();
  for (const auto& n : br)
    for (const auto& m : br)
      sum += std::conj(n.coefficient) * m.coefficient *
             x.sandwich(n.sub1.amplitudes(), m.sub1.amplitudes()) *
             y.sandwich(sub2_of(n).amplitudes(), sub2_of(m).amplitudes());
  return sum;
}

double diagonal_correlation(const CorrelatedState& state, const OperatorMatrix& x, const OperatorMatrix& y) {
  check_shapes(state, x, y);
  double sum = 0.0;
  for (const auto& b : state.branches())
    sum += std::norm(b.coefficient) * diag_mean(x, b.sub1) * diag_mean(y, sub2_of(b));
  return sum;
}

BellReport bell_evaluate(const CorrelatedState& state, const BellObservables& obs, int sign,
                         bool enforce_approx) {
  require(sign == 1 || sign == -1, ErrorCode::kInvalidArgument, "sign must be +1 or -1");
  check_shapes(state, obs.a, obs.b);
  check_shapes(state, obs.c, obs.d);

  for (const auto& b : state.branches()) {
    for (const OperatorMatrix* op : {&obs.a, &obs.c})
      require(std::abs(diag_mean(*op, b.sub1)) >= 1.0 - kExactMagnitudeTol,
              ErrorCode::kConditionViolated, "a sub1 observable has branch expectation below 1 in magnitude");
    for (const OperatorMatrix* op : {&obs.b, &obs.d})
      require(std::abs(diag_mean(*op, sub2_of(b))) >= 1.0 - kExactMagnitudeTol,
              ErrorCode::kConditionViolated, "a sub2 observable has branch expectation below 1 in magnitude");
  }

  BellReport r;
  if (enforce_approx) r.approx_conditions_met = audit_sub2(state, obs.b) && audit_sub2(state, obs.d);
  r.used_diagonal_form = enforce_approx && r.approx_conditions_met;

  auto corr = [&](const OperatorMatrix& x, const OperatorMatrix& y) {
    return r.used_diagonal_form ? diagonal_correlation(state, x, y) : exact_correlation(state, x, y).real();
  };
  const double ab = corr(obs.a, obs.b);
  const double ad = corr(obs.a, obs.d);
  const double cb = corr(obs.c, obs.b);
  const double cd = corr(obs.c, obs.d);
  r.lhs = std::abs(ab - ad);
  r.rhs = 2.0 + sign * (cd + cb);
  r.satisfied = r.lhs <= r.rhs + kAlgTol;

  r.chsh_value = std::abs(exact_correlation(state, obs.a, obs.b).real() -
                          exact_correlation(state, obs.a, obs.d).real() +
                          exact_correlation(state, obs.c, obs.b).real() +
                          exact_correlation(state, obs.c, obs.d).real());
  return r;
}

OperatorMatrix spin_observable(double theta) {
  CMatrix m(2, 2);
  m << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
  return OperatorMatrix(std::move(m), {.hermitian = true, .unitary = true});
}

CorrelatedState singlet_state() {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Branch> branches;
  branches.push_back(Branch{Complex(s, 0.0), StateVector::basis(2, 0, "spin"),
                            StateVector::basis(2, 1, "spin"), std::nullopt});
  branches.push_back(Branch{Complex(-s, 0.0), StateVector::basis(2, 1, "spin"),
                            StateVector::basis(2, 0, "spin"), std::nullopt});
  return CorrelatedState(std::move(branches));
}

double chsh_singlet(double theta_a, double theta_b, double theta_c, double theta_d) {
  const CorrelatedState psi = singlet_state();
  const OperatorMatrix a = spin_observable(theta_a);
  const OperatorMatrix b = spin_observable(theta_b);
  const OperatorMatrix c = spin_observable(theta_c);
  const OperatorMatrix d = spin_observable(theta_d);
  return std::abs(exact_correlation(psi, a, b).real() - exact_correlation(psi, a, d).real() +
                  exact_correlation(psi, c, b).real() + exact_correlation(psi, c, d).real());
}

double chsh_singlet_optimal() {
  return chsh_singlet(0.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0);
}

BellSetup random_compliant_setup(std::uint64_t seed, const wavepacket::Grid1D& grid, double separation,
                                 double sigma) {
  std::mt19937_64 gen(seed);
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  auto random_sign = [&] { return uniform() < 0.5 ? -1.0 : 1.0; };

  const double w = 0.05 + 0.9 * uniform();
  const Complex c0 = std::polar(std::sqrt(w), 2.0 * kPi * uniform());
  const Complex c1 = std::polar(std::sqrt(1.0 - w), 2.0 * kPi * uniform());
  const wavepacket::GaussianPacket left{-0.5 * separation, 0.0, sigma, 1.0};
  const wavepacket::GaussianPacket right{0.5 * separation, 0.0, sigma, 1.0};

  std::vector<Branch> branches;
  branches.push_back(Branch{c0, StateVector::basis(2, 0), wavepacket::discretize_gaussian(grid, left),
                            std::nullopt});
  branches.push_back(Branch{c1, StateVector::basis(2, 1), wavepacket::discretize_gaussian(grid, right),
                            std::nullopt});

  auto sign_diag = [&] {
    RVector v(2);
    v << random_sign(), random_sign();
    return OperatorMatrix::diagonal(v);
  };
  auto step = [](double x) { return x >= 0.0 ? 1.0 : -1.0; };
  OperatorMatrix a = sign_diag();
  OperatorMatrix c = sign_diag();
  OperatorMatrix b = wavepacket::function_operator(grid, step);
  const double d_sign = random_sign();
  OperatorMatrix d = uniform() < 0.5
                         ? wavepacket::function_operator(grid, [=](double x) { return d_sign * step(x); })
                         : wavepacket::function_operator(grid, [=](double) { return d_sign; });
  return BellSetup{CorrelatedState(std::move(branches)),
                   BellObservables{std::move(a), std::move(b), std::move(c), std::move(d)}};
}

}  // namespace decolab::scenarios
