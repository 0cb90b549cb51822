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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hilbert/algebra.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "wavepacket/criteria.hpp"
#include "wavepacket/evolution.hpp"
#include "wavepacket/grid.hpp"
#include "wavepacket/spectral.hpp"

using namespace decolab;
using namespace decolab::wavepacket;
using hilbert::OperatorMatrix;
using hilbert::StateVector;
using testing::code_of;

namespace {

constexpr double kSigma = 1e-9;
constexpr double kMass = 1e-25;

GaussianPacket packet(double x0, double sigma = kSigma, double p0 = 0.0) { return {x0, p0, sigma, kMass}; }

std::vector<double> grid_xs(const Grid1D& g) {
  std::vector<double> xs(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) xs[k] = g.x(k);
  return xs;
}

// Plain Riemann sums of |psi|^2 over the grid, independent of position_moments.
std::pair<double, double> direct_moments(const Grid1D& g, const CVector& amps) {
  double w = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double p = std::norm(amps[static_cast<Eigen::Index>(k)]);
    w += p;
    m1 += p * g.x(k);
    m2 += p * g.x(k) * g.x(k);
  }
  m1 /= w;
  return {m1, std::sqrt(std::max(0.0, m2 / w - m1 * m1))};
}

}  // namespace

TEST_CASE("discretized Gaussian reproduces its moments") {
  const Grid1D g(-1e-8, 1e-8, 512);
  const StateVector psi = discretize_gaussian(g, packet(0.0));
  const PositionMoments m = position_moments(g, psi);
  CHECK(std::abs(m.mean) <= g.dx());
  CHECK(std::abs(m.deviation - kSigma) <= 0.01 * kSigma);
  CHECK(std::abs(psi.amplitudes().norm() - 1.0) < 1e-12);

  const auto [mean, dev] = direct_moments(g, psi.amplitudes());
  CHECK(std::abs(mean - m.mean) < 1e-3 * g.dx());
  CHECK(std::abs(dev - m.deviation) < 1e-6 * kSigma);
}

TEST_CASE("momentum of a boosted packet matches a direct DFT") {
  const Grid1D g(-1e-8, 1e-8, 512);
  const double p0 = 1e-27;
  const StateVector psi = discretize_gaussian(g, packet(0.0, kSigma, p0));
  const MomentumMoments m = momentum_moments(g, psi);
  CHECK(std::abs(m.mean - p0) <= 0.01 * p0);
  const double oracle_p = kHbar * oracle::dft_mean_wavenumber(psi.amplitudes(), g.dx());
  CHECK(std::abs(m.mean - oracle_p) <= 1e-6 * p0);
  CHECK(std::abs(m.deviation - kHbar / (2.0 * kSigma)) <= 0.01 * kHbar / (2.0 * kSigma));
}

TEST_CASE("overlap of packets ten widths apart") {
  const Grid1D g(-2e-8, 2e-8, 2048);
  const StateVector a = discretize_gaussian(g, packet(-5.0 * kSigma));
  const StateVector b = discretize_gaussian(g, packet(5.0 * kSigma));
  const double overlap = std::abs(hilbert::inner(a, b));
  CHECK(overlap < 1e-5);
  CHECK(std::abs(overlap - oracle::gaussian_overlap(10.0 * kSigma, kSigma)) < 1e-3 * overlap);

  const StateVector c = discretize_gaussian(g, packet(1.5 * kSigma));
  const double near = std::abs(hilbert::inner(a, c));
  CHECK(std::abs(near - oracle::gaussian_overlap(6.5 * kSigma, kSigma)) < 1e-6);
}

TEST_CASE("packets must fit inside the grid") {
  const Grid1D g(-1e-8, 1e-8, 512);
  CHECK(code_of([&] { discretize_gaussian(g, packet(5e-9)); }) == ErrorCode::kPacketOutsideGrid);
  CHECK(code_of([&] { discretize_gaussian(g, packet(4e-9)); }) == ErrorCode::kOk);
  CHECK(code_of([] { Grid1D(0.0, 1.0, 15); }) == ErrorCode::kInvalidGrid);
  CHECK(code_of([] { Grid1D(1.0, 1.0, 64); }) == ErrorCode::kInvalidGrid);
  CHECK(code_of([] { GaussianPacket{0.0, 0.0, 0.0, 1.0}.validate(); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { GaussianPacket{0.0, 0.0, 1.0, -1.0}.validate(); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("property: grid moments match the analytic packet and respect the Heisenberg floor") {
  oracle::Rng rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const double sigma = std::pow(10.0, rng.uniform(-10.0, -8.0));
    const double half = sigma * rng.uniform(8.0, 20.0);
    const std::size_t n = 256 + rng.index(768);
    const Grid1D g(-half, half, n);
    const double room = half - 6.0 * sigma;
    const double x0 = rng.uniform(-room, room);
    const double p0 = rng.uniform(-3.0, 3.0) * kHbar / (2.0 * sigma);
    const GaussianPacket gp{x0, p0, sigma, kMass};
    const StateVector psi = discretize_gaussian(g, gp);
    const PositionMoments x = position_moments(g, psi);
    const double tol = std::max(0.01 * sigma, 2.0 * g.dx());
    CHECK(std::abs(x.mean - x0) <= tol);
    CHECK(std::abs(x.deviation - sigma) <= tol);
    const MomentumMoments p = momentum_moments(g, psi);
    CHECK(x.deviation * p.deviation >= 0.5 * kHbar * (1.0 - 1e-3));
  }
}

TEST_CASE("A1 examples") {
  const Grid1D far(0.99e-6, 1.01e-6, 2048);
  const OperatorMatrix x_far = position_operator(far);
  const PacketReport r = check_a1(discretize_gaussian(far, packet(1e-6)), x_far, 10.0, "x");
  CHECK(r.observable_name == "x");
  CHECK(std::abs(r.ratio - 1000.0) < 10.0);
  CHECK(r.passes_a1);

  const Grid1D centred(-1e-8, 1e-8, 512);
  const PacketReport zero = check_a1(discretize_gaussian(centred, packet(0.0)), position_operator(centred), 10.0);
  CHECK(zero.ratio < 1e-3);
  CHECK_FALSE(zero.passes_a1);

  // Two packets at +-d: the two-point distribution has variance d^2 + sigma^2.
  const double d = 1e-6;
  const Grid1D wide(-1.01e-6, 1.01e-6, 8192);
  const CVector sum = discretize_gaussian(wide, packet(-d)).amplitudes() + discretize_gaussian(wide, packet(d)).amplitudes();
  const PacketReport cat = check_a1(hilbert::make_state(sum), position_operator(wide), 10.0);
  CHECK(std::abs(cat.mean) < 1e-3 * d);
  CHECK(std::abs(cat.deviation - std::sqrt(d * d + kSigma * kSigma)) < 1e-3 * d);
  CHECK_FALSE(cat.passes_a1);

  const OperatorMatrix skew((CMatrix(2, 2) << 0, 1, 0, 0).finished());
  CHECK(code_of([&] { check_a1(StateVector::basis(2, 0), skew, 10.0); }) == ErrorCode::kNonHermitian);
}

TEST_CASE("property: A1 verdict agrees with the reported ratio") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector psi(rng.unit_vector(5));
    const OperatorMatrix op(rng.hermitian(5), {.hermitian = true});
    const double threshold = rng.uniform(1.01, 5.0);
    const PacketReport r = check_a1(psi, op, threshold);
    CHECK(r.deviation >= 0.0);
    CHECK(r.passes_a1 == (r.ratio >= threshold));
    CHECK(std::abs(r.mean - oracle::eig_expectation(op.dense(), psi.amplitudes())) < 1e-10);
  }
}

TEST_CASE("A2 examples") {
  const Grid1D g(-0.01e-6, 1.01e-6, 8192);
  const OperatorMatrix x = position_operator(g);
  const std::vector<StateVector> apart{discretize_gaussian(g, packet(0.0)), discretize_gaussian(g, packet(1e-6))};
  const InterferenceReport ok = check_a2(apart, x);
  CHECK(ok.passes_a2[0][1]);
  CHECK(std::abs(ok.pair_gap(0, 1) - 1e-6) < 1e-3 * 1e-6);
  CHECK(ok.all_pass());

  const std::vector<StateVector> same{apart[1], apart[1]};
  const InterferenceReport coincide = check_a2(same, x);
  CHECK(coincide.pair_gap(0, 1) < coincide.pair_threshold(0, 1));
  CHECK_FALSE(coincide.passes_a2[0][1]);

  CHECK(code_of([&] { check_a2(std::vector<StateVector>{apart[0], StateVector::basis(3, 0)}, x); }) ==
        ErrorCode::kDimensionMismatch);
}

TEST_CASE("A2 gap inequality is inclusive at the boundary") {
  // Dyadic amplitudes and eigenvalues keep every moment exact: both states
  // have deviation 1 and their means differ by exactly 1.
  const RVector values = (RVector(8) << 0, 0, 2, 2, 1, 1, 3, 3).finished();
  const OperatorMatrix a = OperatorMatrix::diagonal(values);
  CVector u1 = CVector::Zero(8), u2 = CVector::Zero(8);
  u1.head(4).setConstant(0.5);
  u2.tail(4).setConstant(0.5);
  const std::vector<StateVector> states{StateVector(u1), StateVector(u2)};
  const InterferenceReport r = check_a2(states, a);
  CHECK(r.pair_gap(0, 1) == 1.0);
  CHECK(r.pair_threshold(0, 1) == 1.0);
  CHECK(r.off_diagonal_magnitude(0, 1) == 0.0);
  CHECK(r.passes_a2[0][1]);
}

TEST_CASE("overlapping Gaussians one width apart meet the gap bound but not the interference bound") {
  const Grid1D g(-1e-8, 1.1e-8, 4096);
  const OperatorMatrix x = position_operator(g);
  const std::vector<StateVector> states{discretize_gaussian(g, packet(0.0)), discretize_gaussian(g, packet(kSigma))};
  const InterferenceReport r = check_a2(states, x);
  CHECK(std::abs(r.pair_gap(0, 1) - r.pair_threshold(0, 1)) < 1e-6 * kSigma);
  // |<u1|x|u2>| = e^{-1/8} sigma / 2 for centres 0 and sigma.
  CHECK(std::abs(r.off_diagonal_magnitude(0, 1) - std::exp(-0.125) * kSigma / 2.0) < 1e-6 * kSigma);
  CHECK_FALSE(r.passes_a2[0][1]);
}

TEST_CASE("property: A2 report is symmetric") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t count = 2 + rng.index(3);
    std::vector<StateVector> states;
    for (std::size_t i = 0; i < count; ++i) states.emplace_back(rng.unit_vector(6));
    const OperatorMatrix op(rng.hermitian(6), {.hermitian = true});
    const InterferenceReport r = check_a2(states, op);
    CHECK((r.pair_gap - r.pair_gap.transpose()).norm() == 0.0);
    CHECK((r.pair_threshold - r.pair_threshold.transpose()).norm() == 0.0);
    CHECK((r.off_diagonal_magnitude - r.off_diagonal_magnitude.transpose()).norm() == 0.0);
    for (std::size_t n = 0; n < count; ++n)
      for (std::size_t m = 0; m < count; ++m) CHECK(r.passes_a2[n][m] == r.passes_a2[m][n]);
  }
}

TEST_CASE("Taylor criterion for linear, quadratic and quartic observables") {
  const Grid1D g(-1e-8, 1e-8, 1024);
  const StateVector off = discretize_gaussian(g, packet(2e-9));
  const AnalyticObservable linear{"x", [](double x) { return x; }, [](double) { return 1.0; },
                                  [](double) { return 0.0; }};
  const PacketReport lin = wavepacket_criterion(off, linear, g);
  CHECK(std::abs(lin.taylor_residual) < 1e-12 * 2e-9);
  CHECK(*lin.passes_taylor);

  const AnalyticObservable square{"x^2", [](double x) { return x * x; }, [](double x) { return 2.0 * x; },
                                  [](double) { return 2.0; }};
  CHECK(std::abs(wavepacket_criterion(off, square, g).taylor_residual) < 1e-10 * kSigma * kSigma);

  const StateVector centred = discretize_gaussian(g, packet(0.0));
  const AnalyticObservable quartic{"x^4", [](double x) { return std::pow(x, 4); },
                                   [](double x) { return 4.0 * std::pow(x, 3); },
                                   [](double x) { return 12.0 * x * x; }};
  const double s4 = std::pow(kSigma, 4);
  CHECK(std::abs(wavepacket_criterion(centred, quartic, g).taylor_residual - 3.0 * s4) < 0.01 * s4);

  const AnalyticObservable log_x{"log x", [](double x) { return std::log(x); }, [](double x) { return 1.0 / x; },
                                 [](double x) { return -1.0 / (x * x); }};
  const StateVector negative = discretize_gaussian(g, packet(-3e-9));
  CHECK(code_of([&] { wavepacket_criterion(negative, log_x, g); }) == ErrorCode::kDerivativeUndefined);
}

TEST_CASE("property: second-order Taylor is exact for quadratic observables") {
  oracle::Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const double sigma = rng.uniform(0.5, 2.0);
    const Grid1D g(-30.0, 30.0, 1024);
    const double x0 = rng.uniform(-15.0, 15.0);
    const double a = rng.uniform(-3.0, 3.0), b = rng.uniform(-3.0, 3.0), c = rng.uniform(-3.0, 3.0);
    const AnalyticObservable quad{"quad", [=](double x) { return a * x * x + b * x + c; },
                                  [=](double x) { return 2.0 * a * x + b; }, [=](double) { return 2.0 * a; }};
    const StateVector psi = discretize_gaussian(g, {x0, 0.0, sigma, 1.0});
    const PacketReport r = wavepacket_criterion(psi, quad, g);
    const double scale = std::abs(a) * (x0 * x0 + sigma * sigma) + std::abs(b * x0) + std::abs(c);
    CHECK(std::abs(r.taylor_residual) < 1e-10 * scale);
  }
}

TEST_CASE("superposition of packets is not a packet") {
  const Grid1D one(-1e-8, 1e-8, 512);
  const std::vector<GaussianPacket> single{packet(0.0)};
  const std::vector<Complex> c1{1.0};
  const SuperpositionVerdict alone = superposition_packet_test(single, c1, one);
  CHECK(alone.each_passes[0]);
  CHECK(alone.superposition_passes);

  const Grid1D wide(-1.01e-6, 1.01e-6, 8192);
  const std::vector<GaussianPacket> pair{packet(-1e-6), packet(1e-6)};
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> c2{s, s};
  const SuperpositionVerdict two = superposition_packet_test(pair, c2, wide);
  CHECK(two.each_passes[0]);
  CHECK(two.each_passes[1]);
  CHECK_FALSE(two.superposition_passes);

  const std::vector<GaussianPacket> three{packet(-1e-6), packet(0.0), packet(1e-6)};
  const std::vector<Complex> c3(3, Complex(1.0 / std::sqrt(3.0)));
  const SuperpositionVerdict tri = superposition_packet_test(three, c3, wide);
  CHECK(std::all_of(tri.each_passes.begin(), tri.each_passes.end(), [](bool b) { return b; }));
  CHECK_FALSE(tri.superposition_passes);

  const std::vector<GaussianPacket> touching{packet(0.0), packet(kSigma)};
  CHECK(code_of([&] { superposition_packet_test(touching, c2, one); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { superposition_packet_test(pair, c1, wide); }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("property: no nontrivial superposition of weakly interfering packets passes") {
  oracle::Rng rng(8080);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t count = 2 + rng.index(3);
    const double sep = rng.uniform(10.0, 40.0);
    std::vector<GaussianPacket> packets;
    for (std::size_t i = 0; i < count; ++i) packets.push_back({20.0 + sep * static_cast<double>(i), 0.0, 1.0, 1.0});
    const double span = 40.0 + sep * static_cast<double>(count - 1);
    const Grid1D g(0.0, span, 4096);
    std::vector<Complex> coeffs(count, Complex(0.0, 0.0));
    // At least two nonzero coefficients.
    const std::size_t first = rng.index(count);
    const std::size_t second = (first + 1 + rng.index(count - 1)) % count;
    for (std::size_t i = 0; i < count; ++i)
      if (i == first || i == second || rng.uniform() < 0.5) coeffs[i] = Complex(rng.normal(), rng.normal());
    const SuperpositionVerdict v = superposition_packet_test(packets, coeffs, g);
    CHECK(std::all_of(v.each_passes.begin(), v.each_passes.end(), [](bool b) { return b; }));
    CHECK_FALSE(v.superposition_passes);
  }
}

TEST_CASE("spreading evolution matches split-step integration") {
  const double mass = 1e-27;
  const double sigma = 1e-9;
  const double t = 2e-11;
  const double force = 2.0 * mass * 3.0 * sigma / (t * t);
  const Grid1D g(-3e-8, 3e-8, 1024);
  const GaussianPacket start{-4e-9, 0.0, sigma, mass};
  const CVector psi0 = sample_packet(g, start, force, 0.0, PacketEvolution::kSpreading);
  CHECK((psi0 - discretize_gaussian(g, start).amplitudes()).norm() < 1e-12);

  const CVector exact = sample_packet(g, start, force, t, PacketEvolution::kSpreading);
  const CVector stepped =
      oracle::split_step(psi0, grid_xs(g), g.dx(), mass, kHbar, [force](double x) { return -force * x; }, t, 4000);
  CHECK((exact - stepped).norm() < 1e-4);

  const auto [mean, dev] = direct_moments(g, exact);
  CHECK(std::abs(dev - spread_width(sigma, mass, t)) < 1e-3 * sigma);
  CHECK(std::abs(mean - (start.x0 + force * t * t / (2.0 * mass))) < 1e-3 * sigma);
  CHECK(spread_width(sigma, mass, t) > 1.4 * sigma);

  const auto [fixed_mean, fixed_dev] = direct_moments(g, sample_packet(g, start, force, t, PacketEvolution::kFixedWidth));
  CHECK(std::abs(fixed_dev - sigma) < 1e-3 * sigma);
  CHECK(std::abs(fixed_mean - mean) < 1e-3 * sigma);
}

TEST_CASE("closed-form packet motion") {
  const GaussianPacket start{1e-9, 2e-27, kSigma, kMass};
  const double f = 3e-20, t = 1e-6;
  const GaussianPacket fixed = evolve_packet(start, f, t);
  CHECK(fixed.x0 == doctest::Approx(start.x0 + start.p0 * t / kMass + f * t * t / (2.0 * kMass)).epsilon(1e-12));
  CHECK(fixed.p0 == doctest::Approx(start.p0 + f * t).epsilon(1e-12));
  CHECK(fixed.sigma_x == kSigma);
  const GaussianPacket spread = evolve_packet(start, f, t, PacketEvolution::kSpreading);
  const double tau = kHbar * t / (2.0 * kMass * kSigma * kSigma);
  CHECK(spread.sigma_x == doctest::Approx(kSigma * std::sqrt(1.0 + tau * tau)).epsilon(1e-12));
}
