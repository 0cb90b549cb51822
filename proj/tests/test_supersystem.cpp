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
#include <numeric>
#include <vector>

#include "hilbert/algebra.hpp"
#include "oracles.hpp"
#include "supersystem/correlated.hpp"
#include "supersystem/hamiltonian.hpp"
#include "support.hpp"
#include "wavepacket/evolution.hpp"

using namespace decolab;
using namespace decolab::supersystem;
using testing::code_of;
using wavepacket::Grid1D;
using wavepacket::kHbar;
using wavepacket::PacketEvolution;

namespace {

const Complex I(0.0, 1.0);

StateVector e(std::size_t dim, std::size_t k) { return StateVector::basis(dim, k); }

CMatrix random_unitary(oracle::Rng& rng, std::size_t dim) { return oracle::series_exp(I * rng.hermitian(dim)); }

StateVector column(const CMatrix& u, Eigen::Index k) { return StateVector(u.col(k)); }

OperatorMatrix spin_z(double mu) { return OperatorMatrix::diagonal((RVector(2) << -mu, mu).finished(), "J/T"); }

InteractionHamiltonian linear_ham(double mass, double mu, double beta) {
  return InteractionHamiltonian(OperatorMatrix(CMatrix::Zero(2, 2), {.hermitian = true}), mass, spin_z(mu),
                                PositionFactor::linear(-beta, 0.0, "-beta z"));
}

// Kronecker product of explicit basis vectors, independent of tensor().
CVector product_basis(const std::vector<std::size_t>& idx, std::size_t dim) {
  std::size_t flat = 0;
  for (std::size_t i : idx) flat = flat * dim + i;
  std::size_t total = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) total *= dim;
  CVector v = CVector::Zero(static_cast<Eigen::Index>(total));
  v[static_cast<Eigen::Index>(flat)] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("von Neumann coupling examples") {
  const CorrelatedState eig = von_neumann_couple(e(2, 0), 0, 2);
  REQUIRE(eig.size() == 1);
  CHECK(eig.branches()[0].sub1.amplitudes() == e(2, 0).amplitudes());
  CHECK(std::get<StateVector>(eig.branches()[0].sub2).amplitudes() == e(2, 0).amplitudes());

  const double s = 1.0 / std::sqrt(2.0);
  const CorrelatedState pair = von_neumann_couple(hilbert::make_state(std::vector<Complex>{1.0, 1.0}), 0, 2);
  REQUIRE(pair.size() == 2);
  for (std::size_t n = 0; n < 2; ++n) {
    CHECK(std::abs(pair.branches()[n].coefficient - s) < 1e-15);
    CHECK(pair.branches()[n].sub1.amplitudes() == e(2, n).amplitudes());
    CHECK(std::get<StateVector>(pair.branches()[n].sub2).amplitudes() == e(2, n).amplitudes());
  }

  CHECK(code_of([] { von_neumann_couple(e(2, 0), 2, 2); }) == ErrorCode::kIndexOutOfRange);
  CHECK(code_of([] { von_neumann_couple(e(3, 0), 0, 2); }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("property: von Neumann coupling is linear, faithful and norm preserving") {
  oracle::Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + rng.index(3);
    const std::size_t pointer_dim = dim + rng.index(3);
    const std::size_t m0 = rng.index(pointer_dim);
    const StateVector obj(rng.unit_vector(dim));
    const CorrelatedState out = von_neumann_couple(obj, m0, pointer_dim);
    // Term-by-term image of sum_n c_n |n>|m0>.
    CVector expected = CVector::Zero(static_cast<Eigen::Index>(dim * pointer_dim));
    for (std::size_t n = 0; n < dim; ++n)
      expected[static_cast<Eigen::Index>(n * pointer_dim + (n + m0) % pointer_dim)] += obj[n];
    const StateVector flat = to_state_vector(out);
    CHECK((flat.amplitudes() - expected).norm() < 1e-14);
    CHECK(std::abs(flat.amplitudes().norm() - 1.0) < 1e-12);
    std::vector<std::size_t> pointers;
    for (const auto& b : out.branches()) {
      const CVector& p = std::get<StateVector>(b.sub2).amplitudes();
      Eigen::Index at = 0;
      p.cwiseAbs().maxCoeff(&at);
      pointers.push_back(static_cast<std::size_t>(at));
    }
    std::sort(pointers.begin(), pointers.end());
    CHECK(std::adjacent_find(pointers.begin(), pointers.end()) == pointers.end());
  }

  const StateVector obj = hilbert::make_state(std::vector<Complex>{0.6, 0.0, 0.8 * I});
  const CorrelatedState shifted = von_neumann_couple(obj, 1, 4);
  REQUIRE(shifted.size() == 2);
  CHECK(std::get<StateVector>(shifted.branches()[0].sub2).amplitudes() == e(4, 1).amplitudes());
  CHECK(std::get<StateVector>(shifted.branches()[1].sub2).amplitudes() == e(4, 3).amplitudes());
}

TEST_CASE("correlated state validation") {
  const GaussianPacket pk{0.0, 0.0, 1.0, 1.0};
  CHECK(code_of([] { CorrelatedState(std::vector<Branch>{}); }) == ErrorCode::kEmptyInput);
  CHECK(code_of([&] {
          CorrelatedState({Branch{0.5, e(2, 0), pk, std::nullopt}, Branch{0.5, e(2, 1), pk, std::nullopt}});
        }) == ErrorCode::kNotNormalized);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(code_of([&] {
          CorrelatedState({Branch{s, e(2, 0), pk, std::nullopt}, Branch{s, e(2, 0), pk, std::nullopt}});
        }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] {
          CorrelatedState({Branch{s, e(2, 0), pk, e(2, 0)}, Branch{s, e(2, 1), pk, std::nullopt}});
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("second-kind mixture examples") {
  const CorrelatedState one({Branch{1.0, e(2, 0), e(2, 1), e(3, 2)}});
  const SecondKindMixture m1 = second_kind_mixture(one);
  REQUIRE(m1.components.size() == 1);
  CHECK(m1.components[0].weight == 1.0);

  const CorrelatedState two({Branch{std::sqrt(0.8), e(2, 0), e(2, 0), e(2, 0)},
                             Branch{std::sqrt(0.2) * I, e(2, 1), e(2, 1), e(2, 1)}});
  const SecondKindMixture m2 = second_kind_mixture(two);
  CHECK(m2.components[0].weight == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(m2.components[1].weight == doctest::Approx(0.2).epsilon(1e-15));

  CHECK(code_of([] { second_kind_mixture(von_neumann_couple(e(2, 0), 0, 2)); }) ==
        ErrorCode::kMissingEnvironment);
}

TEST_CASE("property: second-kind mixture equals the environment partial trace") {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4;
    const CMatrix env = random_unitary(rng, n);
    const StateVector coeffs(rng.unit_vector(n));
    std::vector<Branch> branches;
    for (std::size_t k = 0; k < n; ++k)
      branches.push_back(Branch{coeffs[k], e(n, k), StateVector(rng.unit_vector(3)),
                                column(env, static_cast<Eigen::Index>(k))});
    const CorrelatedState state(branches);
    const CMatrix reduced = oracle::trace_out_last(to_state_vector(state).amplitudes(), n * 3, n);
    const SecondKindMixture mix = second_kind_mixture(state);
    CHECK((mix.density() - reduced).cwiseAbs().maxCoeff() < 1e-12);
    double total = 0.0;
    for (const auto& c : mix.components) total += c.weight;
    CHECK(std::abs(total - 1.0) < 1e-12);

    // Relabel the environment basis by permuting the branches.
    std::vector<Branch> shuffled = branches;
    std::rotate(shuffled.begin(), shuffled.begin() + 1 + static_cast<long>(rng.index(n - 1)), shuffled.end());
    const SecondKindMixture relabeled = second_kind_mixture(CorrelatedState(shuffled));
    std::vector<double> a, b;
    for (const auto& c : mix.components) a.push_back(c.weight);
    for (const auto& c : relabeled.components) b.push_back(c.weight);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK((relabeled.density() - mix.density()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Bose symmetrization examples") {
  const StateVector single(oracle::Rng(1).unit_vector(3));
  const CorrelatedState one = symmetrize_bose({single});
  REQUIRE(one.size() == 1);
  CHECK(one.branches()[0].sub1.amplitudes() == single.amplitudes());
  CHECK((to_state_vector(one).amplitudes() - single.amplitudes()).norm() < 1e-15);

  const CorrelatedState two = symmetrize_bose({e(2, 0), e(2, 1)});
  const double s = 1.0 / std::sqrt(2.0);
  const CVector expected = s * (product_basis({0, 1}, 2) + product_basis({1, 0}, 2));
  CHECK((to_state_vector(two).amplitudes() - expected).norm() < 1e-15);

  CHECK(code_of([] { symmetrize_bose(std::vector<StateVector>(7, e(7, 0))); }) == ErrorCode::kTooManyParticles);
  CHECK(code_of([] { symmetrize_bose({}); }) == ErrorCode::kEmptyInput);
  CHECK(code_of([] { symmetrize_bose({e(2, 0), e(3, 1)}); }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("Bose symmetrization enumerates every permutation") {
  for (int n = 2; n <= 4; ++n) {
    const auto dim = static_cast<std::size_t>(n);
    std::vector<StateVector> inputs;
    for (std::size_t k = 0; k < dim; ++k) inputs.push_back(e(dim, k));
    const auto perms = oracle::heap_permutations(n);
    const double fact = static_cast<double>(perms.size());
    CVector expected = CVector::Zero(static_cast<Eigen::Index>(std::pow(dim, dim)));
    for (const auto& p : perms) {
      std::vector<std::size_t> idx(p.begin(), p.end());
      expected += product_basis(idx, dim) / std::sqrt(fact);
    }
    const CorrelatedState sym = symmetrize_bose(inputs);
    CHECK(sym.size() == perms.size());
    for (const auto& b : sym.branches()) CHECK(std::abs(b.coefficient - 1.0 / std::sqrt(fact)) < 1e-15);
    const StateVector flat = to_state_vector(sym);
    CHECK((flat.amplitudes() - expected).norm() < 1e-13);
    CHECK(std::abs(flat.amplitudes().norm() - 1.0) < 1e-12);

    const ProductMixture decay = bose_decay_mixture(inputs);
    CHECK(decay.products.size() == perms.size());
    for (double w : decay.weights) CHECK(w == doctest::Approx(1.0 / fact).epsilon(1e-15));
    CVector seen = CVector::Zero(expected.size());
    for (const auto& prod : decay.products) seen += prod.amplitudes();
    CHECK((seen - std::sqrt(fact) * expected).norm() < 1e-12);
  }
}

TEST_CASE("property: Bose state is invariant under swapping two inputs") {
  oracle::Rng rng(88);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const CMatrix u = random_unitary(rng, n + 1);
    std::vector<StateVector> inputs;
    for (std::size_t k = 0; k < n; ++k) inputs.push_back(column(u, static_cast<Eigen::Index>(rng.index(n + 1))));
    const StateVector before = to_state_vector(symmetrize_bose(inputs));
    const std::size_t i = rng.index(n);
    const std::size_t j = (i + 1 + rng.index(n - 1)) % n;
    std::swap(inputs[i], inputs[j]);
    const StateVector after = to_state_vector(symmetrize_bose(inputs));
    CHECK((before.amplitudes() - after.amplitudes()).norm() < 1e-12);
  }
}

TEST_CASE("repeated Bose inputs carry multiplicity weights") {
  // |0,0,1> symmetrized: (|001> + |010> + |100>) / sqrt(3).
  const CorrelatedState sym = symmetrize_bose({e(2, 0), e(2, 0), e(2, 1)});
  const CVector expected =
      (product_basis({0, 0, 1}, 2) + product_basis({0, 1, 0}, 2) + product_basis({1, 0, 0}, 2)) / std::sqrt(3.0);
  CHECK((to_state_vector(sym).amplitudes() - expected).norm() < 1e-14);
}

TEST_CASE("Hamiltonian construction checks") {
  const OperatorMatrix zero(CMatrix::Zero(2, 2), {.hermitian = true});
  const OperatorMatrix sx((CMatrix(2, 2) << 0, 1, 1, 0).finished(), {.hermitian = true});
  const PositionFactor lin = PositionFactor::linear(-1.0);
  CHECK(code_of([&] { InteractionHamiltonian(sx, 1.0, spin_z(1.0), lin); }) == ErrorCode::kNonCommuting);
  CHECK(code_of([&] { InteractionHamiltonian(zero, 1.0, OperatorMatrix::identity(2), lin); }) ==
        ErrorCode::kDegenerateSpectrum);
  CHECK(code_of([&] { InteractionHamiltonian(zero, 0.0, spin_z(1.0), lin); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] {
          InteractionHamiltonian(zero, 1.0, OperatorMatrix((CMatrix(2, 2) << 0, 1, 0, 0).finished()), lin);
        }) == ErrorCode::kNonHermitian);
  CHECK(code_of([&] { InteractionHamiltonian(OperatorMatrix(CMatrix::Zero(3, 3), {.hermitian = true}), 1.0, spin_z(1.0), lin); }) ==
        ErrorCode::kDimensionMismatch);

  const InteractionHamiltonian h(OperatorMatrix::diagonal((RVector(2) << 2.0, 5.0).finished()), 1.0, spin_z(3.0), lin);
  CHECK(h.v1_eigenvalues()[0] == -3.0);
  CHECK(h.v1_eigenvalues()[1] == 3.0);
}

TEST_CASE("branch evolution examples") {
  const double mu = 1e-23, beta = 1e3, mass = 1e-25;
  const InteractionHamiltonian ham = linear_ham(mass, mu, beta);
  const GaussianPacket start{2e-9, 3e-27, 1e-9, mass};
  const GaussianPacket free = branch_evolve(ham, 0.0, start, 1e-7);
  CHECK(free.x0 == doctest::Approx(2e-9 + 3e-27 * 1e-7 / mass).epsilon(1e-14));
  CHECK(free.p0 == start.p0);

  const GaussianPacket rest{0.0, 0.0, 1e-9, mass};
  const GaussianPacket plus = branch_evolve(ham, mu, rest, 1e-7);
  CHECK(plus.x0 == doctest::Approx(mu * beta * 1e-14 / (2.0 * mass)).epsilon(1e-14));
  CHECK(plus.x0 == doctest::Approx(5e-10).epsilon(1e-14));
  CHECK(plus.p0 == doctest::Approx(mu * beta * 1e-7).epsilon(1e-14));
  CHECK(plus.sigma_x == rest.sigma_x);

  const InteractionHamiltonian bent(OperatorMatrix(CMatrix::Zero(2, 2), {.hermitian = true}), mass, spin_z(mu),
                                    PositionFactor::general([](double z) { return z * z; }, "z^2"));
  CHECK(code_of([&] { branch_evolve(bent, mu, rest, 1e-7); }) == ErrorCode::kNonlinearPotential);
  CHECK(code_of([&] { branch_evolve(ham, mu, rest, -1.0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { branch_evolve(ham, mu, GaussianPacket{0.0, 0.0, 1e-9, 2.0 * mass}, 1.0); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("property: branch evolution obeys Ehrenfest relations") {
  oracle::Rng rng(515);
  for (int trial = 0; trial < 100; ++trial) {
    const double mass = std::pow(10.0, rng.uniform(-27.0, -24.0));
    const double mu = rng.uniform(0.5, 2.0) * 1e-23;
    const double beta = rng.uniform(-2e3, 2e3);
    const InteractionHamiltonian ham = linear_ham(mass, mu, beta);
    const double v = (rng.uniform() < 0.5 ? -1.0 : 1.0) * mu;
    const GaussianPacket start{rng.uniform(-1e-9, 1e-9), rng.uniform(-1e-27, 1e-27), 1e-9, mass};
    const double t = rng.uniform(1e-8, 1e-6);
    const double h = 1e-4 * t;
    const double f = branch_force(ham, v);
    CHECK(f == doctest::Approx(v * beta).epsilon(1e-15));
    const GaussianPacket a = branch_evolve(ham, v, start, t - h);
    const GaussianPacket b = branch_evolve(ham, v, start, t + h);
    const GaussianPacket mid = branch_evolve(ham, v, start, t);
    const double dxdt = (b.x0 - a.x0) / (2.0 * h);
    const double dpdt = (b.p0 - a.p0) / (2.0 * h);
    const double xscale = std::abs(mid.p0 / mass) + std::abs(f * t / mass) + std::abs(start.p0 / mass);
    CHECK(std::abs(dxdt - mid.p0 / mass) < 1e-8 * xscale);
    CHECK(std::abs(dpdt - f) < 1e-8 * std::abs(f));
  }
}

TEST_CASE("branch evolution agrees with a grid Schrodinger solver") {
  const double mass = 1e-25, mu = 1e-23, beta = 1e3, sigma = 1e-9, t = 1e-7;
  const InteractionHamiltonian ham = linear_ham(mass, mu, beta);
  // The grid packet spreads about fifty-fold by t, so the box is wide.
  const Grid1D g(-4e-7, 4e-7, 16384);
  const GaussianPacket rest{0.0, 0.0, sigma, mass};
  std::vector<double> xs(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) xs[k] = g.x(k);
  for (const double v : {-mu, mu}) {
    const double f = branch_force(ham, v);
    const CVector psi = oracle::split_step(wavepacket::discretize_gaussian(g, rest).amplitudes(), xs, g.dx(), mass,
                                           kHbar, [=](double x) { return -f * x; }, t, 2000);
    double w = 0.0, mx = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double p = std::norm(psi[static_cast<Eigen::Index>(k)]);
      w += p;
      mx += p * xs[k];
    }
    const double grid_mean = mx / w;
    const GaussianPacket closed = branch_evolve(ham, v, rest, t);
    CHECK(std::abs(grid_mean - closed.x0) < 1e-3 * sigma);
  }
}

TEST_CASE("Schrodinger residual of a fixed-width packet matches its closed form") {
  const double mass = 1e-25, mu = 1e-23, beta = 1e3, sigma = 1e-9;
  const InteractionHamiltonian ham = linear_ham(mass, mu, beta);
  const Grid1D g(-16e-9, 16e-9, 2048);
  const CorrelatedState single({Branch{1.0, e(2, 1), GaussianPacket{0.0, 0.0, sigma, mass}, std::nullopt}});
  for (const double t : {1e-8, 5e-8, 2e-7}) {
    const double r = schrodinger_residual(ham, single, t, g);
    const double expected = oracle::fixed_width_residual(kHbar, mass, sigma, mu * beta, t);
    CHECK(std::abs(r - expected) < 1e-4 * expected);
  }
}

TEST_CASE("Schrodinger residual of the exact spreading solution is at solver tolerance") {
  const double mass = 1e-25, mu = 1e-23, beta = 1e3, sigma = 1e-9;
  const InteractionHamiltonian ham = linear_ham(mass, mu, beta);
  const Grid1D g(-16e-9, 16e-9, 2048);
  const Grid1D wide(-6e-8, 6e-8, 8192);
  const CorrelatedState single({Branch{1.0, e(2, 0), GaussianPacket{0.0, 0.0, sigma, mass}, std::nullopt}});
  for (const double t : {5e-10, 1e-9, 2e-9}) {
    CHECK(schrodinger_residual(ham, single, t, g, PacketEvolution::kSpreading) <= 1e-6);
    CHECK(schrodinger_residual(ham, single, t, wide, PacketEvolution::kSpreading) <= 1e-6);
  }

  const double s = 1.0 / std::sqrt(2.0);
  const CorrelatedState pair({Branch{s, e(2, 0), GaussianPacket{0.0, 0.0, sigma, mass}, std::nullopt},
                              Branch{s, e(2, 1), GaussianPacket{0.0, 0.0, sigma, mass}, std::nullopt}});
  CHECK(schrodinger_residual(ham, pair, 1e-9, wide, PacketEvolution::kSpreading) <= 1e-6);

  // What remains is the central-difference truncation: dt is tied to t, so it
  // grows as t^2 once the packet has spread, independent of grid or force.
  const double r1 = schrodinger_residual(ham, single, 1e-9, wide, PacketEvolution::kSpreading);
  const double r10 = schrodinger_residual(ham, single, 1e-8, wide, PacketEvolution::kSpreading);
  CHECK(r10 / r1 == doctest::Approx(100.0).epsilon(0.01));
}

TEST_CASE("Schrodinger residual input checks") {
  const InteractionHamiltonian ham = linear_ham(1e-25, 1e-23, 1e3);
  const Grid1D g(-16e-9, 16e-9, 2048);
  const CorrelatedState discrete = von_neumann_couple(e(2, 0), 0, 2);
  CHECK(code_of([&] { schrodinger_residual(ham, discrete, 1e-8, g); }) == ErrorCode::kInvalidArgument);
  const CorrelatedState wide({Branch{1.0, e(2, 0), GaussianPacket{0.0, 0.0, 4e-9, 1e-25}, std::nullopt}});
  CHECK(code_of([&] { schrodinger_residual(ham, wide, 1e-8, g); }) == ErrorCode::kPacketOutsideGrid);
  const InteractionHamiltonian bent(OperatorMatrix(CMatrix::Zero(2, 2), {.hermitian = true}), 1e-25, spin_z(1e-23),
                                    PositionFactor::general([](double z) { return z * z; }, "z^2"));
  const CorrelatedState single({Branch{1.0, e(2, 0), GaussianPacket{0.0, 0.0, 1e-9, 1e-25}, std::nullopt}});
  CHECK(code_of([&] { schrodinger_residual(bent, single, 1e-8, g); }) == ErrorCode::kNonlinearPotential);
}

TEST_CASE("correlated state JSON") {
  const CorrelatedState pair({Branch{std::sqrt(0.5), e(2, 0), GaussianPacket{-1.0, 0.0, 0.5, 2.0}, std::nullopt},
                              Branch{std::sqrt(0.5) * I, e(2, 1), GaussianPacket{1.0, 0.0, 0.5, 2.0}, std::nullopt}});
  const auto j = to_json(pair);
  REQUIRE(j["branches"].size() == 2);
  CHECK(j["branches"][1]["coefficient"][1].get<double>() == doctest::Approx(std::sqrt(0.5)));
  CHECK(j["branches"][0]["sub2_packet"]["x0"].get<double>() == -1.0);
  const auto v = to_json(von_neumann_couple(e(2, 1), 0, 2));
  CHECK(v["branches"][0]["sub2"]["re"].size() == 2);
}
