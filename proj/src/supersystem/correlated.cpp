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

#include "supersystem/correlated.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "common/error.hpp"
#include "hilbert/algebra.hpp"

namespace decolab::supersystem {

using Eigen::Index;

namespace {

void require_pairwise_orthogonal(const std::vector<const StateVector*>& states, const char* what) {
  const std::size_t dim = states.front()->dim();
  for (const auto* s : states)
    require(s->dim() == dim, ErrorCode::kDimensionMismatch,
            std::string(what) + " states differ in dimension");
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = a + 1; b < states.size(); ++b)
      require(std::abs(hilbert::inner(*states[a], *states[b])) < kOrthoTol,
              ErrorCode::kInvalidArgument, std::string(what) + " states are not orthogonal");
}

bool same_packet(const GaussianPacket& a, const GaussianPacket& b) {
  return a.x0 == b.x0 && a.p0 == b.p0 && a.sigma_x == b.sigma_x && a.mass == b.mass;
}

bool same_sub2(const SubTwo& a, const SubTwo& b) {
  if (a.index() != b.index()) return false;
  if (const auto* sa = std::get_if<StateVector>(&a)) return *sa == std::get<StateVector>(b);
  return same_packet(std::get<GaussianPacket>(a), std::get<GaussianPacket>(b));
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void validate_bosons(const std::vector<StateVector>& states) {
  require(!states.empty(), ErrorCode::kEmptyInput, "no single-particle states given");
  require(states.size() <= kMaxBosons, ErrorCode::kTooManyParticles,
          "symmetrization is limited to " + std::to_string(kMaxBosons) + " particles");
  const std::size_t dim = states.front().dim();
  for (std::size_t a = 0; a < states.size(); ++a) {
    require(states[a].dim() == dim, ErrorCode::kDimensionMismatch,
            "single-particle states differ in dimension");
    for (std::size_t b = a + 1; b < states.size(); ++b) {
      const bool equal = (states[a].amplitudes() - states[b].amplitudes()).norm() < kOrthoTol;
      const bool orthogonal = std::abs(hilbert::inner(states[a], states[b])) < kOrthoTol;
      require(equal || orthogonal, ErrorCode::kInvalidArgument,
              "single-particle states must be drawn from one orthonormal set");
    }
  }
}

// Product of the inputs taken in permutation order, split as
// (first n-1 factors, last factor).
std::pair<StateVector, StateVector> permuted_product(const std::vector<StateVector>& states,
                                                     const std::vector<std::size_t>& perm) {
  if (perm.size() == 1) {
    return {states[perm[0]], StateVector::basis(1, 0, "trivial")};
  }
  StateVector head = states[perm[0]];
  for (std::size_t k = 1; k + 1 < perm.size(); ++k) head = hilbert::tensor(head, states[perm[k]]);
  return {head, states[perm.back()]};
}

}  // namespace

CorrelatedState::CorrelatedState(std::vector<Branch> branches) : branches_(std::move(branches)) {
  require(!branches_.empty(), ErrorCode::kEmptyInput, "a correlated state needs a branch");
  double total = 0.0;
  for (const auto& b : branches_) total += std::norm(b.coefficient);
  require(std::abs(total - 1.0) <= kNormTol, ErrorCode::kNotNormalized,
          "branch weights do not sum to one");

  std::vector<const StateVector*> sub1;
  for (const auto& b : branches_) sub1.push_back(&b.sub1);
  require_pairwise_orthogonal(sub1, "sub1");

  const bool env = branches_.front().sub_env.has_value();
  std::vector<const StateVector*> envs;
  for (const auto& b : branches_) {
    require(b.sub_env.has_value() == env, ErrorCode::kInvalidArgument,
            "environment factor must be present on every branch or on none");
    if (env) envs.push_back(&*b.sub_env);
  }
  if (env) require_pairwise_orthogonal(envs, "environment");

  const std::size_t sub2_dim =
      std::holds_alternative<StateVector>(branches_.front().sub2)
          ? std::get<StateVector>(branches_.front().sub2).dim()
          : 0;
  for (const auto& b : branches_) {
    const auto* s = std::get_if<StateVector>(&b.sub2);
    require((s != nullptr) == (sub2_dim != 0), ErrorCode::kInvalidArgument,
            "sub2 must be a vector on every branch or a packet on every branch");
    if (s != nullptr)
      require(s->dim() == sub2_dim, ErrorCode::kDimensionMismatch, "sub2 states differ in dimension");
    else
      std::get<GaussianPacket>(b.sub2).validate();
  }
}

bool CorrelatedState::discrete_sub2() const noexcept {
  return std::holds_alternative<StateVector>(branches_.front().sub2);
}

bool operator==(const CorrelatedState& a, const CorrelatedState& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const Branch& x = a.branches_[n];
    const Branch& y = b.branches_[n];
    if (x.coefficient != y.coefficient || !(x.sub1 == y.sub1) || !same_sub2(x.sub2, y.sub2) ||
        x.sub_env.has_value() != y.sub_env.has_value())
      return false;
    if (x.sub_env && !(*x.sub_env == *y.sub_env)) return false;
  }
  return true;
}

StateVector to_state_vector(const CorrelatedState& state) {
  require(state.discrete_sub2(), ErrorCode::kInvalidArgument,
          "packet-valued branches need a grid to be flattened");
  CVector sum;
  for (const auto& b : state.branches()) {
    StateVector product = hilbert::tensor(b.sub1, std::get<StateVector>(b.sub2));
    if (b.sub_env) product = hilbert::tensor(product, *b.sub_env);
    if (sum.size() == 0) sum = CVector::Zero(product.amplitudes().size());
    sum += b.coefficient * product.amplitudes();
  }
  return StateVector(std::move(sum), "correlated");
}

CorrelatedState von_neumann_couple(const StateVector& object_state, std::size_t pointer_index,
                                   std::size_t pointer_dim) {
  require(pointer_index < pointer_dim, ErrorCode::kIndexOutOfRange,
          "pointer index must be below the pointer dimension");
  require(pointer_dim >= object_state.dim(), ErrorCode::kDimensionMismatch,
          "pointer dimension is smaller than the object dimension");
  std::vector<Branch> branches;
  for (std::size_t n = 0; n < object_state.dim(); ++n) {
    const Complex c = object_state[n];
    if (c == Complex(0.0, 0.0)) continue;
    branches.push_back(Branch{c, StateVector::basis(object_state.dim(), n, "object"),
                              StateVector::basis(pointer_dim, (n + pointer_index) % pointer_dim,
                                                 "pointer"),
                              std::nullopt});
  }
  return CorrelatedState(std::move(branches));
}

CMatrix SecondKindMixture::density() const {
  require(!components.empty(), ErrorCode::kEmptyInput, "empty mixture");
  CMatrix rho;
  for (const auto& c : components) {
    const CMatrix term = c.weight * hilbert::kron(c.sub1_projector, c.sub2_projector).dense();
    if (rho.size() == 0) rho = CMatrix::Zero(term.rows(), term.cols());
    rho += term;
  }
  return rho;
}

SecondKindMixture second_kind_mixture(const CorrelatedState& state) {
  require(state.has_environment(), ErrorCode::kMissingEnvironment,
          "a mixture of the second kind needs an environment factor on every branch");
  require(state.discrete_sub2(), ErrorCode::kInvalidArgument,
          "mixture components need vector-valued sub2 states");
  SecondKindMixture mix;
  for (const auto& b : state.branches())
    mix.components.push_back(MixtureComponent{std::norm(b.coefficient), hilbert::projector(b.sub1),
                                              hilbert::projector(std::get<StateVector>(b.sub2))});
  return mix;
}

CorrelatedState symmetrize_bose(const std::vector<StateVector>& states) {
  validate_bosons(states);
  std::vector<std::size_t> perm(states.size());
  std::iota(perm.begin(), perm.end(), 0);

  struct Term {
    StateVector head;
    StateVector tail;
    CVector product;
    double count;
  };
  std::vector<Term> terms;
  do {
    auto [head, tail] = permuted_product(states, perm);
    CVector product = hilbert::tensor(head, tail).amplitudes();
    auto same = std::find_if(terms.begin(), terms.end(), [&](const Term& t) {
      return (t.product - product).norm() < kOrthoTol;
    });
    if (same != terms.end()) {
      same->count += 1.0;
    } else {
      terms.push_back(Term{std::move(head), std::move(tail), std::move(product), 1.0});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  double norm2 = 0.0;
  for (const auto& t : terms) norm2 += t.count * t.count;
  const double scale = 1.0 / std::sqrt(norm2);
  std::vector<Branch> branches;
  for (auto& t : terms)
    branches.push_back(Branch{Complex(t.count * scale, 0.0), std::move(t.head), std::move(t.tail),
                              std::nullopt});
  return CorrelatedState(std::move(branches));
}

ProductMixture bose_decay_mixture(const std::vector<StateVector>& states) {
  validate_bosons(states);
  std::vector<std::size_t> perm(states.size());
  std::iota(perm.begin(), perm.end(), 0);
  ProductMixture mix;
  const double w = 1.0 / static_cast<double>(factorial(states.size()));
  do {
    auto [head, tail] = permuted_product(states, perm);
    mix.weights.push_back(w);
    mix.products.push_back(perm.size() == 1 ? head : hilbert::tensor(head, tail));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return mix;
}

nlohmann::ordered_json to_json(const StateVector& state) {
  nlohmann::ordered_json re = nlohmann::ordered_json::array();
  nlohmann::ordered_json im = nlohmann::ordered_json::array();
  for (Index k = 0; k < state.amplitudes().size(); ++k) {
    re.push_back(state.amplitudes()[k].real());
    im.push_back(state.amplitudes()[k].imag());
  }
  nlohmann::ordered_json j;
  j["basis"] = state.basis_label();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

nlohmann::ordered_json to_json(const GaussianPacket& packet) {
  nlohmann::ordered_json j;
  j["x0"] = packet.x0;
  j["p0"] = packet.p0;
  j["sigma_x"] = packet.sigma_x;
  j["mass"] = packet.mass;
  return j;
}

nlohmann::ordered_json to_json(const CorrelatedState& state) {
  nlohmann::ordered_json branches = nlohmann::ordered_json::array();
  for (const auto& b : state.branches()) {
    nlohmann::ordered_json j;
    j["coefficient"] = {b.coefficient.real(), b.coefficient.imag()};
    j["sub1"] = to_json(b.sub1);
    if (const auto* s = std::get_if<StateVector>(&b.sub2)) {
      j["sub2"] = to_json(*s);
    } else {
      j["sub2_packet"] = to_json(std::get<GaussianPacket>(b.sub2));
    }
    if (b.sub_env) j["environment"] = to_json(*b.sub_env);
    branches.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["branches"] = std::move(branches);
  return out;
}

}  // namespace decolab::supersystem
