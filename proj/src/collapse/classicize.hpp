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
#include <cstdint>
#include <variant>

#include "collapse/order_parameter.hpp"
#include "supersystem/correlated.hpp"

namespace decolab::collapse {

/// The exact state, returned untouched: before the transition nothing breaks.
struct ExactState {
  supersystem::CorrelatedState state;
};

/// One branch kept with unit coefficient, chosen with probability prior.
struct CollapsedProduct {
  std::size_t branch_index;
  double prior;
  supersystem::Branch product;
};

using Classicized = std::variant<ExactState, CollapsedProduct>;

/// Returns the input unchanged when the trace has no transition time or
/// t < tau, otherwise a branch sampled with weight |c_n|^2 (t == tau collapses).
Classicized classicize(const supersystem::CorrelatedState& correlated,
                       const OrderParameterTrace& trace, double t, std::uint64_t seed);

}  // namespace decolab::collapse
