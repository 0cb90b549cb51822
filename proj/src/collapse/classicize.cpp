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

#include "collapse/classicize.hpp"

#include <vector>

#include "collapse/collapse.hpp"

namespace decolab::collapse {

Classicized classicize(const supersystem::CorrelatedState& correlated,
                       const OrderParameterTrace& trace, double t, std::uint64_t seed) {
  if (!trace.tau || t < *trace.tau) return ExactState{correlated};

  std::vector<double> weights;
  for (const auto& b : correlated.branches()) weights.push_back(std::norm(b.coefficient));
  const std::size_t k = select_branch(weights, uniform_from_seed(seed));
  supersystem::Branch kept = correlated.branches()[k];
  kept.coefficient = Complex(1.0, 0.0);
  return CollapsedProduct{k, weights[k], std::move(kept)};
}

}  // namespace decolab::collapse
