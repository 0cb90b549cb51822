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

#include "collapse/order_parameter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "common/error.hpp"

namespace decolab::collapse {

using wavepacket::GaussianPacket;

Table OrderParameterTrace::to_table() const {
  Table table;
  table.columns.push_back("t");
  if (pairs.size() == 1) {
    table.columns.push_back("gap");
    table.columns.push_back("critical");
  } else {
    for (const auto& [n, m] : pairs)
      table.columns.push_back("gap_" + std::to_string(n) + "_" + std::to_string(m));
    for (const auto& [n, m] : pairs)
      table.columns.push_back("critical_" + std::to_string(n) + "_" + std::to_string(m));
  }
  for (std::size_t k = 0; k < times.size(); ++k) {
    std::vector<double> row{times[k]};
    for (const auto& g : gap) row.push_back(g[k]);
    for (const auto& c : critical) row.push_back(c[k]);
    table.add_row(std::move(row));
  }
  return table;
}

std::optional<double> first_crossing(std::span<const double> times, std::span<const double> gap,
                                     std::span<const double> critical) {
  require(!times.empty(), ErrorCode::kEmptyTimes, "no sample times");
  require(gap.size() == times.size() && critical.size() == times.size(),
          ErrorCode::kDimensionMismatch, "series lengths differ from the time grid");
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double h = gap[k] - critical[k];
    if (h < 0.0) continue;
    if (k == 0) return times[0];
    const double h_prev = gap[k - 1] - critical[k - 1];
    const double frac = -h_prev / (h - h_prev);
    return times[k - 1] + frac * (times[k] - times[k - 1]);
  }
  return std::nullopt;
}

OrderParameterTrace order_parameter_trace(std::span<const BranchTrajectory> branches,
                                          TraceObservable observable,
                                          std::span<const double> times) {
  require(!times.empty(), ErrorCode::kEmptyTimes, "no sample times");
  require(branches.size() >= 2, ErrorCode::kInvalidArgument, "a trace needs at least two branches");
  require(times[0] >= 0.0, ErrorCode::kInvalidArgument, "sample times must start at or after zero");
  for (std::size_t k = 1; k < times.size(); ++k)
    require(times[k] > times[k - 1], ErrorCode::kInvalidArgument,
            "sample times must be strictly increasing");

  const std::size_t nb = branches.size();
  const std::size_t nt = times.size();
  std::vector<std::vector<double>> mean(nb, std::vector<double>(nt));
  std::vector<std::vector<double>> spread(nb, std::vector<double>(nt));
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t k = 0; k < nt; ++k) {
      const GaussianPacket p = branches[b](times[k]);
      p.validate();
      if (observable == TraceObservable::kPosition) {
        mean[b][k] = p.x0;
        spread[b][k] = p.sigma_x;
      } else {
        mean[b][k] = p.p0;
        spread[b][k] = p.momentum_spread();
      }
    }
  }

  OrderParameterTrace trace;
  trace.times.assign(times.begin(), times.end());
  bool all_cross = true;
  double tau = 0.0;
  for (std::size_t n = 0; n < nb; ++n) {
    for (std::size_t m = n + 1; m < nb; ++m) {
      std::vector<double> gap(nt);
      std::vector<double> crit(nt);
      for (std::size_t k = 0; k < nt; ++k) {
        gap[k] = std::abs(mean[n][k] - mean[m][k]);
        crit[k] = 0.5 * (spread[n][k] + spread[m][k]);
      }
      const auto crossing = first_crossing(trace.times, gap, crit);
      if (crossing) {
        tau = std::max(tau, *crossing);
      } else {
        all_cross = false;
      }
      trace.pairs.emplace_back(n, m);
      trace.gap.push_back(std::move(gap));
      trace.critical.push_back(std::move(crit));
      trace.tau_pair.push_back(crossing);
    }
  }
  if (all_cross) trace.tau = tau;
  return trace;
}

}  // namespace decolab::collapse
