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

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cli/config.hpp"
#include "common/table.hpp"

namespace decolab::cli {

struct ScenarioResult {
  Scenario scenario = Scenario::kSternGerlach;
  nlohmann::ordered_json summary;
  std::vector<std::pair<std::string, Table>> traces;  // written as <scenario>_<name>.csv
  /// Extra JSON or JSON-lines documents, keyed by file name.
  std::vector<std::pair<std::string, std::string>> documents;
  nlohmann::ordered_json provenance;  // constants version, seed, config echo
};

/// Dispatches to the scenario. Deterministic for a fixed config.
ScenarioResult run(const RunConfig& config);

/// The summary.json document: scenario, summary, provenance. No timestamps.
std::string summary_json(const ScenarioResult& result);

/// Writes summary.json always, CSV traces when selected and the extra
/// documents when JSON is selected. Existing files are overwritten. Throws
/// IoError naming the path.
std::vector<std::string> emit(const ScenarioResult& result, const RunConfig& config);

}  // namespace decolab::cli
