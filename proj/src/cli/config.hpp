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

/**
 * @file
 * Run configuration: scenario choice, typed parameters, seed, output
 * location and formats. Sources in decreasing precedence are command-line
 * flags, a flat "key = value" file, DECOLAB_SEED (seed only) and defaults.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hilbert/state.hpp"

namespace decolab::cli {

enum class Scenario { kSternGerlach, kBell, kBose, kClassicize, kWavepacketCheck };

std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> scenario_from_string(std::string_view name) noexcept;

enum class ParamType { kReal, kInteger, kBool, kRealList, kComplex };

struct ParamSpec {
  std::string key;  // underscore form; "--" + dashed form on the command line
  ParamType type;
  bool required;
  std::string help;
};

/// Accepted parameters for a scenario.
const std::vector<ParamSpec>& scenario_schema(Scenario s);

using ParamValue = std::variant<double, std::int64_t, bool, std::vector<double>, Complex>;

struct RunConfig {
  Scenario scenario = Scenario::kSternGerlach;
  std::map<std::string, ParamValue> params;  // only keys that were given
  std::uint64_t seed = 42;
  std::string output_dir = ".";
  bool write_json = true;
  bool write_csv = true;
  bool paper_constants = false;

  double real(const std::string& key, double fallback) const;
  std::int64_t integer(const std::string& key, std::int64_t fallback) const;
  bool flag(const std::string& key, bool fallback) const;
  std::vector<double> real_list(const std::string& key, std::vector<double> fallback) const;
  Complex complex(const std::string& key, Complex fallback) const;
};

/**
 * Parses argv (argv[0] is the program name). Throws decolab::Error with
 * UnknownKey, TypeMismatch, MissingRequired, Usage, IoError for an unreadable
 * config file, or HelpRequested carrying the usage text.
 */
RunConfig parse_config(const std::vector<std::string>& argv);

/// Parses one value of the given type; throws TypeMismatch naming the key.
ParamValue parse_value(const std::string& key, ParamType type, std::string_view text);

/// Usage text for the command line.
std::string usage();

}  // namespace decolab::cli
