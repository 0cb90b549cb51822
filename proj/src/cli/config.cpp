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

#include "cli/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "common/error.hpp"

namespace decolab::cli {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 5> kScenarioNames{{
    {Scenario::kSternGerlach, "sterngerlach"},
    {Scenario::kBell, "bell"},
    {Scenario::kBose, "bose"},
    {Scenario::kClassicize, "classicize"},
    {Scenario::kWavepacketCheck, "wavepacket-check"},
}};

std::string dashed(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

std::string underscored(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void type_mismatch(const std::string& key, std::string_view text, std::string_view want) {
  fail(ErrorCode::kTypeMismatch,
       "value '" + std::string(text) + "' for key '" + key + "' is not " + std::string(want));
}

double parse_real(const std::string& key, std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) type_mismatch(key, text, "a real number");
  return v;
}

std::uint64_t parse_seed(const std::string& key, std::string_view text) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    type_mismatch(key, text, "an unsigned 64-bit integer");
  return v;
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

struct GlobalKeys {
  std::optional<std::string> seed;
  std::optional<std::string> out;
  std::optional<std::string> formats;
  std::optional<bool> paper_constants;
};

void apply_formats(RunConfig& config, const std::string& text) {
  config.write_json = false;
  config.write_csv = false;
  for (const auto& f : split_commas(text)) {
    if (f == "json") {
      config.write_json = true;
    } else if (f == "csv") {
      config.write_csv = true;
    } else {
      type_mismatch("formats", text, "a subset of {json, csv}");
    }
  }
}

const ParamSpec* find_spec(Scenario s, const std::string& key) {
  for (const auto& spec : scenario_schema(s))
    if (spec.key == key) return &spec;
  return nullptr;
}

// Reads "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIoError, "cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    require(eq != std::string::npos, ErrorCode::kUsage,
            path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    out[underscored(trim(body.substr(0, eq)))] = trim(body.substr(eq + 1));
  }
  return out;
}

struct Parser {
  CLI::App app{"Quantum measurement as a phase transition: numerical laboratory.", "decoherence-lab"};
  std::string config_path;
  std::string seed;
  std::string out;
  std::string formats;
  bool paper_constants = false;
  std::map<Scenario, CLI::App*> subcommands;
  std::map<Scenario, std::map<std::string, std::string>> flag_text;
  std::map<Scenario, std::map<std::string, CLI::Option*>> flag_options;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* formats_opt = nullptr;
  CLI::Option* config_opt = nullptr;

  Parser() {
    app.require_subcommand(1);
    config_opt = app.add_option("--config", config_path, "flat key = value file");
    seed_opt = app.add_option("--seed", seed, "64-bit RNG seed (default 42, or DECOLAB_SEED)");
    out_opt = app.add_option("--out", out, "output directory (default .)");
    formats_opt = app.add_option("--formats", formats, "comma list from {json,csv} (default both)");
    app.add_flag("--paper-constants", paper_constants, "use the round constants instead of CODATA");
    for (const auto& [s, name] : kScenarioNames) {
      CLI::App* sub = app.add_subcommand(std::string(name), "run the " + std::string(name) + " scenario");
      sub->fallthrough();
      subcommands[s] = sub;
      for (const auto& spec : scenario_schema(s)) {
        std::string& slot = flag_text[s][spec.key];
        flag_options[s][spec.key] = sub->add_option("--" + dashed(spec.key), slot, spec.help);
      }
    }
  }
};

}  // namespace

std::string_view to_string(Scenario s) noexcept {
  for (const auto& [value, name] : kScenarioNames)
    if (value == s) return name;
  return "unknown";
}

std::optional<Scenario> scenario_from_string(std::string_view name) noexcept {
  for (const auto& [value, n] : kScenarioNames)
    if (n == name) return value;
  return std::nullopt;
}

const std::vector<ParamSpec>& scenario_schema(Scenario s) {
  using T = ParamType;
  static const std::vector<ParamSpec> sg{
      {"beta_z", T::kReal, false, "field gradient, T/m (default 1e3)"},
      {"mass", T::kReal, false, "atom mass, kg (default 1.79e-25, or 1e-25 with --paper-constants)"},
      {"mu_b", T::kReal, false, "Bohr magneton, J/T (default from the constants table)"},
      {"delta_z", T::kReal, false, "critical width, m (default 1e-9)"},
      {"sigma0", T::kReal, false, "initial packet width, m (default delta_z)"},
      {"c_minus", T::kComplex, false, "spin-down amplitude 're' or 're,im' (default 1/sqrt2)"},
      {"c_plus", T::kComplex, false, "spin-up amplitude 're' or 're,im' (default 1/sqrt2)"},
      {"t_max", T::kReal, false, "trace end, s (default 3e-7)"},
      {"n_steps", T::kInteger, false, "trace steps (default 1000)"},
      {"n_trials", T::kInteger, false, "collapse trials (default 10000)"},
      {"grid_min", T::kReal, false, "grid start, m (default -16e-9)"},
      {"grid_max", T::kReal, false, "grid end, m (default 16e-9)"},
      {"grid_points", T::kInteger, false, "grid points (default 2048)"},
      {"spreading", T::kBool, false, "let packets spread freely (default false)"},
  };
  static const std::vector<ParamSpec> bell{
      {"n_configs", T::kInteger, false, "random compliant configurations (default 20)"},
      {"separation", T::kReal, false, "packet separation in units of sigma (default 16)"},
      {"grid_points", T::kInteger, false, "grid points (default 1024)"},
      {"sign", T::kInteger, false, "+1 or -1 in the bound (default 1)"},
  };
  static const std::vector<ParamSpec> bose{
      {"mass", T::kReal, false, "particle mass, kg (default 1.443e-25, Rb-87)"},
      {"spacing", T::kReal, false, "interparticle spacing, m (default 2e-7)"},
      {"temps", T::kRealList, true, "comma-separated temperatures, K"},
  };
  static const std::vector<ParamSpec> classicize{
      {"coefficients", T::kRealList, true, "branch amplitudes, normalized on input"},
      {"eps", T::kReal, false, "W transform strength (default pi)"},
      {"speed", T::kReal, false, "pointer drift per branch index (default 1)"},
      {"sigma", T::kReal, false, "pointer packet width (default 1)"},
      {"t_max", T::kReal, false, "trace end (default 4)"},
      {"n_steps", T::kInteger, false, "trace steps (default 400)"},
      {"t", T::kReal, false, "classicization time (default t_max)"},
      {"n_trials", T::kInteger, false, "collapse trials (default 1000)"},
  };
  static const std::vector<ParamSpec> packet{
      {"n_packets", T::kInteger, false, "number of packets, 2 or 3 (default 2)"},
      {"separation", T::kReal, false, "packet spacing in units of sigma (default 8)"},
      {"coefficients", T::kRealList, false, "superposition amplitudes (default equal)"},
      {"grid_points", T::kInteger, false, "grid points (default 4096)"},
  };
  switch (s) {
    case Scenario::kSternGerlach: return sg;
    case Scenario::kBell: return bell;
    case Scenario::kBose: return bose;
    case Scenario::kClassicize: return classicize;
    case Scenario::kWavepacketCheck: return packet;
  }
  return sg;
}

ParamValue parse_value(const std::string& key, ParamType type, std::string_view text) {
  switch (type) {
    case ParamType::kReal:
      return parse_real(key, text);
    case ParamType::kInteger: {
      const std::string t = trim(text);
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) type_mismatch(key, text, "an integer");
      return v;
    }
    case ParamType::kBool: {
      const std::string t = trim(text);
      if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
      if (t == "false" || t == "0" || t == "no" || t == "off") return false;
      type_mismatch(key, text, "a boolean");
    }
    case ParamType::kRealList: {
      std::vector<double> values;
      for (const auto& part : split_commas(text)) values.push_back(parse_real(key, part));
      return values;
    }
    case ParamType::kComplex: {
      const auto parts = split_commas(text);
      if (parts.size() == 1) return Complex(parse_real(key, parts[0]), 0.0);
      if (parts.size() == 2) return Complex(parse_real(key, parts[0]), parse_real(key, parts[1]));
      type_mismatch(key, text, "'re' or 're,im'");
    }
  }
  fail(ErrorCode::kInternal, "unhandled parameter type");
}

double RunConfig::real(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : std::get<double>(it->second);
}

std::int64_t RunConfig::integer(const std::string& key, std::int64_t fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : std::get<std::int64_t>(it->second);
}

bool RunConfig::flag(const std::string& key, bool fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : std::get<bool>(it->second);
}

std::vector<double> RunConfig::real_list(const std::string& key, std::vector<double> fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? std::move(fallback) : std::get<std::vector<double>>(it->second);
}

Complex RunConfig::complex(const std::string& key, Complex fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : std::get<Complex>(it->second);
}

std::string usage() {
  Parser p;
  return p.app.help();
}

RunConfig parse_config(const std::vector<std::string>& argv) {
  auto parser = std::make_unique<Parser>();
  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' && !scenario_from_string(args.front()))
    fail(ErrorCode::kUsage, "unknown scenario '" + args.front() +
                                "' (expected sterngerlach, bell, bose, classicize or wavepacket-check)");
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  try {
    parser->app.parse(args);
  } catch (const CLI::CallForHelp&) {
    fail(ErrorCode::kHelpRequested, parser->app.help());
  } catch (const CLI::CallForAllHelp&) {
    fail(ErrorCode::kHelpRequested, parser->app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ExtrasError& e) {
    fail(ErrorCode::kUnknownKey, std::string("unknown key or argument: ") + e.what());
  } catch (const CLI::RequiredError& e) {
    if (std::none_of(parser->subcommands.begin(), parser->subcommands.end(),
                     [](const auto& entry) { return entry.second->parsed(); }))
      fail(ErrorCode::kMissingRequired, "a scenario is required: " + std::string(e.what()));
    fail(ErrorCode::kMissingRequired, e.what());
  } catch (const CLI::ConversionError& e) {
    fail(ErrorCode::kTypeMismatch, e.what());
  } catch (const CLI::ParseError& e) {
    fail(ErrorCode::kUsage, e.what());
  }

  RunConfig config;
  for (const auto& [s, sub] : parser->subcommands)
    if (sub->parsed()) config.scenario = s;

  // Lowest layer above defaults: environment seed, then file, then flags.
  if (const char* env = std::getenv("DECOLAB_SEED"); env != nullptr && *env != '\0')
    config.seed = parse_seed("DECOLAB_SEED", env);

  std::map<std::string, std::string> merged;
  if (parser->config_opt->count() > 0) {
    for (const auto& [key, value] : read_config_file(parser->config_path)) {
      if (key == "seed" || key == "out" || key == "formats" || key == "paper_constants") {
        merged[key] = value;
        continue;
      }
      require(find_spec(config.scenario, key) != nullptr, ErrorCode::kUnknownKey,
              "unknown key '" + key + "' in " + parser->config_path + " for scenario " +
                  std::string(to_string(config.scenario)));
      merged[key] = value;
    }
  }
  for (const auto& [key, opt] : parser->flag_options[config.scenario])
    if (opt->count() > 0) merged[key] = parser->flag_text[config.scenario][key];
  if (parser->seed_opt->count() > 0) merged["seed"] = parser->seed;
  if (parser->out_opt->count() > 0) merged["out"] = parser->out;
  if (parser->formats_opt->count() > 0) merged["formats"] = parser->formats;

  for (const auto& [key, value] : merged) {
    if (key == "seed") {
      config.seed = parse_seed("seed", value);
    } else if (key == "out") {
      config.output_dir = value;
    } else if (key == "formats") {
      apply_formats(config, value);
    } else if (key == "paper_constants") {
      config.paper_constants = std::get<bool>(parse_value(key, ParamType::kBool, value));
    } else {
      config.params[key] = parse_value(key, find_spec(config.scenario, key)->type, value);
    }
  }
  if (parser->paper_constants) config.paper_constants = true;

  for (const auto& spec : scenario_schema(config.scenario))
    require(!spec.required || config.params.count(spec.key) > 0, ErrorCode::kMissingRequired,
            "missing required key '" + spec.key + "' for scenario " +
                std::string(to_string(config.scenario)));
  return config;
}

}  // namespace decolab::cli
