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

#include "decolab/decolab.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/run.hpp"
#include "collapse/collapse.hpp"
#include "common/constants.hpp"
#include "common/error.hpp"
#include "hilbert/algebra.hpp"
#include "scenarios/bose.hpp"
#include "scenarios/sterngerlach.hpp"

struct dl_config {
  decolab::cli::RunConfig value;
};

struct dl_result {
  decolab::cli::ScenarioResult value;
};

struct dl_state {
  decolab::hilbert::StateVector value;
};

namespace {

using decolab::ErrorCode;

thread_local std::string g_last_error;

// The C enum mirrors ErrorCode one to one.
static_assert(DL_ERR_INTERNAL == static_cast<int>(ErrorCode::kInternal));
static_assert(DL_HELP_REQUESTED == static_cast<int>(ErrorCode::kHelpRequested));

dl_status set_error(ErrorCode code, const std::string& message) {
  g_last_error = message;
  return static_cast<dl_status>(code);
}

template <typename F>
dl_status guarded(F&& body) {
  try {
    body();
    return DL_OK;
  } catch (const decolab::Error& e) {
    return set_error(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ErrorCode::kInternal, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ErrorCode::kInternal, e.what());
  } catch (...) {
    return set_error(ErrorCode::kInternal, "unknown failure");
  }
}

void require_arg(bool ok, const char* what) {
  decolab::require(ok, ErrorCode::kInvalidArgument, what);
}

const decolab::PhysicalConstants& table(int paper_constants) {
  return paper_constants != 0 ? decolab::kPaperRound : decolab::kCodata;
}

}  // namespace

extern "C" {

const char* dl_version(void) { return DECOLAB_VERSION; }

const char* dl_last_error(void) { return g_last_error.c_str(); }

int dl_exit_code(dl_status status) {
  switch (static_cast<ErrorCode>(status)) {
    case ErrorCode::kOk:
    case ErrorCode::kHelpRequested:
      return 0;
    case ErrorCode::kUnknownKey:
    case ErrorCode::kTypeMismatch:
    case ErrorCode::kMissingRequired:
    case ErrorCode::kUsage:
      return 2;
    default:
      return 1;
  }
}

dl_status dl_config_parse(int argc, const char* const* argv, dl_config** out) {
  return guarded([&] {
    require_arg(out != nullptr && argc >= 0 && (argc == 0 || argv != nullptr), "null argument");
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) {
      require_arg(argv[i] != nullptr, "null argv entry");
      args.emplace_back(argv[i]);
    }
    *out = new dl_config{decolab::cli::parse_config(args)};
  });
}

void dl_config_free(dl_config* config) { delete config; }

dl_status dl_run(const dl_config* config, dl_result** out) {
  return guarded([&] {
    require_arg(config != nullptr && out != nullptr, "null argument");
    *out = new dl_result{decolab::cli::run(config->value)};
  });
}

void dl_result_free(dl_result* result) { delete result; }

dl_status dl_result_emit(const dl_result* result, const dl_config* config) {
  return guarded([&] {
    require_arg(result != nullptr && config != nullptr, "null argument");
    decolab::cli::emit(result->value, config->value);
  });
}

dl_status dl_result_summary_json(const dl_result* result, char** out) {
  return guarded([&] {
    require_arg(result != nullptr && out != nullptr, "null argument");
    const std::string s = decolab::cli::summary_json(result->value);
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void dl_string_free(char* s) { delete[] s; }

dl_status dl_sg_critical_time(double delta_z, double mass, double mu_b, double beta_z, double* out_seconds) {
  return guarded([&] {
    require_arg(out_seconds != nullptr, "null argument");
    decolab::scenarios::SGConfig c;
    c.delta_z = delta_z;
    c.mass = mass;
    c.mu_b = mu_b;
    c.beta_z = beta_z;
    *out_seconds = decolab::scenarios::sg_critical_time(c);
  });
}

dl_status dl_thermal_de_broglie(double mass, double temperature, int paper_constants, double* out_meters) {
  return guarded([&] {
    require_arg(out_meters != nullptr, "null argument");
    *out_meters = decolab::scenarios::thermal_de_broglie(mass, temperature, table(paper_constants));
  });
}

dl_status dl_bose_critical_temperature(double mass, double spacing, int paper_constants, double* out_kelvin) {
  return guarded([&] {
    require_arg(out_kelvin != nullptr, "null argument");
    decolab::scenarios::BoseConfig c;
    c.mass = mass;
    c.spacing = spacing;
    *out_kelvin = decolab::scenarios::bose_critical_temperature(c, table(paper_constants)).t_c;
  });
}

dl_status dl_state_new(const double* re, const double* im, size_t dim, dl_state** out) {
  return guarded([&] {
    require_arg(re != nullptr && out != nullptr, "null argument");
    decolab::CVector v(static_cast<Eigen::Index>(dim));
    for (size_t k = 0; k < dim; ++k)
      v[static_cast<Eigen::Index>(k)] = decolab::Complex(re[k], im != nullptr ? im[k] : 0.0);
    *out = new dl_state{decolab::hilbert::make_state(v)};
  });
}

void dl_state_free(dl_state* state) { delete state; }

size_t dl_state_dim(const dl_state* state) { return state == nullptr ? 0 : state->value.dim(); }

dl_status dl_state_amplitudes(const dl_state* state, double* re, double* im, size_t capacity) {
  return guarded([&] {
    require_arg(state != nullptr && re != nullptr && im != nullptr, "null argument");
    decolab::require(capacity >= state->value.dim(), ErrorCode::kDimensionMismatch,
                     "output buffers are smaller than the state");
    for (size_t k = 0; k < state->value.dim(); ++k) {
      re[k] = state->value[k].real();
      im[k] = state->value[k].imag();
    }
  });
}

dl_status dl_apply_w(const dl_state* psi, const dl_state* chi, double eps, dl_state** out) {
  return guarded([&] {
    require_arg(psi != nullptr && chi != nullptr && out != nullptr, "null argument");
    *out = new dl_state{decolab::hilbert::apply_w(psi->value, chi->value, eps)};
  });
}

dl_status dl_approx_w(const dl_state* psi, double eps, dl_state** out) {
  return guarded([&] {
    require_arg(psi != nullptr && out != nullptr, "null argument");
    *out = new dl_state{decolab::collapse::approx_w_transform(psi->value, eps)};
  });
}

dl_status dl_decoherence_phase_spread(const dl_state* psi, double eps, double* out) {
  return guarded([&] {
    require_arg(psi != nullptr && out != nullptr, "null argument");
    *out = decolab::collapse::decoherence_phase_spread(psi->value, eps);
  });
}

dl_status dl_sample_collapse(const dl_state* psi, uint64_t seed, size_t* out_branch, double* out_prior) {
  return guarded([&] {
    require_arg(psi != nullptr && out_branch != nullptr, "null argument");
    const auto outcome = decolab::collapse::sample_collapse(psi->value, seed);
    *out_branch = outcome.branch_index;
    if (out_prior != nullptr) *out_prior = outcome.prior;
  });
}

uint64_t dl_split_seed(uint64_t base, uint64_t index) { return decolab::collapse::split_seed(base, index); }

}  // extern "C"
