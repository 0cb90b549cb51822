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

// Exercises the shared library strictly through its C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include "decolab/decolab.h"

namespace {

using cd = std::complex<double>;

std::vector<cd> amplitudes(const dl_state* s) {
  const std::size_t n = dl_state_dim(s);
  std::vector<double> re(n), im(n);
  REQUIRE(dl_state_amplitudes(s, re.data(), im.data(), n) == DL_OK);
  std::vector<cd> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {re[i], im[i]};
  return out;
}

dl_state* make(std::vector<double> re, std::vector<double> im = {}) {
  dl_state* s = nullptr;
  REQUIRE(dl_state_new(re.data(), im.empty() ? nullptr : im.data(), re.size(), &s) == DL_OK);
  return s;
}

dl_status parse(std::vector<const char*> argv, dl_config** out) {
  argv.insert(argv.begin(), "decoherence-lab");
  return dl_config_parse(static_cast<int>(argv.size()), argv.data(), out);
}

std::string summary_of(std::vector<const char*> argv) {
  dl_config* c = nullptr;
  REQUIRE(parse(std::move(argv), &c) == DL_OK);
  dl_result* r = nullptr;
  REQUIRE(dl_run(c, &r) == DL_OK);
  char* text = nullptr;
  REQUIRE(dl_result_summary_json(r, &text) == DL_OK);
  std::string out(text);
  dl_string_free(text);
  dl_result_free(r);
  dl_config_free(c);
  return out;
}

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(std::string(dl_version()) == "0.1.0");
  CHECK(dl_exit_code(DL_OK) == 0);
  CHECK(dl_exit_code(DL_HELP_REQUESTED) == 0);
  for (dl_status s : {DL_ERR_UNKNOWN_KEY, DL_ERR_TYPE_MISMATCH, DL_ERR_MISSING_REQUIRED, DL_ERR_USAGE})
    CHECK(dl_exit_code(s) == 2);
  for (int s = DL_ERR_EMPTY_INPUT; s <= DL_ERR_INTERNAL; ++s) {
    if (s >= DL_ERR_UNKNOWN_KEY && s <= DL_ERR_MISSING_REQUIRED) continue;
    CHECK(dl_exit_code(s) == 1);
  }

  dl_state* s = nullptr;
  double zero[2] = {0.0, 0.0};
  CHECK(dl_state_new(zero, nullptr, 2, &s) == DL_ERR_ZERO_VECTOR);
  CHECK(s == nullptr);
  CHECK(std::strlen(dl_last_error()) > 0);
  CHECK(dl_state_new(zero, nullptr, 0, &s) == DL_ERR_EMPTY_INPUT);
  CHECK(dl_state_new(nullptr, nullptr, 2, &s) != DL_OK);
  CHECK(dl_state_new(zero, nullptr, 2, nullptr) != DL_OK);

  // NULL is accepted by every free function.
  dl_state_free(nullptr);
  dl_config_free(nullptr);
  dl_result_free(nullptr);
  dl_string_free(nullptr);
}

TEST_CASE("states are normalized on creation") {
  dl_state* s = make({3.0, 0.0}, {0.0, 4.0});
  CHECK(dl_state_dim(s) == 2);
  const auto a = amplitudes(s);
  CHECK(a[0].real() == doctest::Approx(0.6));
  CHECK(a[1].imag() == doctest::Approx(0.8));
  double re[1], im[1];
  CHECK(dl_state_amplitudes(s, re, im, 1) == DL_ERR_DIMENSION_MISMATCH);
  dl_state_free(s);
}

TEST_CASE("W operator through the C API") {
  const double eps = 0.7;
  dl_state* psi = make({0.6, 0.8});
  dl_state* chi = make({1.0, 0.0});
  dl_state* out = nullptr;
  REQUIRE(dl_apply_w(psi, chi, eps, &out) == DL_OK);
  // chi + (e^{i eps} - 1) |psi><psi|chi>.
  const cd k = (std::exp(cd(0.0, eps)) - 1.0) * 0.6;
  const auto w = amplitudes(out);
  CHECK(std::abs(w[0] - (1.0 + k * 0.6)) < 1e-14);
  CHECK(std::abs(w[1] - k * 0.8) < 1e-14);
  dl_state_free(out);

  dl_state* approx = nullptr;
  REQUIRE(dl_approx_w(psi, eps, &approx) == DL_OK);
  const auto a = amplitudes(approx);
  CHECK(std::abs(a[0] - 0.6 * std::exp(cd(0.0, eps * 0.36))) < 1e-14);
  CHECK(std::abs(a[1] - 0.8 * std::exp(cd(0.0, eps * 0.64))) < 1e-14);
  dl_state_free(approx);

  double spread = 0.0;
  REQUIRE(dl_decoherence_phase_spread(psi, eps, &spread) == DL_OK);
  CHECK(spread == doctest::Approx(eps * (0.64 - 0.36)));

  dl_state* wide = make({1.0, 0.0, 0.0});
  CHECK(dl_apply_w(psi, wide, eps, &out) == DL_ERR_DIMENSION_MISMATCH);
  dl_state_free(wide);
  dl_state_free(chi);
  dl_state_free(psi);
}

TEST_CASE("collapse sampling and seed splitting") {
  CHECK(dl_split_seed(42, 0) == 42);
  CHECK(dl_split_seed(42, 1) == (42ULL ^ 0x9E3779B97F4A7C15ULL));
  CHECK(dl_split_seed(5, 3) == (5ULL ^ (0x9E3779B97F4A7C15ULL * 3ULL)));

  dl_state* psi = make({std::sqrt(0.8), std::sqrt(0.2)});
  std::size_t first = 99, again = 99;
  double prior = 0.0;
  REQUIRE(dl_sample_collapse(psi, 17, &first, &prior) == DL_OK);
  REQUIRE(dl_sample_collapse(psi, 17, &again, nullptr) == DL_OK);
  CHECK(first == again);
  CHECK(first < 2);
  CHECK(prior == doctest::Approx(first == 0 ? 0.8 : 0.2));

  int zeros = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    std::size_t b = 0;
    REQUIRE(dl_sample_collapse(psi, dl_split_seed(123, static_cast<std::uint64_t>(i)), &b, nullptr) == DL_OK);
    zeros += b == 0 ? 1 : 0;
  }
  // 3-sigma binomial half width is about 0.0085.
  CHECK(std::abs(zeros / static_cast<double>(n) - 0.8) < 3.0 * std::sqrt(0.16 / n));
  dl_state_free(psi);
}

TEST_CASE("scalar physics") {
  double tau = 0.0;
  REQUIRE(dl_sg_critical_time(1e-9, 1e-25, 1e-23, 1e3, &tau) == DL_OK);
  CHECK(tau == doctest::Approx(1e-7).epsilon(1e-12));
  CHECK(dl_sg_critical_time(1e-9, -1.0, 1e-23, 1e3, &tau) != DL_OK);

  double lambda = 0.0;
  REQUIRE(dl_thermal_de_broglie(1.443e-25, 1e-6, 0, &lambda) == DL_OK);
  const double h = 6.62607015e-34, kb = 1.380649e-23;
  CHECK(lambda == doctest::Approx(h / std::sqrt(1.443e-25 * kb * 1e-6)).epsilon(1e-12));
  CHECK(dl_thermal_de_broglie(1.443e-25, 0.0, 0, &lambda) == DL_ERR_NON_POSITIVE_INPUT);

  double tc = 0.0;
  REQUIRE(dl_bose_critical_temperature(1.443e-25, 2e-7, 0, &tc) == DL_OK);
  double at_tc = 0.0;
  REQUIRE(dl_thermal_de_broglie(1.443e-25, tc, 0, &at_tc) == DL_OK);
  CHECK(at_tc == doctest::Approx(2e-7).epsilon(1e-10));
}

TEST_CASE("configuration, run and summary") {
  dl_config* c = nullptr;
  CHECK(parse({"sterngerlach", "--bogus", "1"}, &c) == DL_ERR_UNKNOWN_KEY);
  CHECK(c == nullptr);
  CHECK(std::string(dl_last_error()).find("bogus") != std::string::npos);
  CHECK(parse({"bose"}, &c) == DL_ERR_MISSING_REQUIRED);
  CHECK(parse({"--help"}, &c) == DL_HELP_REQUESTED);
  CHECK(std::string(dl_last_error()).find("bell") != std::string::npos);

  const std::string bell = summary_of({"bell", "--seed", "3"});
  CHECK(bell.find("\"chsh_value\"") != std::string::npos);
  CHECK(bell == summary_of({"bell", "--seed", "3"}));

  const std::string sg = summary_of({"sterngerlach", "--paper-constants", "--n-trials", "500"});
  CHECK(sg.find("\"tau_c_analytic\"") != std::string::npos);
  CHECK(sg.find("paper-round/v1") != std::string::npos);

  REQUIRE(parse({"sterngerlach", "--c-plus", "1"}, &c) == DL_OK);
  dl_result* r = nullptr;
  CHECK(dl_run(c, &r) == DL_ERR_NOT_NORMALIZED);
  CHECK(r == nullptr);
  dl_config_free(c);
}
