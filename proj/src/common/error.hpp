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

#include <stdexcept>
#include <string>
#include <string_view>

namespace decolab {

/// Failure classes raised by the library. The numeric values are part of the
/// C ABI (see decolab.h) and must not be reordered.
enum class ErrorCode : int {
  kOk = 0,
  kEmptyInput = 1,
  kZeroVector = 2,
  kDimensionMismatch = 3,
  kNonHermitian = 4,
  kNonUnitary = 5,
  kNotNormalized = 6,
  kInvalidArgument = 7,
  kInvalidGrid = 8,
  kPacketOutsideGrid = 9,
  kDerivativeUndefined = 10,
  kEmptyTimes = 11,
  kIndexOutOfRange = 12,
  kNonlinearPotential = 13,
  kMissingEnvironment = 14,
  kTooManyParticles = 15,
  kNonCommuting = 16,
  kDegenerateSpectrum = 17,
  kConditionViolated = 18,
  kNonPositiveInput = 19,
  kTMaxBeforeCritical = 20,
  kUnknownKey = 21,
  kTypeMismatch = 22,
  kMissingRequired = 23,
  kIoError = 24,
  kInternal = 25,
  kUsage = 26,          // malformed command line other than the three key errors
  kHelpRequested = 27,  // --help was given; not a failure
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace decolab
