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

#include "common/error.hpp"

namespace decolab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kNonUnitary: return "NonUnitary";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kPacketOutsideGrid: return "PacketOutsideGrid";
    case ErrorCode::kDerivativeUndefined: return "DerivativeUndefined";
    case ErrorCode::kEmptyTimes: return "EmptyTimes";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNonlinearPotential: return "NonlinearPotential";
    case ErrorCode::kMissingEnvironment: return "MissingEnvironment";
    case ErrorCode::kTooManyParticles: return "TooManyParticles";
    case ErrorCode::kNonCommuting: return "NonCommuting";
    case ErrorCode::kDegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::kConditionViolated: return "ConditionViolated";
    case ErrorCode::kNonPositiveInput: return "NonPositiveInput";
    case ErrorCode::kTMaxBeforeCritical: return "TMaxBeforeCritical";
    case ErrorCode::kUnknownKey: return "UnknownKey";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kMissingRequired: return "MissingRequired";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
    case ErrorCode::kUsage: return "Usage";
    case ErrorCode::kHelpRequested: return "HelpRequested";
  }
  return "Unknown";
}

}  // namespace decolab
