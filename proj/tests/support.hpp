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

#include "common/error.hpp"

namespace testing {

// Error code thrown by fn, or kOk if it returns normally.
template <typename F>
decolab::ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const decolab::Error& e) {
    return e.code();
  }
  return decolab::ErrorCode::kOk;
}

}  // namespace testing
