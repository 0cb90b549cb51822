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

// decoherence-lab <scenario> [--key value]... [--config path] [--seed N]
//                 [--out dir] [--formats json,csv] [--paper-constants]
//
// Runs one scenario, writes its files and prints the summary document.

#include <cstdio>

#include "decolab/decolab.h"

namespace {

int report(dl_status status) {
  if (status == DL_HELP_REQUESTED) {
    std::fputs(dl_last_error(), stdout);
  } else {
    std::fprintf(stderr, "decoherence-lab: %s\n", dl_last_error());
  }
  return dl_exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  dl_config* config = nullptr;
  dl_status status = dl_config_parse(argc, argv, &config);
  if (status != DL_OK) return report(status);

  dl_result* result = nullptr;
  status = dl_run(config, &result);
  if (status == DL_OK) status = dl_result_emit(result, config);
  if (status == DL_OK) {
    char* summary = nullptr;
    status = dl_result_summary_json(result, &summary);
    if (status == DL_OK) std::fputs(summary, stdout);
    dl_string_free(summary);
  }
  dl_result_free(result);
  dl_config_free(config);
  return status == DL_OK ? 0 : report(status);
}
