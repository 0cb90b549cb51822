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

#include <ostream>
#include <string>
#include <vector>

namespace decolab {

/// Column-named numeric table, the common currency for CSV traces.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

/// Shortest text that parses back to the same double ('.' separator, at most
/// 17 significant digits, locale independent).
std::string format_double(double value);

/// Header row then one line per row, comma separated, '\n' line ends.
void write_csv(std::ostream& out, const Table& table);

}  // namespace decolab
