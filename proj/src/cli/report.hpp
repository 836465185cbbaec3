// Copyright 2026 The privlab Authors
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


#ifndef PRIVLAB_CLI_REPORT_HPP
#define PRIVLAB_CLI_REPORT_HPP

#include <string>
#include <vector>

#include "cli/config.hpp"

namespace privlab::cli {

// Plot-ready numeric table; one row per sweep point or trial.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct RunReport {
  std::string version;
  Json config;   // canonical echo of the experiment config
  Json results;  // command-specific payload
  Table table;
  double wall_time_s = 0.0;
};

Json report_to_json(const RunReport& r);
// Inverse of report_to_json.
RunReport report_from_json(const Json& j);

// JSON: the full report. CSV: the table, values printed with %.17g.
std::string render_report(const RunReport& r, OutputFormat format);

// Writes through a temporary file in the target directory and renames it
// into place. Raises IoError.
void write_report(const RunReport& r, const std::string& path, OutputFormat format);

std::string format_double(double v);

}  // namespace privlab::cli

#endif  // PRIVLAB_CLI_REPORT_HPP
