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


#include "cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace privlab::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json report_to_json(const RunReport& r) {
  Json j = Json::object();
  j["version"] = r.version;
  j["config"] = r.config;
  j["results"] = r.results;
  Json t = Json::object();
  t["columns"] = r.table.columns;
  t["rows"] = r.table.rows;
  j["table"] = t;
  // Kept last so reproducibility checks can drop a single trailing field.
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

RunReport report_from_json(const Json& j) {
  RunReport r;
  try {
    r.version = j.at("version").get<std::string>();
    r.config = j.at("config");
    r.results = j.at("results");
    r.table.columns = j.at("table").at("columns").get<std::vector<std::string>>();
    r.table.rows = j.at("table").at("rows").get<std::vector<std::vector<double>>>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string render_report(const RunReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream os;
  for (std::size_t i = 0; i < r.table.columns.size(); ++i) os << (i ? "," : "") << r.table.columns[i];
  os << "\n";
  for (const auto& row : r.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << "\n";
  }
  return os.str();
}

void write_report(const RunReport& r, const std::string& path, OutputFormat format) {
  namespace fs = std::filesystem;
  const std::string body = render_report(r, format);
  const fs::path target(path);
  const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("output directory does not exist: " + dir.string());
  const fs::path tmp = dir / ("." + target.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << body;
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw IoError("error while writing " + tmp.string());
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move report into place at " + path);
  }
}

}  // namespace privlab::cli
