// Copyright 2026 The pr2-marl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pr2/run_record.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace pr2 {
namespace {

void AppendOptional(const std::optional<double>& v, std::string& out) {
  out.push_back(',');
  if (v) out += FormatDouble(*v);
}

double ParseDouble(const std::string& field) {
  double v = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("malformed number '" + field + "'");
  }
  return v;
}

template <typename Int>
Int ParseInt(const std::string& field) {
  Int v = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("malformed integer '" + field + "'");
  }
  return v;
}

std::optional<double> ParseOptional(const std::string& field) {
  if (field.empty()) return std::nullopt;
  return ParseDouble(field);
}

}  // namespace

double DistanceTo(std::span<const double> point,
                  std::span<const double> landmark) {
  if (point.size() != landmark.size()) {
    throw std::invalid_argument("distance between points of dimension " +
                                std::to_string(point.size()) + " and " +
                                std::to_string(landmark.size()));
  }
  double s = 0.0;
  for (std::size_t k = 0; k < point.size(); ++k) {
    const double d = point[k] - landmark[k];
    s += d * d;
  }
  return std::sqrt(s);
}

std::string FormatDouble(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, ptr);
}

void AppendCsvRow(const RunRecord& r, std::string& out) {
  out += std::to_string(r.seed);
  out.push_back(',');
  out += std::to_string(r.iteration);
  out.push_back(',');
  out += std::to_string(r.agent);
  AppendOptional(r.policy_0, out);
  AppendOptional(r.action_mean, out);
  out.push_back(',');
  out += FormatDouble(r.reward);
  AppendOptional(r.dist_local, out);
  AppendOptional(r.dist_global, out);
  AppendOptional(r.wall_ms, out);
  out.push_back('\n');
}

std::string FormatCsv(const std::vector<RunRecord>& records) {
  std::string out = kCsvHeader;
  out.push_back('\n');
  for (const RunRecord& r : records) AppendCsvRow(r, out);
  return out;
}

std::vector<RunRecord> ParseCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("CSV header does not match the run schema");
  }
  std::vector<RunRecord> out;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (f.size() != 9) {
      throw std::runtime_error("CSV row has " + std::to_string(f.size()) +
                               " fields, expected 9");
    }
    RunRecord r;
    r.seed = ParseInt<std::uint64_t>(f[0]);
    r.iteration = ParseInt<int>(f[1]);
    r.agent = ParseInt<int>(f[2]);
    r.policy_0 = ParseOptional(f[3]);
    r.action_mean = ParseOptional(f[4]);
    r.reward = ParseDouble(f[5]);
    r.dist_local = ParseOptional(f[6]);
    r.dist_global = ParseOptional(f[7]);
    r.wall_ms = ParseOptional(f[8]);
    out.push_back(r);
  }
  return out;
}

void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace pr2
