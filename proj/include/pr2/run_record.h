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

#ifndef PR2_RUN_RECORD_H_
#define PR2_RUN_RECORD_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pr2 {

// One CSV row: the state of one agent after one iteration of one run.
// Iteration 0 holds the initial policy.
struct RunRecord {
  std::uint64_t seed = 0;
  int iteration = 0;
  int agent = 0;
  std::optional<double> policy_0;
  std::optional<double> action_mean;
  double reward = 0.0;
  std::optional<double> dist_local;
  std::optional<double> dist_global;
  std::optional<double> wall_ms;
};

inline constexpr const char* kCsvHeader =
    "seed,iteration,agent,policy_0,action_mean,reward,dist_local,dist_global,"
    "wall_ms";

// Euclidean distance. Throws std::invalid_argument on a dimension mismatch.
double DistanceTo(std::span<const double> point,
                  std::span<const double> landmark);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double x);

void AppendCsvRow(const RunRecord& record, std::string& out);
// Header line followed by one LF-terminated line per record.
std::string FormatCsv(const std::vector<RunRecord>& records);
// Inverse of FormatCsv. Throws std::runtime_error on a schema mismatch.
std::vector<RunRecord> ParseCsv(const std::string& text);

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& content);
std::string ReadFile(const std::filesystem::path& path);

}  // namespace pr2

#endif  // PR2_RUN_RECORD_H_
