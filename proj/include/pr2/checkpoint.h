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

#ifndef PR2_CHECKPOINT_H_
#define PR2_CHECKPOINT_H_

#include <iosfwd>
#include <string>

#include "pr2/mlp.h"
#include "pr2/q_table.h"

namespace pr2 {

// Checkpoints are a single JSON header line terminated by '\n', followed by
// the flat parameter array as little-endian IEEE-754 binary64.
//
//   {"format":"pr2-mlp","layer_sizes":[...],"num_parameters":N}
//   {"format":"pr2-table","shape":[...],"num_parameters":N}

void WriteMlp(const Mlp& net, std::ostream& out);
Mlp ReadMlp(std::istream& in);
void WriteTable(const QTable& table, std::ostream& out);
QTable ReadTable(std::istream& in);

void SaveMlp(const Mlp& net, const std::string& path);
Mlp LoadMlp(const std::string& path);
void SaveTable(const QTable& table, const std::string& path);
QTable LoadTable(const std::string& path);

}  // namespace pr2

#endif  // PR2_CHECKPOINT_H_
