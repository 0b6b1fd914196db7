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

#include "pr2/checkpoint.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace pr2 {
namespace {

using json = nlohmann::json;

void WriteDoubles(std::span<const double> values, std::ostream& out) {
  for (double v : values) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    char bytes[8];
    for (int b = 0; b < 8; ++b) {
      bytes[b] = static_cast<char>((bits >> (8 * b)) & 0xffu);
    }
    out.write(bytes, 8);
  }
}

std::vector<double> ReadDoubles(std::size_t n, std::istream& in) {
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char*>(bytes), 8);
    if (!in) throw std::runtime_error("checkpoint truncated");
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) {
      bits |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
    }
    values[k] = std::bit_cast<double>(bits);
  }
  return values;
}

json ReadHeader(std::istream& in, const std::string& format) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("missing header");
  json header = json::parse(line);
  if (header.value("format", "") != format) {
    throw std::runtime_error("expected checkpoint format '" + format + "'");
  }
  return header;
}

}  // namespace

void WriteMlp(const Mlp& net, std::ostream& out) {
  json header = {{"format", "pr2-mlp"},
                 {"layer_sizes", net.layer_sizes()},
                 {"num_parameters", net.num_parameters()}};
  out << header.dump() << '\n';
  WriteDoubles(net.parameters(), out);
}

Mlp ReadMlp(std::istream& in) {
  json header = ReadHeader(in, "pr2-mlp");
  Mlp net(header.at("layer_sizes").get<std::vector<int>>());
  if (header.at("num_parameters").get<std::size_t>() != net.num_parameters()) {
    throw std::runtime_error("parameter count disagrees with layer sizes");
  }
  net.SetParameters(ReadDoubles(net.num_parameters(), in));
  return net;
}

void WriteTable(const QTable& table, std::ostream& out) {
  json header = {{"format", "pr2-table"},
                 {"shape", table.shape()},
                 {"num_parameters", table.size()}};
  out << header.dump() << '\n';
  WriteDoubles(table.values(), out);
}

QTable ReadTable(std::istream& in) {
  json header = ReadHeader(in, "pr2-table");
  QTable table(header.at("shape").get<std::vector<std::size_t>>());
  if (header.at("num_parameters").get<std::size_t>() != table.size()) {
    throw std::runtime_error("entry count disagrees with shape");
  }
  std::vector<double> values = ReadDoubles(table.size(), in);
  std::copy(values.begin(), values.end(), table.mutable_values().begin());
  return table;
}

void SaveMlp(const Mlp& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  WriteMlp(net, out);
}

Mlp LoadMlp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ReadMlp(in);
}

void SaveTable(const QTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  WriteTable(table, out);
}

QTable LoadTable(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ReadTable(in);
}

}  // namespace pr2
