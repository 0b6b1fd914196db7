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

#include "pr2/q_table.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace pr2 {

QTable::QTable(std::vector<std::size_t> shape, double fill)
    : shape_(std::move(shape)) {
  if (shape_.empty()) throw std::invalid_argument("table rank must be >= 1");
  std::size_t n = 1;
  for (std::size_t d : shape_) {
    if (d == 0) throw std::invalid_argument("table extents must be positive");
    n *= d;
  }
  values_.assign(n, fill);
}

std::size_t QTable::Offset(std::initializer_list<std::size_t> idx) const {
  if (idx.size() != shape_.size()) {
    throw std::invalid_argument("table index rank mismatch");
  }
  std::size_t off = 0;
  std::size_t axis = 0;
  for (std::size_t i : idx) {
    if (i >= shape_[axis]) throw std::out_of_range("table index out of range");
    off = off * shape_[axis] + i;
    ++axis;
  }
  return off;
}

std::size_t QTable::RowOffset(std::initializer_list<std::size_t> idx) const {
  if (idx.size() + 1 != shape_.size()) {
    throw std::invalid_argument("row index rank mismatch");
  }
  std::size_t off = 0;
  std::size_t axis = 0;
  for (std::size_t i : idx) {
    if (i >= shape_[axis]) throw std::out_of_range("table index out of range");
    off = off * shape_[axis] + i;
    ++axis;
  }
  return off * shape_.back();
}

bool QTable::AllFinite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

double QTable::SupDistance(const QTable& other) const {
  if (other.shape_ != shape_) throw std::invalid_argument("shape mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    d = std::max(d, std::abs(values_[k] - other.values_[k]));
  }
  return d;
}

}  // namespace pr2
