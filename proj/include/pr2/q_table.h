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

#ifndef PR2_Q_TABLE_H_
#define PR2_Q_TABLE_H_

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace pr2 {

// Dense row-major table of reals. The joint value table of a two-agent
// learner has shape (states, own actions, opponent actions) and the marginal
// table (states, own actions); both index states and own actions alike.
class QTable {
 public:
  QTable() = default;
  explicit QTable(std::vector<std::size_t> shape, double fill = 0.0);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return values_.size(); }

  template <typename... Idx>
  double& at(Idx... idx) {
    return values_[Offset({static_cast<std::size_t>(idx)...})];
  }
  template <typename... Idx>
  double at(Idx... idx) const {
    return values_[Offset({static_cast<std::size_t>(idx)...})];
  }

  // The contiguous last-axis slice selected by all leading indices.
  template <typename... Idx>
  std::span<double> row(Idx... idx) {
    std::size_t off = RowOffset({static_cast<std::size_t>(idx)...});
    return {values_.data() + off, shape_.back()};
  }
  template <typename... Idx>
  std::span<const double> row(Idx... idx) const {
    std::size_t off = RowOffset({static_cast<std::size_t>(idx)...});
    return {values_.data() + off, shape_.back()};
  }

  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }

  bool AllFinite() const;
  // max over all entries of |this - other|.
  double SupDistance(const QTable& other) const;

  bool operator==(const QTable&) const = default;

 private:
  std::size_t Offset(std::initializer_list<std::size_t> idx) const;
  std::size_t RowOffset(std::initializer_list<std::size_t> idx) const;

  std::vector<std::size_t> shape_;
  std::vector<double> values_;
};

}  // namespace pr2

#endif  // PR2_Q_TABLE_H_
