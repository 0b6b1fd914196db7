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

#ifndef PR2_REPLAY_BUFFER_H_
#define PR2_REPLAY_BUFFER_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pr2/game.h"
#include "pr2/rng.h"

namespace pr2 {

inline constexpr std::size_t kDefaultReplayCapacity = 1'000'000;
inline constexpr std::size_t kDefaultBatchSize = 64;

// Bounded FIFO of records with uniform sampling with replacement.
template <typename Record>
class BasicReplayBuffer {
 public:
  explicit BasicReplayBuffer(std::size_t capacity = kDefaultReplayCapacity)
      : capacity_(capacity) {
    if (capacity_ == 0) {
      throw std::invalid_argument("replay capacity must be positive");
    }
  }

  void Add(Record record) {
    if (records_.size() < capacity_) {
      records_.push_back(std::move(record));
      return;
    }
    records_[head_] = std::move(record);
    head_ = (head_ + 1) % capacity_;
  }

  std::size_t size() const { return records_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return records_.empty(); }

  // Record `i` in insertion order; 0 is the oldest retained record.
  const Record& at(std::size_t i) const {
    if (i >= records_.size()) throw std::out_of_range("replay index");
    return records_[(head_ + i) % records_.size()];
  }
  const Record& newest() const {
    if (records_.empty()) throw std::logic_error("replay buffer is empty");
    return at(records_.size() - 1);
  }

  // Throws std::logic_error when empty.
  std::vector<Record> Sample(std::size_t batch_size, Rng& rng) const {
    if (records_.empty()) {
      throw std::logic_error("cannot sample from an empty replay buffer");
    }
    std::uniform_int_distribution<std::size_t> pick(0, records_.size() - 1);
    std::vector<Record> batch;
    batch.reserve(batch_size);
    for (std::size_t k = 0; k < batch_size; ++k) {
      batch.push_back(records_[pick(rng)]);
    }
    return batch;
  }
  std::vector<Record> Sample(std::size_t batch_size, std::uint64_t seed) const {
    Rng rng(seed);
    return Sample(batch_size, rng);
  }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // slot of the oldest record once the ring is full
  std::vector<Record> records_;
};

using ReplayBuffer = BasicReplayBuffer<Transition>;

}  // namespace pr2

#endif  // PR2_REPLAY_BUFFER_H_
