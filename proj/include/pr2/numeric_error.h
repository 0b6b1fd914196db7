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

#ifndef PR2_NUMERIC_ERROR_H_
#define PR2_NUMERIC_ERROR_H_

#include <stdexcept>
#include <string>

namespace pr2 {

// A NaN or infinity reached a learner. Training loops catch this and record
// the run as aborted rather than continuing with poisoned parameters.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pr2

#endif  // PR2_NUMERIC_ERROR_H_
