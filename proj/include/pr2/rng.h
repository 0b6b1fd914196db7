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

#ifndef PR2_RNG_H_
#define PR2_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace pr2 {

using Rng = std::mt19937_64;

std::uint64_t SplitMix64(std::uint64_t x);

// Seed for one named consumer of a run. Every consumer (environment noise,
// replay sampling, network initialization, ...) draws from its own stream so
// that adding a consumer never shifts the values another one sees.
std::uint64_t DeriveSeed(std::uint64_t run_seed, std::string_view stream,
                         std::uint64_t index = 0);

inline Rng MakeRng(std::uint64_t run_seed, std::string_view stream,
                   std::uint64_t index = 0) {
  return Rng(DeriveSeed(run_seed, stream, index));
}

// Fresh distribution objects per draw so no hidden state (the cached second
// Box-Muller value in libstdc++) leaks between call sites.
inline double StandardNormal(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

inline double Uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace pr2

#endif  // PR2_RNG_H_
