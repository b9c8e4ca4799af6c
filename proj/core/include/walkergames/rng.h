// Copyright 2026 The WalkerGames Authors.
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

#ifndef WALKERGAMES_RNG_H_
#define WALKERGAMES_RNG_H_

#include <cstdint>
#include <random>

namespace walkergames {

// The only randomness source. std::mt19937_64 is fully specified by the
// standard, and draws below avoid the implementation-defined distributions,
// so a seed reproduces the same game on every platform.
class Rng {
 public:
  // `stream` separates independent consumers of one game seed
  // (e.g. 1 = Maker policy, 2 = Breaker policy).
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(seed * 0x9E3779B97F4A7C15ull + stream * 0xD1B54A32D192ED03ull + 1) {}

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace walkergames

#endif  // WALKERGAMES_RNG_H_
