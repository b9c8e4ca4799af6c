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

#ifndef WALKERGAMES_SRC_STRATEGY_UTIL_H_
#define WALKERGAMES_SRC_STRATEGY_UTIL_H_

#include <algorithm>
#include <span>
#include <string>

#include "walkergames/engine.h"
#include "walkergames/strategies.h"

namespace walkergames::internal {

[[noreturn]] inline void strategy_fail(const GameState& s, std::string expectation) {
  throw StrategyAssertionError(s.round() + 1, std::move(expectation), snapshot(s));
}

inline bool contains(std::span<const Vertex> set, Vertex v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

inline bool free_edge(const GameState& s, Vertex a, Vertex b) {
  return a != b && s.is_free(a, b);
}

inline bool breaker_edge(const GameState& s, Vertex a, Vertex b) {
  return a != b && s.owner(a, b) == Owner::kBreaker;
}

// Claim when free, walk when already Maker's.
inline Move maker_step(const GameState& s, Vertex from, Vertex to) {
  return s.owner(from, to) == Owner::kMaker ? Move::traverse(to) : Move::claim(to);
}

}  // namespace walkergames::internal

#endif  // WALKERGAMES_SRC_STRATEGY_UTIL_H_
