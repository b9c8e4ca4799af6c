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

#ifndef WALKERGAMES_ORACLE_H_
#define WALKERGAMES_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walkergames/engine.h"
#include "walkergames/transcript.h"

namespace walkergames {

inline constexpr int kOracleMaxN = 5;
inline constexpr int kOracleMaxCap = 255;
inline constexpr int kOracleMaxBias = 3;

class OracleResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SolveOutcome { kMakerWins, kBreakerPrevents };
std::string_view to_string(SolveOutcome o);

struct SolveOptions {
  // Compare the oracle's own move generator with legal_moves() at every
  // expanded node; a disagreement throws std::logic_error.
  bool check_engine_legality = false;
  std::size_t memo_limit = std::size_t{1} << 24;
};

struct SolveResult {
  Goal game = Goal::kConnectivity;
  int n = 0;
  Player first_player = Player::kBreaker;
  Bias bias{};
  int move_cap = 0;
  SolveOutcome outcome = SolveOutcome::kBreakerPrevents;
  // Maker's total move count at the win under optimal play (kMakerWins only).
  int maker_moves = 0;
  std::uint64_t nodes = 0;
  std::uint64_t legality_checks = 0;
  GameState start;
  std::vector<std::pair<Player, Move>> principal_variation;
};

// Exhaustive minimax on K_n (n <= kOracleMaxN). Maker minimises her move
// count at the win, Breaker maximises it; a line on which Maker reaches
// `move_cap` moves, or is blocked, is Breaker's. Throws std::invalid_argument
// on out-of-range inputs and OracleResourceError when the memo outgrows
// options.memo_limit.
SolveResult solve(int n, Goal game, Player first_player, int move_cap, Bias bias = {},
                  const SolveOptions& options = {});

// Same, from an arbitrary reachable position.
SolveResult solve_from(const GameState& start, Goal game, int move_cap,
                       const SolveOptions& options = {});

// Replays the principal variation through the engine: every move legal and
// the final position matches the stated outcome.
bool cross_validate(const SolveResult& result);

}  // namespace walkergames

#endif  // WALKERGAMES_ORACLE_H_
