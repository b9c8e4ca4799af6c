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

#ifndef WALKERGAMES_RUNNER_H_
#define WALKERGAMES_RUNNER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkergames/engine.h"
#include "walkergames/transcript.h"

namespace walkergames {

inline constexpr int kDefaultN0 = 20;
inline constexpr int kDefaultMoveCapFactor = 10;

struct RunConfig {
  int n = 20;
  Bias bias{};
  Player first_player = Player::kBreaker;
  std::string maker = "connectivity";
  std::string breaker = "random";
  std::uint64_t seed = 0;
  int n0 = kDefaultN0;
  // Maker turns before the game is stopped; default 10 n.
  std::optional<int> move_cap;
  bool monitors = true;
  bool strict = false;
  std::vector<Move> maker_script;
  std::vector<Move> breaker_script;
  bool delaying_greedy_phase1 = false;
};

struct RunResult {
  Transcript transcript;
  GameState final_state;
  // Set when the strategy stopped the game with a StrategyAssertionError.
  bool strategy_assertion = false;
  // Set when strict monitoring aborted the game.
  bool monitor_abort = false;
  // Fallbacks the policies took (StrategyMemory::log).
  std::vector<std::string> maker_log;
  std::vector<std::string> breaker_log;
};

// Plays one game to a win or to the move cap. Throws ScriptError from a
// scripted policy and std::invalid_argument for unknown policy ids.
RunResult run_game(const RunConfig& config);

// The move-count statement a configuration falls under, if any (n >= n0,
// (1:1) only).
struct TheoremBound {
  enum class Kind { kAtMost, kAtLeast };
  Kind kind = Kind::kAtMost;
  int value = 0;
  bool requires_win = false;
  std::string label;
};
std::optional<TheoremBound> theorem_bound(const TranscriptHeader& header);

// True iff the footer satisfies the applicable bound (vacuously if none).
bool bound_satisfied(const Transcript& t);

// Makers expected to win outright in the configuration.
bool maker_should_win(const TranscriptHeader& header);

struct VerifyConfig {
  std::vector<int> ns;
  std::vector<std::string> makers;
  std::vector<std::string> breakers;
  int games = 1;
  std::uint64_t seed_base = 0;
  Player first_player = Player::kBreaker;
  Bias bias{};
  int n0 = kDefaultN0;
  std::optional<int> move_cap;
  bool strict = false;
};

struct VerifyCell {
  int n = 0;
  std::string maker;
  std::string breaker;
  int games = 0;
  int maker_wins = 0;
  int min_maker_moves = 0;
  int max_maker_moves = 0;
  int monitor_violations = 0;
  int strategy_assertions = 0;
  int bound_breaches = 0;
  int max_first_visit_degree = 0;
};

struct VerifySummary {
  std::vector<VerifyCell> cells;
  bool ok() const;
};

VerifySummary verify(const VerifyConfig& config);

}  // namespace walkergames

#endif  // WALKERGAMES_RUNNER_H_
