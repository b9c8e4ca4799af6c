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

#ifndef WALKERGAMES_STRATEGIES_H_
#define WALKERGAMES_STRATEGIES_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "walkergames/engine.h"
#include "walkergames/rng.h"

namespace walkergames {

// Three cyclically consecutive cycle vertices used to splice a new vertex in.
struct Triple {
  Vertex first = -1;
  Vertex middle = -1;
  Vertex last = -1;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// Per-game state a policy carries between its own moves.
struct StrategyMemory {
  int stage = 0;
  // Maker's walk in claim order while it is a simple path.
  std::vector<Vertex> path_order;
  // Cyclic vertex order of Maker's current cycle, once one is closed.
  std::optional<std::vector<Vertex>> cycle_order;
  std::optional<Vertex> v1;
  // Named vertices: endgame u1..u3, pivots, the protected vertex "z", ...
  std::map<std::string, Vertex, std::less<>> designated;
  std::uint64_t rng_seed = 0;

  // Hamilton absorption bookkeeping.
  std::optional<Triple> splice;
  int splice_step = 0;
  bool returned_along_cycle = false;

  // Deviations from a scripted line (fallbacks taken).
  std::vector<std::string> log;
};

// A step that the constructive strategies rely on was not available. At
// n >= N0 any occurrence is a failure of the strategy.
class StrategyAssertionError : public std::runtime_error {
 public:
  StrategyAssertionError(int round, std::string expectation, std::string snapshot);

  int round() const { return round_; }
  const std::string& expectation() const { return expectation_; }
  const std::string& snapshot() const { return snapshot_; }

 private:
  int round_;
  std::string expectation_;
  std::string snapshot_;
};

// Compact textual dump of a state for diagnostics.
std::string snapshot(const GameState& state);

// Maker's core policy: start where Breaker stands, chase Breaker edges lying
// inside U, otherwise move to the unvisited vertex of largest Breaker degree.
// All ties go to the lowest vertex index. Appends the target to
// mem.path_order.
Move strategy_s_move(const GameState& state, StrategyMemory& mem);

// Visits every vertex: strategy S while |U| > 3, then the three-vertex
// endgame (direct claims, pivots through the path).
Move connectivity_maker_move(const GameState& state, StrategyMemory& mem);

// Builds a Hamilton cycle: strategy S path, closing a cycle through the start
// vertex, then splicing remaining vertices in through free triples.
// mem.cycle_order certifies the current cycle.
Move hamilton_maker_move(const GameState& state, StrategyMemory& mem);

// Lowest-index v in `candidates` \ `exclude` (v != a, b) with av and vb free.
// Throws StrategyAssertionError if there is none.
Vertex find_pivot(const GameState& state, Vertex a, Vertex b, std::span<const Vertex> candidates,
                  std::span<const Vertex> exclude = {});

// First window (cycle[i], cycle[i+1], cycle[i+2]) with no Breaker edge to any
// of `forbidden_targets`, no vertex in `excluded`, and no vertex of Breaker
// degree >= n/3. Throws StrategyAssertionError if there is none.
Triple find_free_triple(const GameState& state, std::span<const Vertex> cycle,
                        std::span<const Vertex> forbidden_targets,
                        std::span<const Vertex> excluded = {});

// Postpones a Maker-first connectivity win: arbitrary play until |U| = 3,
// then shadows Maker into the last three vertices and cuts the edge between
// the final two.
Move delaying_breaker_move(const GameState& state, StrategyMemory& mem, Rng& rng,
                           bool greedy_phase1 = false);

// (1:2) play that keeps the protected vertex mem.designated["z"] out of V(M):
// each turn claims z-to-Maker and walks back to z.
Move isolating_breaker2_move(const GameState& state, StrategyMemory& mem);

Move random_walker_move(const GameState& state, Player player, Rng& rng);
Move greedy_breaker_move(const GameState& state);

// Heuristic blocker: scores each step by how many of Maker's useful free
// edges it removes (Maker-to-U, U-to-U and start-to-U in the endgame) and by
// the Breaker degree it piles onto unvisited vertices. Ties are seeded.
Move adversarial_breaker_move(const GameState& state, StrategyMemory& mem, Rng& rng);

// Strategy S for as long as it applies, then a plain "walk towards U".
Move s_maker_move(const GameState& state, StrategyMemory& mem);

class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Moves in the text form "P s t", "C t", "T t", "X"; '#' starts a comment.
std::vector<Move> parse_script(std::istream& in);

struct Script {
  std::vector<Move> moves;
  std::size_t next = 0;
};

// Next script entry; ScriptError when exhausted or illegal here.
Move scripted_move(const GameState& state, Player player, Script& script);

// Uniform interface for the runner.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Move choose(const GameState& state) = 0;
  virtual std::string_view id() const = 0;
  virtual const StrategyMemory& memory() const = 0;
};

struct PolicyOptions {
  std::uint64_t seed = 0;
  std::vector<Move> script;
  bool delaying_greedy_phase1 = false;
};

inline constexpr std::string_view kMakerPolicies[] = {"s", "connectivity", "hamilton", "random",
                                                      "scripted"};
inline constexpr std::string_view kBreakerPolicies[] = {
    "random", "greedy", "delaying", "adversarial", "isolating2", "scripted"};

// Throws std::invalid_argument for an unknown id.
std::unique_ptr<Policy> make_policy(std::string_view id, Player role, const PolicyOptions& options);

}  // namespace walkergames

#endif  // WALKERGAMES_STRATEGIES_H_
