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

#ifndef WALKERGAMES_MONITORS_H_
#define WALKERGAMES_MONITORS_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "walkergames/engine.h"

namespace walkergames {

// Single-instant predicates. Each returns true on pass.

// Every Breaker edge has an endpoint in V(M).
bool check_lemma1(const GameState& state);
// d_B(w, U) <= 1 at Maker's position w.
bool check_cor_c1(const GameState& state);
// d_B(w, U) <= 2, and == 2 only if Breaker ended his previous turn at w.
bool check_cor_cc1(const GameState& state, std::optional<Vertex> prev_round_breaker_end);
// At most two unvisited vertices are touched by Breaker.
bool check_lemma2(const GameState& state);
// Maker's graph is a simple path with k = |path| - 1 edges whose vertex
// order is `path`.
bool check_path_progress(const GameState& state, std::span<const Vertex> path);

// Largest Breaker degree of a vertex at the instant Maker first visits it.
struct Lemma3Result {
  bool pass = true;
  int max_degree = 0;
  int visits = 0;
  std::optional<int> first_violation_round;
};
inline constexpr int kLemma3Bound = 6;

// True iff `move` by Maker in `before` is a strategy-S step of `maker_id`:
// every move while |U| >= 4 for "connectivity"/"hamilton"; for "s", moves
// while |U| >= 3 with a free edge from Maker into U. First moves count.
bool is_s_phase_move(std::string_view maker_id, const GameState& before, const Move& move);

// Monitors apply to (1:1) Breaker-first games with an S-based Maker.
bool monitors_applicable(std::string_view maker_id, const GameState& initial);

struct CheckStats {
  std::string name;
  int evaluated = 0;
  int skipped = 0;
  std::optional<int> first_violation_round;
  std::string context;

  bool passed() const { return !first_violation_round.has_value(); }
  friend bool operator==(const CheckStats&, const CheckStats&) = default;
};

struct MonitorReport {
  bool armed = false;
  std::vector<CheckStats> checks;  // fixed order, see kCheckNames
  int max_first_visit_degree = 0;
  int maker_passes = 0;
  int breaker_passes = 0;

  bool ok() const;
  const CheckStats* find(std::string_view name) const;
  friend bool operator==(const MonitorReport&, const MonitorReport&) = default;
};

inline constexpr std::string_view kCheckNames[] = {"lemma1", "cor_c1", "cor_cc1",
                                                   "lemma2", "lemma3", "path_progress"};

class MonitorViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Feeds every step of one game to the checks, each at the instant its
// statement speaks about. Never touches the state. In strict mode the first
// violation throws MonitorViolationError.
class MonitorRunner {
 public:
  MonitorRunner(std::string_view maker_id, const GameState& initial, bool strict = false);

  void observe(const GameState& before, Player player, const Move& move, const GameState& after);
  const MonitorReport& report() const { return report_; }

 private:
  void record(std::size_t check, bool evaluated, bool pass, int round, const GameState& s);
  void on_maker(const GameState& before, const Move& move, const GameState& after);
  void on_breaker(const GameState& before, const GameState& after);

  std::string maker_id_;
  bool strict_;
  bool in_s_phase_;
  std::vector<Vertex> path_;
  std::optional<Vertex> breaker_end_prev_;
  std::optional<Vertex> breaker_end_;
  MonitorReport report_;
};

}  // namespace walkergames

#endif  // WALKERGAMES_MONITORS_H_
