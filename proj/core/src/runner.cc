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

#include "walkergames/runner.h"

#include <algorithm>
#include <memory>

#include "walkergames/monitors.h"
#include "walkergames/strategies.h"

namespace walkergames {

RunResult run_game(const RunConfig& c) {
  GameState s = new_game(c.n, c.bias, c.first_player);
  PolicyOptions maker_opts{c.seed, c.maker_script, false};
  PolicyOptions breaker_opts{c.seed, c.breaker_script, c.delaying_greedy_phase1};
  auto maker = make_policy(c.maker, Player::kMaker, maker_opts);
  auto breaker = make_policy(c.breaker, Player::kBreaker, breaker_opts);
  MonitorRunner monitors(c.maker, s, c.strict);
  const Goal goal = goal_for_maker(c.maker);
  const int cap = c.move_cap.value_or(kDefaultMoveCapFactor * c.n);

  RunResult out;
  out.final_state = s;
  Transcript& t = out.transcript;
  t.header = {kTranscriptVersion, c.n, c.bias, c.first_player, c.maker, c.breaker, c.seed, c.n0};
  TranscriptFooter& f = t.footer;
  int maker_turns = 0;
  bool won = false;

  while (!won && maker_turns < cap) {
    const Player p = s.to_move();
    Policy& policy = p == Player::kMaker ? *maker : *breaker;
    Move m;
    try {
      m = policy.choose(s);
    } catch (const StrategyAssertionError& e) {
      f.assertions.push_back({e.round(), e.expectation(), e.snapshot()});
      out.strategy_assertion = true;
      break;
    }
    GameState next = s;
    next.apply(p, m);
    t.entries.push_back({static_cast<int>(t.entries.size()), s.round() + 1, p, m,
                         m.kind == MoveKind::kPlaceAndClaim ? std::optional<Vertex>(m.start)
                                                            : s.position(p)});
    if (c.monitors) {
      try {
        monitors.observe(s, p, m, next);
      } catch (const MonitorViolationError& e) {
        f.assertions.push_back({s.round() + 1, std::string("monitor: ") + e.what(), snapshot(next)});
        out.monitor_abort = true;
        s = std::move(next);
        break;
      }
    }
    s = std::move(next);
    if (p != Player::kMaker) continue;
    ++maker_turns;
    if (goal == Goal::kConnectivity) {
      won = connectivity_won(s);
    } else if (const auto& cyc = maker->memory().cycle_order;
               cyc && static_cast<int>(cyc->size()) == s.n() && is_maker_cycle(s, *cyc)) {
      won = true;
      f.certificate = *cyc;
    }
  }

  f.maker_move_count = s.move_count(Player::kMaker);
  f.breaker_move_count = s.move_count(Player::kBreaker);
  if (c.monitors) f.monitors = monitors.report();
  if (won) {
    f.winner = Winner::kMaker;
  } else if (!f.assertions.empty()) {
    f.winner = Winner::kAborted;
  } else {
    f.winner = Winner::kBreaker;
  }
  out.maker_log = maker->memory().log;
  out.breaker_log = breaker->memory().log;
  out.final_state = std::move(s);
  return out;
}

std::optional<TheoremBound> theorem_bound(const TranscriptHeader& h) {
  if (h.n < h.n0 || h.bias != Bias{1, 1}) return std::nullopt;
  if (h.first_player == Player::kBreaker) {
    if (h.maker == "connectivity") {
      return TheoremBound{TheoremBound::Kind::kAtMost, h.n + 1, true, "connectivity win in <= n+1"};
    }
    if (h.maker == "hamilton") {
      return TheoremBound{TheoremBound::Kind::kAtMost, h.n + 6, true, "hamilton win in <= n+6"};
    }
    return std::nullopt;
  }
  if (h.breaker == "delaying") {
    return TheoremBound{TheoremBound::Kind::kAtLeast, h.n, false, "delayed to >= n"};
  }
  return std::nullopt;
}

bool bound_satisfied(const Transcript& t) {
  const auto b = theorem_bound(t.header);
  if (!b) return true;
  const int k = t.footer.maker_move_count;
  if (b->requires_win && t.footer.winner != Winner::kMaker) return false;
  return b->kind == TheoremBound::Kind::kAtMost ? k <= b->value : k >= b->value;
}

bool maker_should_win(const TranscriptHeader& h) {
  const auto b = theorem_bound(h);
  return b && b->requires_win;
}

bool VerifySummary::ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const VerifyCell& c) {
    return c.monitor_violations == 0 && c.strategy_assertions == 0 && c.bound_breaches == 0;
  });
}

VerifySummary verify(const VerifyConfig& vc) {
  VerifySummary out;
  for (int n : vc.ns) {
    for (const auto& maker : vc.makers) {
      for (const auto& breaker : vc.breakers) {
        VerifyCell cell{n, maker, breaker};
        for (int g = 0; g < vc.games; ++g) {
          RunConfig rc;
          rc.n = n;
          rc.bias = vc.bias;
          rc.first_player = vc.first_player;
          rc.maker = maker;
          rc.breaker = breaker;
          rc.seed = vc.seed_base + static_cast<std::uint64_t>(g);
          rc.n0 = vc.n0;
          rc.move_cap = vc.move_cap;
          rc.strict = vc.strict;
          const auto r = run_game(rc);
          const auto& f = r.transcript.footer;
          const int k = f.maker_move_count;
          cell.min_maker_moves = cell.games == 0 ? k : std::min(cell.min_maker_moves, k);
          cell.max_maker_moves = cell.games == 0 ? k : std::max(cell.max_maker_moves, k);
          ++cell.games;
          if (f.winner == Winner::kMaker) ++cell.maker_wins;
          if (!f.monitors.ok() || r.monitor_abort) ++cell.monitor_violations;
          if (r.strategy_assertion) ++cell.strategy_assertions;
          if (!bound_satisfied(r.transcript)) ++cell.bound_breaches;
          cell.max_first_visit_degree =
              std::max(cell.max_first_visit_degree, f.monitors.max_first_visit_degree);
        }
        out.cells.push_back(cell);
      }
    }
  }
  return out;
}

}  // namespace walkergames
