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

#include "walkergames/monitors.h"

#include <algorithm>
#include <set>

#include "walkergames/strategies.h"

namespace walkergames {
namespace {

enum CheckIndex : std::size_t { kLemma1, kCorC1, kCorCc1, kLemma2, kLemma3, kPathProgress };

int breaker_degree_into_u(const GameState& s, Vertex w) {
  int d = 0;
  for (Vertex u = 0; u < s.n(); ++u) {
    if (u != w && s.unvisited(u) && s.owner(w, u) == Owner::kBreaker) ++d;
  }
  return d;
}

bool maker_sees_u(const GameState& s, Vertex w) {
  for (Vertex u = 0; u < s.n(); ++u) {
    if (u != w && s.unvisited(u) && s.is_free(w, u)) return true;
  }
  return false;
}

}  // namespace

bool check_lemma1(const GameState& s) {
  for (const Edge& e : s.claimed_edges(Player::kBreaker)) {
    if (s.unvisited(e.lo()) && s.unvisited(e.hi())) return false;
  }
  return true;
}

bool check_cor_c1(const GameState& s) {
  const auto w = s.position(Player::kMaker);
  return !w || breaker_degree_into_u(s, *w) <= 1;
}

bool check_cor_cc1(const GameState& s, std::optional<Vertex> prev_round_breaker_end) {
  const auto w = s.position(Player::kMaker);
  if (!w) return true;
  const int d = breaker_degree_into_u(s, *w);
  if (d > 2) return false;
  return d < 2 || prev_round_breaker_end == *w;
}

bool check_lemma2(const GameState& s) {
  int touched = 0;
  for (Vertex u = 0; u < s.n(); ++u) {
    if (s.unvisited(u) && s.breaker_touched(u)) ++touched;
  }
  return touched <= 2;
}

bool check_path_progress(const GameState& s, std::span<const Vertex> path) {
  const auto& edges = s.claimed_edges(Player::kMaker);
  if (path.empty()) return edges.empty();
  if (edges.size() + 1 != path.size()) return false;
  if (std::set<Vertex>(path.begin(), path.end()).size() != path.size()) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == path[i + 1] || s.owner(path[i], path[i + 1]) != Owner::kMaker) return false;
  }
  return s.position(Player::kMaker) == path.back();
}

bool is_s_phase_move(std::string_view maker_id, const GameState& before, const Move& move) {
  if (move.kind == MoveKind::kPass) return false;
  const auto w = before.position(Player::kMaker);
  if (!w) return move.kind == MoveKind::kPlaceAndClaim;
  if (move.kind != MoveKind::kClaim) return false;
  if (maker_id == "connectivity" || maker_id == "hamilton") return before.unvisited_count() >= 4;
  if (maker_id == "s") return before.unvisited_count() >= 3 && maker_sees_u(before, *w);
  return false;
}

bool monitors_applicable(std::string_view maker_id, const GameState& initial) {
  const bool s_based = maker_id == "s" || maker_id == "connectivity" || maker_id == "hamilton";
  return s_based && initial.bias() == Bias{1, 1} && initial.first_player() == Player::kBreaker;
}

bool MonitorReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckStats& c) { return c.passed(); });
}

const CheckStats* MonitorReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

MonitorRunner::MonitorRunner(std::string_view maker_id, const GameState& initial, bool strict)
    : maker_id_(maker_id), strict_(strict) {
  report_.armed = monitors_applicable(maker_id, initial);
  in_s_phase_ = report_.armed;
  for (std::string_view name : kCheckNames) {
    CheckStats c;
    c.name = name;
    report_.checks.push_back(std::move(c));
  }
}

void MonitorRunner::record(std::size_t check, bool evaluated, bool pass, int round,
                           const GameState& s) {
  CheckStats& c = report_.checks[check];
  if (!evaluated) {
    ++c.skipped;
    return;
  }
  ++c.evaluated;
  if (pass || c.first_violation_round) return;
  c.first_violation_round = round;
  c.context = snapshot(s);
  if (strict_) {
    throw MonitorViolationError(c.name + " violated in round " + std::to_string(round) + ": " +
                                c.context);
  }
}

void MonitorRunner::observe(const GameState& before, Player player, const Move& move,
                            const GameState& after) {
  if (move.kind == MoveKind::kPass) {
    ++(player == Player::kMaker ? report_.maker_passes : report_.breaker_passes);
  }
  if (player == Player::kMaker) {
    on_maker(before, move, after);
  } else {
    on_breaker(before, after);
  }
}

void MonitorRunner::on_maker(const GameState& before, const Move& move, const GameState& after) {
  const int round = before.round() + 1;
  if (in_s_phase_ && !is_s_phase_move(maker_id_, before, move)) in_s_phase_ = false;
  if (!in_s_phase_) {
    for (std::size_t i = 0; i < report_.checks.size(); ++i) {
      if (i != kCorCc1) record(i, false, true, round, after);
    }
    return;
  }

  // Lemma 3: Breaker degree of each vertex Maker reaches for the first time.
  std::vector<Vertex> fresh;
  if (move.kind == MoveKind::kPlaceAndClaim) fresh.push_back(move.start);
  if (before.unvisited(move.to)) fresh.push_back(move.to);
  for (Vertex x : fresh) {
    const int d = degree_b(before, x);
    report_.max_first_visit_degree = std::max(report_.max_first_visit_degree, d);
    record(kLemma3, true, d <= kLemma3Bound, round, before);
  }

  if (move.kind == MoveKind::kPlaceAndClaim) {
    path_ = {move.start, move.to};
  } else {
    path_.push_back(move.to);
  }
  const bool early = after.move_count(Player::kMaker) <= after.n() - 3;
  record(kPathProgress, early, !early || check_path_progress(after, path_), round, after);

  // Breaker moved first, so Maker's move completes the round.
  const bool big_u = after.unvisited_count() > 2;
  record(kLemma1, big_u, !big_u || check_lemma1(after), round, after);
  record(kCorC1, big_u, !big_u || check_cor_c1(after), round, after);
  record(kLemma2, big_u, !big_u || check_lemma2(after), round, after);
}

void MonitorRunner::on_breaker(const GameState& before, const GameState& after) {
  breaker_end_prev_ = breaker_end_;
  breaker_end_ = after.position(Player::kBreaker);
  const int round = before.round() + 1;
  const bool eval = in_s_phase_ && before.round() >= 1 && after.unvisited_count() >= 2;
  record(kCorCc1, eval, !eval || check_cor_cc1(after, breaker_end_prev_), round, after);
}

}  // namespace walkergames
