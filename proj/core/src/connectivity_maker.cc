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

#include <tuple>

#include "strategy_util.h"
#include "walkergames/strategies.h"

namespace walkergames {

using internal::breaker_edge;
using internal::contains;
using internal::free_edge;
using internal::strategy_fail;

namespace {

// Checks made once, when the last three unvisited vertices appear.
Move enter_endgame(const GameState& s, StrategyMemory& mem, Vertex w,
                   const std::vector<Vertex>& unvisited, std::optional<Vertex> breaker_at) {
  mem.stage = 2;
  for (std::size_t i = 0; i < unvisited.size(); ++i) {
    mem.designated["u" + std::to_string(i + 1)] = unvisited[i];
  }
  std::vector<Vertex> blocked;
  for (Vertex u : unvisited) {
    if (breaker_edge(s, w, u)) blocked.push_back(u);
  }
  if (blocked.size() > 2) strategy_fail(s, "Corollary cc1: d_B(w,U) <= 2 entering the endgame");
  if (blocked.size() < 2) return Move::pass();  // no forced line; fall through to the general rule

  if (!breaker_at || !contains(blocked, *breaker_at)) {
    strategy_fail(s, "Corollary c1: with d_B(w,U) = 2 Breaker stands on one of the blocked vertices");
  }
  for (std::size_t i = 0; i < unvisited.size(); ++i) {
    for (std::size_t j = i + 1; j < unvisited.size(); ++j) {
      if (breaker_edge(s, unvisited[i], unvisited[j])) {
        strategy_fail(s, "Lemma 1: no Breaker edge inside U = {u1,u2,u3}");
      }
    }
  }
  for (Vertex u : unvisited) {
    if (!contains(blocked, u)) {
      mem.path_order.push_back(u);
      return Move::claim(u);
    }
  }
  strategy_fail(s, "endgame: a vertex of U reachable from w");
}

// Direct step into U. Prefers a target from which some remaining vertex is
// reachable over an edge Breaker cannot cut on his next step, then a target
// Breaker is not standing on.
std::optional<Move> direct_step(const GameState& s, Vertex w, const std::vector<Vertex>& unvisited,
                                std::optional<Vertex> breaker_at) {
  const auto at = [&](Vertex v) { return breaker_at && *breaker_at == v; };
  std::optional<std::tuple<int, int, int, int>> best_key;
  Vertex best = -1;
  for (Vertex u : unvisited) {
    if (!free_edge(s, w, u)) continue;
    int safe = 0;
    int open = 0;
    for (Vertex r : unvisited) {
      if (r == u || !free_edge(s, u, r)) continue;
      ++open;
      if (!at(u) && !at(r)) safe = 1;
    }
    const auto key = std::make_tuple(safe, at(u) ? 0 : 1, open, -u);
    if (!best_key || key > *best_key) {
      best_key = key;
      best = u;
    }
  }
  if (best < 0) return std::nullopt;
  return Move::claim(best);
}

Move pivot_step(const GameState& s, StrategyMemory& mem, Vertex w,
                const std::vector<Vertex>& unvisited, std::optional<Vertex> breaker_at) {
  std::vector<Vertex> exclude{w};
  if (breaker_at) exclude.push_back(*breaker_at);
  if (unvisited.size() == 1) {
    const Vertex v = find_pivot(s, w, unvisited.front(), mem.path_order, exclude);
    mem.designated["pivot"] = v;
    return Move::claim(v);
  }
  // Several targets left: the pivot seeing the most of them.
  Vertex best = -1;
  int best_seen = 0;
  for (Vertex v : mem.path_order) {
    if (contains(exclude, v) || !free_edge(s, w, v)) continue;
    int seen = 0;
    for (Vertex u : unvisited) seen += free_edge(s, v, u) ? 1 : 0;
    if (seen > best_seen || (seen == best_seen && seen > 0 && v < best)) {
      best = v;
      best_seen = seen;
    }
  }
  if (best < 0) strategy_fail(s, "pivot: a path vertex with free edges to w and into U exists");
  mem.designated["pivot"] = best;
  return Move::claim(best);
}

}  // namespace

Move connectivity_maker_move(const GameState& s, StrategyMemory& mem) {
  const auto pos = s.position(Player::kMaker);
  if (!pos) return strategy_s_move(s, mem);
  if (mem.stage <= 1 && s.unvisited_count() > 3) return strategy_s_move(s, mem);

  const Vertex w = *pos;
  const auto breaker_at = s.position(Player::kBreaker);
  const auto unvisited = s.unvisited_vertices();
  if (unvisited.empty()) strategy_fail(s, "endgame: called after every vertex was visited");

  if (mem.stage <= 1) {
    mem.stage = 2;
    if (unvisited.size() == 3) {
      const Move forced = enter_endgame(s, mem, w, unvisited, breaker_at);
      if (forced.kind != MoveKind::kPass) return forced;
    }
  }
  if (auto step = direct_step(s, w, unvisited, breaker_at)) {
    mem.path_order.push_back(step->to);
    return *step;
  }
  return pivot_step(s, mem, w, unvisited, breaker_at);
}

}  // namespace walkergames
