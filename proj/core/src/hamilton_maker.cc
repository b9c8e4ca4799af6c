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

#include <algorithm>
#include <tuple>

#include "strategy_util.h"
#include "walkergames/strategies.h"

namespace walkergames {

using internal::breaker_edge;
using internal::contains;
using internal::free_edge;
using internal::maker_step;
using internal::strategy_fail;

namespace {

// Checks the structure the cycle-closing line relies on, keyed on where
// Breaker stands and on d_B(x, U).
void check_closing_preconditions(const GameState& s, Vertex x, Vertex v1,
                                 const std::vector<Vertex>& unvisited,
                                 std::optional<Vertex> breaker_at) {
  std::vector<Vertex> blocked_from_x;
  std::vector<Vertex> blocked_from_v1;
  for (Vertex u : unvisited) {
    if (breaker_edge(s, x, u)) blocked_from_x.push_back(u);
    if (breaker_edge(s, v1, u)) blocked_from_v1.push_back(u);
  }
  if (blocked_from_x.size() > 2) strategy_fail(s, "Corollary cc1: d_B(x,U) <= 2 before move n-3");

  if (breaker_at && *breaker_at == v1) {
    if (blocked_from_v1.size() > 1) {
      strategy_fail(s, "Claim 4: with Breaker at v1 at most one v1-u_i is Breaker's");
    }
    if (blocked_from_x.size() > 1) {
      strategy_fail(s, "Corollary c1: d_B(x,U) <= 1 when Breaker moved to v1");
    }
  } else if (blocked_from_x.size() == 2) {
    if (!breaker_at || !contains(blocked_from_x, *breaker_at)) {
      strategy_fail(s, "Case 1a: Breaker stands on one of the two vertices blocked from x");
    }
    if (!blocked_from_v1.empty()) strategy_fail(s, "Claim 1: v1-u_i free for every i");
  } else if (blocked_from_x.size() == 1) {
    if (blocked_from_v1.size() > 1) strategy_fail(s, "Claim 2: v1-u_i free for every i after round n-4");
    if (blocked_from_v1.size() == 1) {
      const auto& last = s.last_step(Player::kBreaker);
      const Vertex u = blocked_from_v1.front();
      const bool just_claimed = last && last->from && last->move.kind != MoveKind::kTraverse &&
                                last->move.kind != MoveKind::kPass &&
                                Edge(*last->from, last->move.to) == Edge(v1, u);
      if (!just_claimed) strategy_fail(s, "Claim 2: v1-u_i free for every i after round n-4");
    }
  } else {
    if (blocked_from_v1.size() > 2) strategy_fail(s, "Claim 3: at most two u_i adjacent to v1 in B");
    if (blocked_from_v1.size() == 2 &&
        (!breaker_at || !contains(blocked_from_v1, *breaker_at))) {
      strategy_fail(s, "Claim 3: with two u_i adjacent to v1 Breaker stands on one of them");
    }
  }
}

// Next vertex of U on the way to closing the cycle at v1: x-u free and v1-u
// not Breaker's; prefer u that Breaker cannot cut from v1 on his next step,
// then one with a fallback u' (v1-u' open, u-u' free).
std::optional<Vertex> closing_target(const GameState& s, Vertex w, Vertex v1,
                                     const std::vector<Vertex>& unvisited,
                                     std::optional<Vertex> breaker_at) {
  const auto at = [&](Vertex v) { return breaker_at && *breaker_at == v; };
  std::optional<std::tuple<int, int, int>> best_key;
  Vertex best = -1;
  for (Vertex u : unvisited) {
    if (!free_edge(s, w, u) || breaker_edge(s, v1, u)) continue;
    int backup = 0;
    for (Vertex r : unvisited) {
      if (r != u && !breaker_edge(s, v1, r) && free_edge(s, u, r)) backup = 1;
    }
    const auto key = std::make_tuple((at(u) || at(v1)) ? 0 : 1, backup, -u);
    if (!best_key || key > *best_key) {
      best_key = key;
      best = u;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Move close_cycle(const GameState& s, StrategyMemory& mem, Vertex w, Vertex v1,
                 const std::vector<Vertex>& unvisited, std::optional<Vertex> breaker_at) {
  if (w != mem.path_order.back()) strategy_fail(s, "Stage 2: Maker stands at the end of her path");
  if (free_edge(s, w, v1)) {
    mem.cycle_order = mem.path_order;
    mem.stage = 3;
    return Move::claim(v1);
  }
  if (unvisited.size() == 1) {
    strategy_fail(s, "Stage 2: the closing edge u_j-v1 is free");
  }
  const auto next = closing_target(s, w, v1, unvisited, breaker_at);
  if (!next) strategy_fail(s, "Stage 2: some u_j has u_i-u_j free and v1-u_j not Breaker's");
  mem.path_order.push_back(*next);
  return Move::claim(*next);
}

// Cycle neighbour of w to step back to when Breaker sits on the last target.
Vertex quieter_cycle_neighbour(const GameState& s, const std::vector<Vertex>& cycle, Vertex w) {
  const auto it = std::find(cycle.begin(), cycle.end(), w);
  if (it == cycle.end()) strategy_fail(s, "Stage 3: Maker stands on her cycle");
  const std::size_t i = static_cast<std::size_t>(it - cycle.begin());
  const Vertex prev = cycle[(i + cycle.size() - 1) % cycle.size()];
  const Vertex next = cycle[(i + 1) % cycle.size()];
  const auto key = [&](Vertex v) { return std::make_pair(degree_b(s, v), v); };
  return key(prev) < key(next) ? prev : next;
}

Move absorb(const GameState& s, StrategyMemory& mem, Vertex w, const std::vector<Vertex>& unvisited,
            std::optional<Vertex> breaker_at) {
  auto& cycle = *mem.cycle_order;
  if (!mem.returned_along_cycle) {
    // Step back from v1 to the vertex visited just before closing.
    mem.returned_along_cycle = true;
    return Move::traverse(cycle.back());
  }

  if (mem.splice_step == 1) {
    const Triple t = *mem.splice;
    if (w != t.middle) strategy_fail(s, "Stage 3: Maker reached the middle of her triple");
    for (Vertex u : unvisited) {
      if (free_edge(s, t.middle, u) && free_edge(s, u, t.first) && free_edge(s, u, t.last)) {
        mem.splice_step = 2;
        mem.designated["target"] = u;
        return Move::claim(u);
      }
    }
    strategy_fail(s, "Stage 3: a target u with w2-u, u-w1, u-w3 free exists after Breaker's move");
  }

  if (mem.splice_step == 2) {
    const Triple t = *mem.splice;
    const auto mid = std::find(cycle.begin(), cycle.end(), t.middle);
    Move step;
    if (free_edge(s, w, t.first)) {
      cycle.insert(mid, w);
      step = Move::claim(t.first);
    } else if (free_edge(s, w, t.last)) {
      cycle.insert(mid + 1, w);
      step = Move::claim(t.last);
    } else {
      strategy_fail(s, "Stage 3: one of u-w1, u-w3 is still free");
    }
    mem.splice.reset();
    mem.splice_step = 0;
    return step;
  }

  if (unvisited.size() == 1 && breaker_at && *breaker_at == unvisited.front()) {
    // Breaker guards the last vertex; he has to leave it on his next step.
    return Move::traverse(quieter_cycle_neighbour(s, cycle, w));
  }

  std::vector<Vertex> forbidden = unvisited;
  forbidden.push_back(w);
  std::vector<Vertex> excluded{w};
  if (breaker_at) excluded.push_back(*breaker_at);
  const Triple t = find_free_triple(s, cycle, forbidden, excluded);
  mem.splice = t;
  mem.splice_step = 1;
  mem.designated["y1"] = t.first;
  mem.designated["y2"] = t.middle;
  mem.designated["y3"] = t.last;
  return maker_step(s, w, t.middle);
}

}  // namespace

Move hamilton_maker_move(const GameState& s, StrategyMemory& mem) {
  const auto pos = s.position(Player::kMaker);
  if (!pos) return strategy_s_move(s, mem);
  if (mem.stage <= 1 && s.unvisited_count() > 3) return strategy_s_move(s, mem);

  const Vertex w = *pos;
  const Vertex v1 = *mem.v1;
  const auto breaker_at = s.position(Player::kBreaker);
  const auto unvisited = s.unvisited_vertices();
  if (unvisited.empty() && !(mem.stage == 3 && mem.splice_step == 2)) {
    strategy_fail(s, "Hamilton: called after every vertex was visited");
  }

  if (mem.stage <= 1) {
    mem.stage = 2;
    if (unvisited.size() != 3) strategy_fail(s, "Stage 2: starts with |U| = 3");
    for (std::size_t i = 0; i < unvisited.size(); ++i) {
      mem.designated["u" + std::to_string(i + 1)] = unvisited[i];
    }
    check_closing_preconditions(s, w, v1, unvisited, breaker_at);
    const auto first = closing_target(s, w, v1, unvisited, breaker_at);
    if (!first) strategy_fail(s, "Stage 2: some u_i has x-u_i free and v1-u_i not Breaker's");
    mem.path_order.push_back(*first);
    return Move::claim(*first);
  }
  if (mem.stage == 2) return close_cycle(s, mem, w, v1, unvisited, breaker_at);
  return absorb(s, mem, w, unvisited, breaker_at);
}

}  // namespace walkergames
