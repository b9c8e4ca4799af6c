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

#include <sstream>

#include "strategy_util.h"
#include "walkergames/strategies.h"

namespace walkergames {

using internal::breaker_edge;
using internal::contains;
using internal::free_edge;
using internal::strategy_fail;

StrategyAssertionError::StrategyAssertionError(int round, std::string expectation,
                                               std::string snapshot)
    : std::runtime_error("round " + std::to_string(round) + ": " + expectation),
      round_(round),
      expectation_(std::move(expectation)),
      snapshot_(std::move(snapshot)) {}

std::string snapshot(const GameState& s) {
  std::ostringstream out;
  const auto pos = [](std::optional<Vertex> v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "n=" << s.n() << " round=" << s.round() << " to_move=" << to_string(s.to_move())
      << " maker_at=" << pos(s.position(Player::kMaker))
      << " breaker_at=" << pos(s.position(Player::kBreaker)) << " U={";
  bool first = true;
  for (Vertex u : s.unvisited_vertices()) {
    out << (first ? "" : ",") << u;
    first = false;
  }
  out << "} B=[";
  first = true;
  for (const Edge& e : s.claimed_edges(Player::kBreaker)) {
    out << (first ? "" : " ") << e.lo() << '-' << e.hi();
    first = false;
  }
  out << "] M=[";
  first = true;
  for (const Edge& e : s.claimed_edges(Player::kMaker)) {
    out << (first ? "" : " ") << e.lo() << '-' << e.hi();
    first = false;
  }
  out << ']';
  return out.str();
}

namespace {

Move first_s_move(const GameState& s, StrategyMemory& mem) {
  Vertex start = 0;
  Vertex partner = 1;
  if (const auto b = s.position(Player::kBreaker)) {
    start = *b;
    partner = -1;
    for (Vertex u = 0; u < s.n(); ++u) {
      if (u != start && degree_b(s, u) == 0 && free_edge(s, start, u)) {
        partner = u;
        break;
      }
    }
    if (partner < 0) strategy_fail(s, "Strategy S: an untouched vertex u with v1-u free exists");
  }
  mem.stage = 1;
  mem.v1 = start;
  mem.path_order = {start, partner};
  return Move::place(start, partner);
}

}  // namespace

Move strategy_s_move(const GameState& s, StrategyMemory& mem) {
  const auto pos = s.position(Player::kMaker);
  if (!pos) return first_s_move(s, mem);
  const Vertex w = *pos;
  if (mem.stage == 0) mem.stage = 1;

  // Rule 1: a Breaker edge with both ends unvisited. Under S at most one
  // exists, the one Breaker just claimed; scan newest first.
  const auto& bedges = s.claimed_edges(Player::kBreaker);
  for (auto it = bedges.rbegin(); it != bedges.rend(); ++it) {
    const Vertex p = it->lo();
    const Vertex q = it->hi();
    if (!s.unvisited(p) || !s.unvisited(q)) continue;
    const bool fp = free_edge(s, w, p);
    const bool fq = free_edge(s, w, q);
    if (!fp && !fq) continue;
    Vertex target;
    if (fp && fq) {
      const int dp = degree_b(s, p);
      const int dq = degree_b(s, q);
      target = dp > dq ? p : (dq > dp ? q : std::min(p, q));
    } else {
      target = fp ? p : q;
    }
    mem.path_order.push_back(target);
    return Move::claim(target);
  }

  // Rules 2 and 3: the free wu, u in U, of largest Breaker degree.
  Vertex best = -1;
  int best_degree = -1;
  for (Vertex u = 0; u < s.n(); ++u) {
    if (!s.unvisited(u) || !free_edge(s, w, u)) continue;
    if (degree_b(s, u) > best_degree) {
      best = u;
      best_degree = degree_b(s, u);
    }
  }
  if (best < 0) strategy_fail(s, "Corollary cc1: a free edge from w into U exists");
  mem.path_order.push_back(best);
  return Move::claim(best);
}

Move s_maker_move(const GameState& s, StrategyMemory& mem) {
  const auto pos = s.position(Player::kMaker);
  if (!pos) return strategy_s_move(s, mem);
  const Vertex w = *pos;
  bool has_edge_into_u = false;
  for (Vertex u = 0; u < s.n() && !has_edge_into_u; ++u) {
    has_edge_into_u = s.unvisited(u) && free_edge(s, w, u);
  }
  if (s.unvisited_count() >= 3 && has_edge_into_u) return strategy_s_move(s, mem);
  mem.stage = 2;

  if (has_edge_into_u) {
    Vertex best = -1;
    for (Vertex u = 0; u < s.n(); ++u) {
      if (s.unvisited(u) && free_edge(s, w, u) && (best < 0 || degree_b(s, u) > degree_b(s, best))) {
        best = u;
      }
    }
    return Move::claim(best);
  }
  // Walk to a vertex that still sees U over a free edge.
  const auto sees_u = [&](Vertex v) {
    for (Vertex u = 0; u < s.n(); ++u) {
      if (s.unvisited(u) && free_edge(s, v, u)) return true;
    }
    return false;
  };
  for (Vertex v = 0; v < s.n(); ++v) {
    if (free_edge(s, w, v) && sees_u(v)) return Move::claim(v);
  }
  for (Vertex v = 0; v < s.n(); ++v) {
    if (v != w && s.owner(w, v) == Owner::kMaker && sees_u(v)) return Move::traverse(v);
  }
  const auto moves = legal_moves(s, Player::kMaker);
  return moves.front();
}

Vertex find_pivot(const GameState& s, Vertex a, Vertex b, std::span<const Vertex> candidates,
                  std::span<const Vertex> exclude) {
  Vertex best = -1;
  for (Vertex v : candidates) {
    if (v == a || v == b || contains(exclude, v)) continue;
    if (free_edge(s, a, v) && free_edge(s, v, b) && (best < 0 || v < best)) best = v;
  }
  if (best < 0) {
    strategy_fail(s, "pivot: a path vertex v with " + std::to_string(a) + "-v and v-" +
                         std::to_string(b) + " free exists");
  }
  return best;
}

Triple find_free_triple(const GameState& s, std::span<const Vertex> cycle,
                        std::span<const Vertex> forbidden_targets, std::span<const Vertex> excluded) {
  const std::size_t len = cycle.size();
  const auto clean = [&](Vertex y) {
    if (contains(excluded, y) || contains(forbidden_targets, y)) return false;
    if (3 * degree_b(s, y) >= s.n()) return false;
    for (Vertex t : forbidden_targets) {
      if (breaker_edge(s, y, t)) return false;
    }
    return true;
  };
  if (len >= 3) {
    for (std::size_t i = 0; i < len; ++i) {
      const Triple t{cycle[i], cycle[(i + 1) % len], cycle[(i + 2) % len]};
      if (clean(t.first) && clean(t.middle) && clean(t.last)) return t;
    }
  }
  strategy_fail(s, "free triple: three consecutive cycle vertices with no Breaker edge to the "
                   "targets exist");
}

}  // namespace walkergames
