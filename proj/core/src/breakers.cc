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
#include <sstream>

#include "strategy_util.h"
#include "walkergames/strategies.h"

namespace walkergames {

using internal::breaker_edge;
using internal::contains;
using internal::free_edge;

Move random_walker_move(const GameState& s, Player player, Rng& rng) {
  const auto moves = legal_moves(s, player);
  return moves[rng.below(moves.size())];
}

Move greedy_breaker_move(const GameState& s) {
  const auto pos = s.position(Player::kBreaker);
  if (!pos) {
    for (Vertex a = 0; a < s.n(); ++a) {
      for (Vertex b = a + 1; b < s.n(); ++b) {
        if (s.is_free(a, b)) return Move::place(a, b);
      }
    }
    return Move::pass();
  }
  const Vertex p = *pos;
  Vertex best = -1;
  for (Vertex u = 0; u < s.n(); ++u) {
    if (!s.unvisited(u) || !free_edge(s, p, u)) continue;
    if (best < 0 || degree_b(s, u) > degree_b(s, best)) best = u;
  }
  if (best >= 0) return Move::claim(best);
  if (const auto m = s.position(Player::kMaker); m && free_edge(s, p, *m)) return Move::claim(*m);
  return legal_moves(s, Player::kBreaker).front();
}

Move delaying_breaker_move(const GameState& s, StrategyMemory& mem, Rng& rng, bool greedy_phase1) {
  const auto maker_at = s.position(Player::kMaker);
  const auto breaker_at = s.position(Player::kBreaker);
  const auto unvisited = s.unvisited_vertices();
  auto& d = mem.designated;
  if (!d.contains("u1") && unvisited.size() == 3) {
    for (std::size_t i = 0; i < 3; ++i) d["u" + std::to_string(i + 1)] = unvisited[i];
  }
  const auto special = [&](Vertex v) {
    return d.contains("u1") && (d["u1"] == v || d["u2"] == v || d["u3"] == v);
  };
  const auto phase1 = [&] {
    return greedy_phase1 ? greedy_breaker_move(s) : random_walker_move(s, Player::kBreaker, rng);
  };

  if (!maker_at || !breaker_at || !d.contains("u1")) return phase1();
  const Vertex m = *maker_at;
  const Vertex p = *breaker_at;

  if (mem.stage == 0 && unvisited.size() == 2 && special(m)) {
    // Maker entered one of the last three: go and stand on another one.
    mem.stage = 1;
    if (contains(unvisited, p)) {
      const Vertex other = unvisited[0] == p ? unvisited[1] : unvisited[0];
      if (free_edge(s, p, other)) return Move::claim(other);
      // Already cut: keep standing on the pair.
      if (s.owner(p, other) == Owner::kBreaker) return Move::traverse(other);
      mem.log.push_back("delaying: edge between the last two was not free");
      return phase1();
    }
    for (Vertex u : unvisited) {
      if (free_edge(s, p, u)) {
        d["post"] = u;
        return Move::claim(u);
      }
    }
    for (Vertex u : unvisited) {
      if (s.owner(p, u) == Owner::kBreaker) {
        d["post"] = u;
        return Move::traverse(u);
      }
    }
    mem.log.push_back("delaying: no step onto a remaining special vertex");
    return phase1();
  }
  if (mem.stage >= 1 && unvisited.size() == 1) {
    const Vertex last = unvisited.front();
    if (m != last && s.owner(m, last) == Owner::kBreaker) {
      mem.stage = 2;
      return phase1();
    }
    if (m != last && free_edge(s, m, last) && (p == m || p == last)) {
      mem.stage = 2;
      return Move::claim(p == m ? last : m);
    }
    if (mem.stage == 1) {
      mem.stage = 2;
      mem.log.push_back("delaying: could not cut the final edge");
    }
  }
  return phase1();
}

Move isolating_breaker2_move(const GameState& s, StrategyMemory& mem) {
  auto& d = mem.designated;
  const auto maker_at = s.position(Player::kMaker);
  if (!d.contains("z")) {
    Vertex z = s.n() - 1;
    while (z > 0 && !s.unvisited(z)) --z;
    d["z"] = z;
  }
  const Vertex z = d["z"];
  const auto pos = s.position(Player::kBreaker);

  if (!pos) {
    if (maker_at && free_edge(s, z, *maker_at)) return Move::place(z, *maker_at);
    for (Vertex y = 0; y < s.n(); ++y) {
      if (free_edge(s, z, y)) return Move::place(z, y);
    }
    return Move::pass();
  }
  const Vertex p = *pos;
  if (p != z) {
    if (s.owner(p, z) == Owner::kBreaker) return Move::traverse(z);
    if (free_edge(s, p, z)) return Move::claim(z);
    mem.log.push_back("isolating2: no way back to z");
    return legal_moves(s, Player::kBreaker).front();
  }
  // At z: cut z-to-Maker, or pre-cut an edge Maker could step to next.
  if (maker_at && free_edge(s, z, *maker_at)) return Move::claim(*maker_at);
  if (maker_at) {
    for (Vertex y = 0; y < s.n(); ++y) {
      if (y == *maker_at || !free_edge(s, z, y)) continue;
      const Owner o = s.owner(*maker_at, y);
      if (o == Owner::kFree || o == Owner::kMaker) {
        mem.log.push_back("isolating2: z-maker already cut, pre-cut z-" + std::to_string(y));
        return Move::claim(y);
      }
    }
  }
  for (Vertex y = 0; y < s.n(); ++y) {
    if (free_edge(s, z, y)) return Move::claim(y);
  }
  for (Vertex y = 0; y < s.n(); ++y) {
    if (breaker_edge(s, z, y)) return Move::traverse(y);
  }
  return Move::pass();
}

namespace {

// Weights of the blocking heuristic.
constexpr int kCutMakerToU = 50;
constexpr int kIsolateMaker = 200;
constexpr int kCutEndgameEdge = 40;
constexpr int kTouchUnvisited = 5;
constexpr int kStandInEndgame = 20;
constexpr int kStandOnStart = 15;
constexpr std::size_t kEndgameSize = 4;

}  // namespace

Move adversarial_breaker_move(const GameState& s, StrategyMemory& mem, Rng& rng) {
  const auto maker_at = s.position(Player::kMaker);
  if (maker_at && !mem.v1) mem.v1 = maker_at;  // first Maker vertex seen
  const auto moves = legal_moves(s, Player::kBreaker);
  const auto pos = s.position(Player::kBreaker);
  if (!pos) return moves[rng.below(moves.size())];

  const Vertex p = *pos;
  const std::size_t u_count = static_cast<std::size_t>(s.unvisited_count());
  const bool endgame = u_count <= kEndgameSize;
  int maker_exits = 0;
  if (maker_at) {
    for (Vertex u = 0; u < s.n(); ++u) {
      if (s.unvisited(u) && free_edge(s, *maker_at, u)) ++maker_exits;
    }
  }

  std::vector<Move> best;
  int best_score = -1;
  for (const Move& mv : moves) {
    if (mv.kind == MoveKind::kPass) continue;
    const Vertex t = mv.to;
    int score = 0;
    if (mv.kind == MoveKind::kClaim) {
      const bool cuts_maker = maker_at && ((p == *maker_at && s.unvisited(t)) ||
                                           (t == *maker_at && s.unvisited(p)));
      if (cuts_maker) score += maker_exits == 1 ? kIsolateMaker : kCutMakerToU;
      if (endgame && s.unvisited(p) && s.unvisited(t)) score += kCutEndgameEdge;
      if (endgame && mem.v1 && ((p == *mem.v1 && s.unvisited(t)) || (t == *mem.v1 && s.unvisited(p)))) {
        score += kCutEndgameEdge;
      }
      for (Vertex e : {p, t}) {
        if (s.unvisited(e)) score += kTouchUnvisited + degree_b(s, e);
      }
    }
    if (endgame && s.unvisited(t)) score += kStandInEndgame;
    if (endgame && mem.v1 && t == *mem.v1) score += kStandOnStart;
    if (score > best_score) {
      best_score = score;
      best.clear();
    }
    if (score == best_score) best.push_back(mv);
  }
  if (best.empty()) return moves.front();
  return best[rng.below(best.size())];
}

std::vector<Move> parse_script(std::istream& in) {
  std::vector<Move> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    Move m;
    bool ok = true;
    if (kind == "P") {
      ok = static_cast<bool>(fields >> m.start >> m.to);
      m.kind = MoveKind::kPlaceAndClaim;
    } else if (kind == "C" || kind == "T") {
      ok = static_cast<bool>(fields >> m.to);
      m.kind = kind == "C" ? MoveKind::kClaim : MoveKind::kTraverse;
    } else if (kind != "X") {
      ok = false;
    }
    std::string extra;
    if (!ok || (fields >> extra)) {
      throw ScriptError("script line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
    out.push_back(m);
  }
  return out;
}

Move scripted_move(const GameState& s, Player player, Script& script) {
  if (script.next >= script.moves.size()) {
    throw ScriptError("script exhausted at entry " + std::to_string(script.next));
  }
  const std::size_t entry = script.next++;
  const Move m = script.moves[entry];
  try {
    check_legal(s, player, m);
  } catch (const IllegalMoveError& e) {
    throw ScriptError("script entry " + std::to_string(entry) + " ('" + to_string(m) +
                      "') is illegal: " + e.what());
  }
  return m;
}

}  // namespace walkergames
