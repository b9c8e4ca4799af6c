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

#include "walkergames/engine.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace walkergames {

std::string_view to_string(Player p) {
  return p == Player::kMaker ? "maker" : "breaker";
}

std::optional<Player> player_from_string(std::string_view s) {
  if (s == "maker") return Player::kMaker;
  if (s == "breaker") return Player::kBreaker;
  return std::nullopt;
}

Edge::Edge(Vertex a, Vertex b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("edge endpoints must be distinct");
}

std::string to_string(const Move& m) {
  std::ostringstream out;
  switch (m.kind) {
    case MoveKind::kPlaceAndClaim:
      out << "P " << m.start << ' ' << m.to;
      break;
    case MoveKind::kClaim:
      out << "C " << m.to;
      break;
    case MoveKind::kTraverse:
      out << "T " << m.to;
      break;
    case MoveKind::kPass:
      out << "X";
      break;
  }
  return out.str();
}

std::string_view to_string(IllegalMoveReason r) {
  switch (r) {
    case IllegalMoveReason::kWrongPlayer: return "wrong player to move";
    case IllegalMoveReason::kVertexOutOfRange: return "vertex out of range";
    case IllegalMoveReason::kLoop: return "edge would be a loop";
    case IllegalMoveReason::kAlreadyPlaced: return "wrong kind: walker already placed";
    case IllegalMoveReason::kNotPlaced: return "wrong kind: walker not placed yet";
    case IllegalMoveReason::kOpponentEdge: return "opponent edge";
    case IllegalMoveReason::kEdgeNotFree: return "edge not free";
    case IllegalMoveReason::kEdgeNotOwn: return "edge not owned by mover";
    case IllegalMoveReason::kPassWithMovesAvailable: return "pass while moves are available";
  }
  return "unknown";
}

IllegalMoveError::IllegalMoveError(IllegalMoveReason reason, const std::string& detail)
    : std::runtime_error(std::string(to_string(reason)) + ": " + detail), reason_(reason) {}

GameState new_game(int n, Bias bias, Player first_player) {
  if (n < 3) throw std::invalid_argument("board needs n >= 3, got " + std::to_string(n));
  if (bias.maker < 1 || bias.breaker < 1) throw std::invalid_argument("bias must be positive");
  GameState s;
  s.n_ = n;
  s.owner_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Owner::kFree);
  s.maker_degree_.assign(n, 0);
  s.breaker_degree_.assign(n, 0);
  s.unvisited_count_ = n;
  s.free_edges_ = n * (n - 1) / 2;
  s.bias_ = bias;
  s.first_ = first_player;
  s.to_move_ = first_player;
  s.moves_left_ = bias.for_player(first_player);
  return s;
}

std::vector<Vertex> GameState::unvisited_vertices() const {
  std::vector<Vertex> out;
  out.reserve(unvisited_count_);
  for (Vertex v = 0; v < n_; ++v) {
    if (maker_degree_[v] == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> GameState::breaker_touched_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (breaker_degree_[v] > 0) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> GameState::recompute_unvisited() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    bool touched = false;
    for (Vertex u = 0; u < n_ && !touched; ++u) {
      touched = u != v && owner(u, v) == Owner::kMaker;
    }
    if (!touched) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> GameState::recompute_breaker_touched() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex u = 0; u < n_; ++u) {
      if (u != v && owner(u, v) == Owner::kBreaker) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

void GameState::set_owner(Vertex a, Vertex b, Owner o) {
  owner_[index(a, b)] = o;
  owner_[index(b, a)] = o;
  --free_edges_;
  if (o == Owner::kMaker) {
    if (maker_degree_[a]++ == 0) --unvisited_count_;
    if (maker_degree_[b]++ == 0) --unvisited_count_;
    claimed_[slot(Player::kMaker)].emplace_back(a, b);
  } else {
    ++breaker_degree_[a];
    ++breaker_degree_[b];
    claimed_[slot(Player::kBreaker)].emplace_back(a, b);
  }
}

void GameState::end_step(Player player) {
  if (--moves_left_ > 0) return;
  to_move_ = opponent(player);
  moves_left_ = bias_.for_player(to_move_);
  if (to_move_ == first_) ++round_;
}

namespace {

std::string describe(const Move& m, Player p) {
  return std::string(to_string(p)) + " move '" + to_string(m) + "'";
}

bool has_any_step(const GameState& s, Player p) {
  const Owner own = owner_of(p);
  const auto pos = s.position(p);
  if (!pos) return s.free_edge_count() > 0;
  for (Vertex t = 0; t < s.n(); ++t) {
    if (t == *pos) continue;
    const Owner o = s.owner(*pos, t);
    if (o == Owner::kFree || o == own) return true;
  }
  return false;
}

}  // namespace

void check_legal(const GameState& s, Player player, const Move& move) {
  const auto fail = [&](IllegalMoveReason r) {
    throw IllegalMoveError(r, describe(move, player));
  };
  if (player != s.to_move()) fail(IllegalMoveReason::kWrongPlayer);
  const auto in_range = [&](Vertex v) { return v >= 0 && v < s.n(); };
  const auto pos = s.position(player);
  const Owner own = owner_of(player);
  switch (move.kind) {
    case MoveKind::kPass:
      if (has_any_step(s, player)) fail(IllegalMoveReason::kPassWithMovesAvailable);
      return;
    case MoveKind::kPlaceAndClaim:
      if (pos) fail(IllegalMoveReason::kAlreadyPlaced);
      if (!in_range(move.start) || !in_range(move.to)) fail(IllegalMoveReason::kVertexOutOfRange);
      if (move.start == move.to) fail(IllegalMoveReason::kLoop);
      if (s.owner(move.start, move.to) == owner_of(opponent(player))) {
        fail(IllegalMoveReason::kOpponentEdge);
      }
      if (s.owner(move.start, move.to) != Owner::kFree) fail(IllegalMoveReason::kEdgeNotFree);
      return;
    case MoveKind::kClaim:
    case MoveKind::kTraverse: {
      if (!pos) fail(IllegalMoveReason::kNotPlaced);
      if (!in_range(move.to)) fail(IllegalMoveReason::kVertexOutOfRange);
      if (move.to == *pos) fail(IllegalMoveReason::kLoop);
      const Owner o = s.owner(*pos, move.to);
      if (o == owner_of(opponent(player))) fail(IllegalMoveReason::kOpponentEdge);
      if (move.kind == MoveKind::kClaim && o != Owner::kFree) fail(IllegalMoveReason::kEdgeNotFree);
      if (move.kind == MoveKind::kTraverse && o != own) fail(IllegalMoveReason::kEdgeNotOwn);
      return;
    }
  }
}

void GameState::apply(Player player, const Move& move) {
  check_legal(*this, player, move);
  const int p = slot(player);
  LastStep step{move, pos_[p]};
  switch (move.kind) {
    case MoveKind::kPass:
      break;
    case MoveKind::kPlaceAndClaim:
      set_owner(move.start, move.to, owner_of(player));
      pos_[p] = move.to;
      ++move_count_[p];
      break;
    case MoveKind::kClaim:
      set_owner(*pos_[p], move.to, owner_of(player));
      pos_[p] = move.to;
      ++move_count_[p];
      break;
    case MoveKind::kTraverse:
      pos_[p] = move.to;
      ++move_count_[p];
      break;
  }
  last_[p] = step;
  end_step(player);
}

std::vector<Move> legal_moves(const GameState& s, Player player) {
  if (player != s.to_move()) {
    throw IllegalMoveError(IllegalMoveReason::kWrongPlayer,
                           std::string(to_string(player)) + " asked for moves");
  }
  std::vector<Move> out;
  const auto pos = s.position(player);
  if (!pos) {
    for (Vertex a = 0; a < s.n(); ++a) {
      for (Vertex b = 0; b < s.n(); ++b) {
        if (a != b && s.is_free(a, b)) out.push_back(Move::place(a, b));
      }
    }
  } else {
    const Owner own = owner_of(player);
    for (Vertex t = 0; t < s.n(); ++t) {
      if (t != *pos && s.is_free(*pos, t)) out.push_back(Move::claim(t));
    }
    for (Vertex t = 0; t < s.n(); ++t) {
      if (t != *pos && s.owner(*pos, t) == own) out.push_back(Move::traverse(t));
    }
  }
  if (out.empty()) out.push_back(Move::pass());
  return out;
}

GameState apply_move(const GameState& state, Player player, const Move& move) {
  GameState next = state;
  next.apply(player, move);
  return next;
}

int degree_b(const GameState& s, Vertex x) { return s.degree(Player::kBreaker, x); }
int degree_m(const GameState& s, Vertex x) { return s.degree(Player::kMaker, x); }

namespace {

int degree_towards(const GameState& s, Owner o, Vertex x, std::span<const Vertex> restrict_to) {
  int d = 0;
  for (Vertex v : restrict_to) {
    if (v != x && s.owner(x, v) == o) ++d;
  }
  return d;
}

}  // namespace

int degree_b(const GameState& s, Vertex x, std::span<const Vertex> restrict_to) {
  return degree_towards(s, Owner::kBreaker, x, restrict_to);
}

int degree_m(const GameState& s, Vertex x, std::span<const Vertex> restrict_to) {
  return degree_towards(s, Owner::kMaker, x, restrict_to);
}

bool connectivity_won(const GameState& s) { return s.unvisited_count() == 0; }

bool is_maker_cycle(const GameState& s, std::span<const Vertex> cycle) {
  std::vector<bool> seen(s.n(), false);
  for (Vertex v : cycle) {
    if (v < 0 || v >= s.n()) throw MalformedCertificateError("certificate vertex out of range");
    if (seen[v]) throw MalformedCertificateError("certificate repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
  if (cycle.size() < 3) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    if (s.owner(a, b) != Owner::kMaker) return false;
  }
  return true;
}

namespace {

// Held-Karp style reachability over subsets containing vertex 0.
bool search_hamilton_cycle(const GameState& s) {
  const int n = s.n();
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : s.claimed_edges(Player::kMaker)) {
    adj[e.lo()] |= 1u << e.hi();
    adj[e.hi()] |= 1u << e.lo();
  }
  for (Vertex v = 0; v < n; ++v) {
    if (std::popcount(adj[v]) < 2) return false;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // ends[mask] = set of v such that a path 0 -> v covers exactly mask.
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(1) << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!(mask & 1u) || ends[mask] == 0) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (!(ends[mask] >> v & 1u)) continue;
      std::uint32_t next = adj[v] & ~mask;
      while (next) {
        const int u = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  return (ends[full] & adj[0]) != 0;
}

}  // namespace

bool hamilton_won(const GameState& s, std::optional<std::span<const Vertex>> certificate) {
  if (certificate) {
    if (static_cast<int>(certificate->size()) != s.n()) {
      throw MalformedCertificateError("certificate length " + std::to_string(certificate->size()) +
                                      " != n = " + std::to_string(s.n()));
    }
    return is_maker_cycle(s, *certificate);
  }
  if (s.n() > kHamiltonSearchLimit) {
    throw std::domain_error("certificate-free Hamilton search is limited to n <= " +
                            std::to_string(kHamiltonSearchLimit));
  }
  return search_hamilton_cycle(s);
}

}  // namespace walkergames
