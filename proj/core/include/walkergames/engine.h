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

#ifndef WALKERGAMES_ENGINE_H_
#define WALKERGAMES_ENGINE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace walkergames {

// Vertices of K_n are 0..n-1.
using Vertex = int;

enum class Player : std::uint8_t { kMaker = 0, kBreaker = 1 };

constexpr Player opponent(Player p) {
  return p == Player::kMaker ? Player::kBreaker : Player::kMaker;
}
std::string_view to_string(Player p);
std::optional<Player> player_from_string(std::string_view s);

enum class Owner : std::uint8_t { kFree = 0, kMaker = 1, kBreaker = 2 };

constexpr Owner owner_of(Player p) {
  return p == Player::kMaker ? Owner::kMaker : Owner::kBreaker;
}

// Unordered pair of distinct vertices, stored with the smaller index first.
class Edge {
 public:
  Edge(Vertex a, Vertex b);

  Vertex lo() const { return lo_; }
  Vertex hi() const { return hi_; }
  bool touches(Vertex v) const { return v == lo_ || v == hi_; }
  Vertex other(Vertex v) const { return v == lo_ ? hi_ : lo_; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Vertex lo_;
  Vertex hi_;
};

struct Bias {
  int maker = 1;
  int breaker = 1;

  int for_player(Player p) const { return p == Player::kMaker ? maker : breaker; }
  friend bool operator==(const Bias&, const Bias&) = default;
};

enum class MoveKind : std::uint8_t { kPlaceAndClaim, kClaim, kTraverse, kPass };

// One walker step. `start` is only meaningful for kPlaceAndClaim and `to`
// is unused for kPass.
struct Move {
  MoveKind kind = MoveKind::kPass;
  Vertex start = -1;
  Vertex to = -1;

  static Move place(Vertex s, Vertex t) { return {MoveKind::kPlaceAndClaim, s, t}; }
  static Move claim(Vertex t) { return {MoveKind::kClaim, -1, t}; }
  static Move traverse(Vertex t) { return {MoveKind::kTraverse, -1, t}; }
  static Move pass() { return {}; }

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// Short text form used by scripts and diagnostics: "P s t", "C t", "T t", "X".
std::string to_string(const Move& m);

enum class IllegalMoveReason {
  kWrongPlayer,
  kVertexOutOfRange,
  kLoop,
  kAlreadyPlaced,
  kNotPlaced,
  kOpponentEdge,
  kEdgeNotFree,
  kEdgeNotOwn,
  kPassWithMovesAvailable,
};
std::string_view to_string(IllegalMoveReason r);

class IllegalMoveError : public std::runtime_error {
 public:
  IllegalMoveError(IllegalMoveReason reason, const std::string& detail);
  IllegalMoveReason reason() const { return reason_; }

 private:
  IllegalMoveReason reason_;
};

// What a player did last, used by strategies and monitors that reason about
// the opponent's most recent step.
struct LastStep {
  Move move;
  std::optional<Vertex> from;  // position before the step
  friend bool operator==(const LastStep&, const LastStep&) = default;
};

// Full board of a walker-versus-walker game on K_n.
//
// Ownership never reverts: an edge goes Free -> Maker or Free -> Breaker once.
// The unvisited set U and the Breaker-touched set V(B) are maintained
// incrementally; recompute_* rebuild them from the ownership map.
class GameState {
 public:
  int n() const { return n_; }
  Owner owner(Vertex a, Vertex b) const { return owner_[index(a, b)]; }
  Owner owner(const Edge& e) const { return owner(e.lo(), e.hi()); }
  bool is_free(Vertex a, Vertex b) const { return owner(a, b) == Owner::kFree; }

  std::optional<Vertex> position(Player p) const { return pos_[slot(p)]; }
  const Bias& bias() const { return bias_; }
  Player first_player() const { return first_; }
  Player to_move() const { return to_move_; }
  int moves_left_in_turn() const { return moves_left_; }
  int round() const { return round_; }
  // Non-pass moves made by the player so far.
  int move_count(Player p) const { return move_count_[slot(p)]; }
  int free_edge_count() const { return free_edges_; }

  bool unvisited(Vertex v) const { return maker_degree_[v] == 0; }
  int unvisited_count() const { return unvisited_count_; }
  std::vector<Vertex> unvisited_vertices() const;
  bool breaker_touched(Vertex v) const { return breaker_degree_[v] > 0; }
  std::vector<Vertex> breaker_touched_vertices() const;

  int degree(Player p, Vertex x) const {
    return p == Player::kMaker ? maker_degree_[x] : breaker_degree_[x];
  }

  // Edges claimed by the player, in claim order.
  const std::vector<Edge>& claimed_edges(Player p) const { return claimed_[slot(p)]; }
  const std::optional<LastStep>& last_step(Player p) const { return last_[slot(p)]; }

  // Mutating counterpart of apply_move(); throws IllegalMoveError.
  void apply(Player player, const Move& move);

  // Rebuilt from the ownership map, for consistency checks.
  std::vector<Vertex> recompute_unvisited() const;
  std::vector<Vertex> recompute_breaker_touched() const;

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  friend GameState new_game(int n, Bias bias, Player first_player);

  static int slot(Player p) { return static_cast<int>(p); }
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }
  void set_owner(Vertex a, Vertex b, Owner o);
  void end_step(Player player);

  int n_ = 0;
  std::vector<Owner> owner_;  // n*n, symmetric
  std::array<std::optional<Vertex>, 2> pos_{};
  std::vector<int> maker_degree_;
  std::vector<int> breaker_degree_;
  int unvisited_count_ = 0;
  int free_edges_ = 0;
  int round_ = 0;
  Bias bias_{};
  Player first_ = Player::kBreaker;
  Player to_move_ = Player::kBreaker;
  int moves_left_ = 1;
  std::array<int, 2> move_count_{};
  std::array<std::vector<Edge>, 2> claimed_{};
  std::array<std::optional<LastStep>, 2> last_{};
};

// Throws std::invalid_argument for n < 3 or a non-positive bias.
GameState new_game(int n, Bias bias = {}, Player first_player = Player::kBreaker);

// Every legal step for `player`, in a fixed order (PlaceAndClaim by (s, t),
// then Claim by target, then Traverse by target). Returns {Pass} when the
// walker is blocked. Throws IllegalMoveError if it is not `player`'s turn.
std::vector<Move> legal_moves(const GameState& state, Player player);

// Throws IllegalMoveError naming the violated rule.
void check_legal(const GameState& state, Player player, const Move& move);

GameState apply_move(const GameState& state, Player player, const Move& move);

// Breaker (resp. Maker) edges at x, optionally only those ending in `restrict_to`.
int degree_b(const GameState& state, Vertex x);
int degree_b(const GameState& state, Vertex x, std::span<const Vertex> restrict_to);
int degree_m(const GameState& state, Vertex x);
int degree_m(const GameState& state, Vertex x, std::span<const Vertex> restrict_to);

bool connectivity_won(const GameState& state);

class MalformedCertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Largest n for which hamilton_won() searches without a certificate.
inline constexpr int kHamiltonSearchLimit = 20;

// True iff `cycle` lists each vertex exactly once and each cyclically
// consecutive pair is a Maker edge. Without a certificate the Maker graph is
// searched exhaustively (n <= kHamiltonSearchLimit, else std::domain_error).
bool hamilton_won(const GameState& state,
                  std::optional<std::span<const Vertex>> certificate = std::nullopt);

// True iff `cycle` (distinct vertices, length >= 3) is a cycle of Maker edges.
// Throws MalformedCertificateError on repeats or out-of-range vertices.
bool is_maker_cycle(const GameState& state, std::span<const Vertex> cycle);

}  // namespace walkergames

#endif  // WALKERGAMES_ENGINE_H_
