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

#include "walkergames/oracle.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

namespace walkergames {

std::string_view to_string(SolveOutcome o) {
  return o == SolveOutcome::kMakerWins ? "maker-wins" : "breaker-prevents";
}

namespace {

constexpr int kInf = 0xFF;
constexpr std::int8_t kNone = -1;

// Compact position. Edges of K_n are numbered 0..n(n-1)/2-1.
struct Node {
  std::uint16_t maker = 0;
  std::uint16_t breaker = 0;
  std::array<std::int8_t, 2> pos{kNone, kNone};
  std::uint8_t to_move = 0;  // Player as integer
  std::uint8_t left = 1;
  std::uint8_t maker_count = 0;

  // 10 + 10 + 3 + 3 + 1 + 2 + 8 bits.
  std::uint64_t key() const {
    std::uint64_t k = maker;
    k = (k << 10) | breaker;
    k = (k << 3) | static_cast<std::uint64_t>(pos[0] + 1);
    k = (k << 3) | static_cast<std::uint64_t>(pos[1] + 1);
    k = (k << 1) | to_move;
    k = (k << 2) | left;
    k = (k << 8) | maker_count;
    return k;
  }
};

class Solver {
 public:
  Solver(int n, Goal goal, Bias bias, int cap, const SolveOptions& opts)
      : n_(n), goal_(goal), bias_(bias), cap_(cap), opts_(opts) {
    int e = 0;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        edge_[a][b] = edge_[b][a] = e;
        ends_[e++] = {a, b};
      }
    }
    if (goal == Goal::kHamilton) enumerate_cycles();
  }

  int value(const Node& node, const GameState* shadow) {
    if (won(node.maker)) return node.maker_count;
    if (node.maker_count >= cap_) return kInf;
    const auto key = node.key();
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++nodes_;
    const Player p = static_cast<Player>(node.to_move);
    const auto moves = generate(node);
    if (shadow) compare_with_engine(*shadow, p, moves);
    int best;
    if (p == Player::kMaker && moves.front().kind == MoveKind::kPass) {
      best = kInf;  // a Maker with no step has no step ever again
    } else {
      best = p == Player::kMaker ? kInf : -1;
      for (const Move& m : moves) {
        const Node child = apply(node, m);
        int v;
        if (shadow) {
          const GameState next = apply_move(*shadow, p, m);
          v = value(child, &next);
        } else {
          v = value(child, nullptr);
        }
        best = p == Player::kMaker ? std::min(best, v) : std::max(best, v);
        if ((p == Player::kMaker && best <= node.maker_count + 1) ||
            (p == Player::kBreaker && best == kInf)) {
          break;  // cannot be improved
        }
      }
    }
    if (memo_.size() >= opts_.memo_limit) {
      throw OracleResourceError("oracle memo exceeded " + std::to_string(opts_.memo_limit) +
                                " entries");
    }
    memo_.emplace(key, best);
    return best;
  }

  std::vector<Move> generate(const Node& node) const {
    std::vector<Move> out;
    const int p = node.to_move;
    if (node.pos[p] == kNone) {
      for (Vertex a = 0; a < n_; ++a) {
        for (Vertex b = 0; b < n_; ++b) {
          if (a != b && is_free(node, a, b)) out.push_back(Move::place(a, b));
        }
      }
    } else {
      const Vertex at = node.pos[p];
      const std::uint16_t own = p == 0 ? node.maker : node.breaker;
      for (Vertex t = 0; t < n_; ++t) {
        if (t != at && is_free(node, at, t)) out.push_back(Move::claim(t));
      }
      for (Vertex t = 0; t < n_; ++t) {
        if (t != at && (own >> edge_[at][t] & 1)) out.push_back(Move::traverse(t));
      }
    }
    if (out.empty()) out.push_back(Move::pass());
    return out;
  }

  Node apply(Node node, const Move& m) const {
    const int p = node.to_move;
    std::uint16_t& own = p == 0 ? node.maker : node.breaker;
    switch (m.kind) {
      case MoveKind::kPlaceAndClaim:
        own |= static_cast<std::uint16_t>(1u << edge_[m.start][m.to]);
        node.pos[p] = static_cast<std::int8_t>(m.to);
        break;
      case MoveKind::kClaim:
        own |= static_cast<std::uint16_t>(1u << edge_[node.pos[p]][m.to]);
        node.pos[p] = static_cast<std::int8_t>(m.to);
        break;
      case MoveKind::kTraverse:
        node.pos[p] = static_cast<std::int8_t>(m.to);
        break;
      case MoveKind::kPass:
        break;
    }
    if (p == 0 && m.kind != MoveKind::kPass) ++node.maker_count;
    if (--node.left == 0) {
      node.to_move = static_cast<std::uint8_t>(1 - p);
      node.left = static_cast<std::uint8_t>(bias_.for_player(static_cast<Player>(1 - p)));
    }
    return node;
  }

  bool won(std::uint16_t maker) const {
    if (goal_ == Goal::kConnectivity) {
      std::uint32_t seen = 0;
      for (int e = 0; e < n_ * (n_ - 1) / 2; ++e) {
        if (maker >> e & 1) seen |= (1u << ends_[e].first) | (1u << ends_[e].second);
      }
      return seen == (1u << n_) - 1;
    }
    return std::any_of(cycles_.begin(), cycles_.end(),
                       [&](std::uint16_t c) { return (maker & c) == c; });
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t legality_checks() const { return checks_; }

 private:
  bool is_free(const Node& node, Vertex a, Vertex b) const {
    return !((node.maker | node.breaker) >> edge_[a][b] & 1);
  }

  void enumerate_cycles() {
    std::vector<Vertex> perm(static_cast<std::size_t>(n_));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (perm[0] != 0) break;
      std::uint16_t mask = 0;
      for (int i = 0; i < n_; ++i) mask |= static_cast<std::uint16_t>(1u << edge_[perm[i]][perm[(i + 1) % n_]]);
      if (std::find(cycles_.begin(), cycles_.end(), mask) == cycles_.end()) cycles_.push_back(mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void compare_with_engine(const GameState& s, Player p, std::vector<Move> mine) {
    auto theirs = legal_moves(s, p);
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    ++checks_;
    if (mine != theirs) {
      throw std::logic_error("oracle and engine disagree on legal moves at " + snapshot_of(s));
    }
  }

  static std::string snapshot_of(const GameState& s) {
    return "n=" + std::to_string(s.n()) + " round=" + std::to_string(s.round());
  }

  int n_;
  Goal goal_;
  Bias bias_;
  int cap_;
  SolveOptions opts_;
  std::array<std::array<int, kOracleMaxN>, kOracleMaxN> edge_{};
  std::array<std::pair<Vertex, Vertex>, 10> ends_{};
  std::vector<std::uint16_t> cycles_;
  std::unordered_map<std::uint64_t, std::uint8_t> memo_;
  std::uint64_t nodes_ = 0;
  std::uint64_t checks_ = 0;
};

Node to_node(const GameState& s) {
  Node node;
  int e = 0;
  for (Vertex a = 0; a < s.n(); ++a) {
    for (Vertex b = a + 1; b < s.n(); ++b, ++e) {
      if (s.owner(a, b) == Owner::kMaker) node.maker |= static_cast<std::uint16_t>(1u << e);
      if (s.owner(a, b) == Owner::kBreaker) node.breaker |= static_cast<std::uint16_t>(1u << e);
    }
  }
  for (Player p : {Player::kMaker, Player::kBreaker}) {
    if (const auto v = s.position(p)) node.pos[static_cast<int>(p)] = static_cast<std::int8_t>(*v);
  }
  node.to_move = static_cast<std::uint8_t>(s.to_move());
  node.left = static_cast<std::uint8_t>(s.moves_left_in_turn());
  node.maker_count = static_cast<std::uint8_t>(s.move_count(Player::kMaker));
  return node;
}

bool goal_reached(const GameState& s, Goal goal) {
  return goal == Goal::kConnectivity ? connectivity_won(s) : hamilton_won(s);
}

}  // namespace

SolveResult solve_from(const GameState& start, Goal game, int move_cap, const SolveOptions& opts) {
  if (start.n() < 3 || start.n() > kOracleMaxN) {
    throw std::invalid_argument("oracle supports 3 <= n <= " + std::to_string(kOracleMaxN));
  }
  if (move_cap < 0 || move_cap > kOracleMaxCap) {
    throw std::invalid_argument("oracle move cap must be in [0, " + std::to_string(kOracleMaxCap) +
                                "]");
  }
  const Bias bias = start.bias();
  if (bias.maker > kOracleMaxBias || bias.breaker > kOracleMaxBias) {
    throw std::invalid_argument("oracle supports biases up to " + std::to_string(kOracleMaxBias));
  }
  if (start.move_count(Player::kMaker) > move_cap) {
    throw std::invalid_argument("start position is already past the move cap");
  }

  Solver solver(start.n(), game, bias, move_cap, opts);
  Node node = to_node(start);
  const GameState* shadow = opts.check_engine_legality ? &start : nullptr;
  const int v = solver.value(node, shadow);

  SolveResult r;
  r.game = game;
  r.n = start.n();
  r.first_player = start.first_player();
  r.bias = bias;
  r.move_cap = move_cap;
  r.outcome = v == kInf ? SolveOutcome::kBreakerPrevents : SolveOutcome::kMakerWins;
  r.maker_moves = v == kInf ? 0 : v;
  r.start = start;

  // Principal variation: follow children that keep the root value, lowest
  // generator index first.
  while (!solver.won(node.maker) && node.maker_count < move_cap) {
    const Player p = static_cast<Player>(node.to_move);
    const auto moves = solver.generate(node);
    if (p == Player::kMaker && moves.front().kind == MoveKind::kPass) break;
    const int target = solver.value(node, nullptr);
    const Move* chosen = &moves.front();
    for (const Move& m : moves) {
      if (solver.value(solver.apply(node, m), nullptr) == target) {
        chosen = &m;
        break;
      }
    }
    r.principal_variation.emplace_back(p, *chosen);
    node = solver.apply(node, *chosen);
  }
  r.nodes = solver.nodes();
  r.legality_checks = solver.legality_checks();
  return r;
}

SolveResult solve(int n, Goal game, Player first_player, int move_cap, Bias bias,
                  const SolveOptions& options) {
  if (n < 3 || n > kOracleMaxN) {
    throw std::invalid_argument("oracle supports 3 <= n <= " + std::to_string(kOracleMaxN));
  }
  return solve_from(new_game(n, bias, first_player), game, move_cap, options);
}

bool cross_validate(const SolveResult& r) {
  GameState s = r.start;
  bool reached = goal_reached(s, r.game);
  for (const auto& [p, m] : r.principal_variation) {
    if (reached) return false;  // moves after the end
    try {
      s.apply(p, m);
    } catch (const std::exception&) {
      return false;
    }
    if (p == Player::kMaker) reached = goal_reached(s, r.game);
  }
  if (r.outcome == SolveOutcome::kMakerWins) {
    return reached && s.move_count(Player::kMaker) == r.maker_moves;
  }
  if (reached) return false;
  // Breaker's line ends with Maker out of moves or blocked.
  if (s.move_count(Player::kMaker) >= r.move_cap) return true;
  return s.to_move() == Player::kMaker && legal_moves(s, Player::kMaker).front().kind == MoveKind::kPass;
}

}  // namespace walkergames
