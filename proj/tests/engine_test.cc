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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_util.h"
#include "walkergames/engine.h"
#include "walkergames/rng.h"

namespace walkergames {
namespace {

using testing::play;

TEST(Edge, CanonicalOrder) {
  EXPECT_EQ(Edge(5, 2), Edge(2, 5));
  EXPECT_EQ(Edge(5, 2).lo(), 2);
  EXPECT_EQ(Edge(5, 2).other(2), 5);
  EXPECT_THROW(Edge(3, 3), std::invalid_argument);
}

TEST(NewGame, SmallBoard) {
  const auto s = new_game(3);
  EXPECT_EQ(s.free_edge_count(), 3);
  EXPECT_EQ(s.unvisited_vertices(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(s.to_move(), Player::kBreaker);
  EXPECT_EQ(s.round(), 0);
  EXPECT_FALSE(s.position(Player::kMaker));
  EXPECT_FALSE(s.position(Player::kBreaker));
}

TEST(NewGame, EdgeCountAtHundred) { EXPECT_EQ(new_game(100).free_edge_count(), 4950); }

TEST(NewGame, BreakerGetsTwoStepsAtOneTwo) {
  auto s = new_game(6, {1, 2}, Player::kMaker);
  EXPECT_EQ(s.moves_left_in_turn(), 1);
  s.apply(Player::kMaker, Move::place(0, 1));
  EXPECT_EQ(s.to_move(), Player::kBreaker);
  EXPECT_EQ(s.moves_left_in_turn(), 2);
  s.apply(Player::kBreaker, Move::place(2, 3));
  EXPECT_EQ(s.to_move(), Player::kBreaker);
  s.apply(Player::kBreaker, Move::claim(4));
  EXPECT_EQ(s.to_move(), Player::kMaker);
  EXPECT_EQ(s.round(), 1);
}

TEST(NewGame, RejectsTinyBoardsAndBadBias) {
  EXPECT_THROW(new_game(2), std::invalid_argument);
  EXPECT_THROW(new_game(5, {0, 1}), std::invalid_argument);
}

TEST(LegalMoves, FreshBoardOffersEveryOrderedPair) {
  const auto s = new_game(4);
  const auto moves = legal_moves(s, Player::kBreaker);
  std::set<std::pair<Vertex, Vertex>> expected;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 0; b < 4; ++b) {
      if (a != b) expected.insert({a, b});
    }
  }
  std::set<std::pair<Vertex, Vertex>> got;
  for (const Move& m : moves) {
    ASSERT_EQ(m.kind, MoveKind::kPlaceAndClaim);
    got.insert({m.start, m.to});
  }
  EXPECT_EQ(moves.size(), 12u);
  EXPECT_EQ(got, expected);
}

TEST(LegalMoves, WrongPlayerIsRejected) {
  EXPECT_THROW(legal_moves(new_game(4), Player::kMaker), IllegalMoveError);
}

TEST(LegalMoves, BlockedWalkerMayOnlyPass) {
  // At (1:3) Breaker claims all of K_3 before Maker places her walker.
  auto s = new_game(3, {1, 3}, Player::kBreaker);
  s = play(s, "P 0 1; C 2; C 0");
  ASSERT_EQ(s.to_move(), Player::kMaker);
  EXPECT_EQ(legal_moves(s, Player::kMaker), std::vector<Move>{Move::pass()});
  s.apply(Player::kMaker, Move::pass());
  EXPECT_EQ(s.move_count(Player::kMaker), 0);
  EXPECT_EQ(s.round(), 1);
}

TEST(LegalMoves, WalkerMovesAfterPlacement) {
  const auto s = play(5, Player::kMaker, "P 0 1");
  // Breaker's turn now; let him claim away from Maker.
  const auto t = play(s, "P 3 4");
  const auto moves = legal_moves(t, Player::kMaker);
  EXPECT_NE(std::find(moves.begin(), moves.end(), Move::traverse(0)), moves.end());
  for (Vertex v : {2, 3, 4}) {
    EXPECT_NE(std::find(moves.begin(), moves.end(), Move::claim(v)), moves.end());
  }
  EXPECT_EQ(moves.size(), 4u);
}

TEST(ApplyMove, ClaimRemovesOneFreeEdge) {
  const auto s = play(6, Player::kBreaker, "P 0 1; P 2 3");
  const auto t = apply_move(s, Player::kBreaker, Move::claim(4));
  EXPECT_EQ(t.free_edge_count(), s.free_edge_count() - 1);
}

TEST(ApplyMove, PlaceAndClaimVisitsBothEnds) {
  const auto s = play(8, Player::kBreaker, "P 0 1");
  const auto t = apply_move(s, Player::kMaker, Move::place(3, 5));
  EXPECT_EQ(t.unvisited_count(), s.unvisited_count() - 2);
  EXPECT_TRUE(!t.unvisited(3) && !t.unvisited(5));
}

TEST(ApplyMove, TraverseClaimsNothing) {
  const auto s = play(6, Player::kBreaker, "P 0 1; P 2 3; C 4");
  const auto t = apply_move(s, Player::kMaker, Move::traverse(2));
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) EXPECT_EQ(s.owner(a, b), t.owner(a, b));
  }
  EXPECT_EQ(t.position(Player::kMaker), 2);
}

TEST(ApplyMove, NamesTheViolatedRule) {
  const auto s = play(6, Player::kBreaker, "P 0 1; P 1 2");
  const auto reason = [&](Player p, Move m) {
    try {
      check_legal(s, p, m);
    } catch (const IllegalMoveError& e) {
      return e.reason();
    }
    return IllegalMoveReason::kWrongPlayer;  // sentinel: no error
  };
  EXPECT_EQ(reason(Player::kBreaker, Move::claim(2)), IllegalMoveReason::kOpponentEdge);
  EXPECT_EQ(reason(Player::kBreaker, Move::traverse(2)), IllegalMoveReason::kOpponentEdge);
  EXPECT_EQ(reason(Player::kBreaker, Move::claim(0)), IllegalMoveReason::kEdgeNotFree);
  EXPECT_EQ(reason(Player::kBreaker, Move::traverse(3)), IllegalMoveReason::kEdgeNotOwn);
  EXPECT_EQ(reason(Player::kBreaker, Move::place(4, 5)), IllegalMoveReason::kAlreadyPlaced);
  EXPECT_EQ(reason(Player::kBreaker, Move::claim(1)), IllegalMoveReason::kLoop);
  EXPECT_EQ(reason(Player::kBreaker, Move::claim(9)), IllegalMoveReason::kVertexOutOfRange);
  EXPECT_EQ(reason(Player::kBreaker, Move::pass()), IllegalMoveReason::kPassWithMovesAvailable);
  EXPECT_THROW(check_legal(s, Player::kMaker, Move::claim(3)), IllegalMoveError);
}

TEST(Degree, BreakerWalkCountsBothEdgesAtTheMiddle) {
  const auto s = play(6, Player::kBreaker, "P 0 1; P 4 5; C 2");
  EXPECT_EQ(degree_b(s, 1), 2);
  EXPECT_EQ(degree_b(s, 0), 1);
  const std::vector<Vertex> only{2};
  EXPECT_EQ(degree_b(s, 1, only), 1);
  EXPECT_EQ(degree_m(s, 4), 1);
  EXPECT_EQ(degree_b(new_game(5), 3), 0);
}

TEST(Win, ConnectivityNeedsEveryVertex) {
  EXPECT_FALSE(connectivity_won(new_game(3)));
  const auto one = play(3, Player::kMaker, "P 0 1");
  EXPECT_FALSE(connectivity_won(one));
  // Breaker stays away from 1-2.
  const auto two = play(one, "P 2 0; C 2");
  EXPECT_TRUE(connectivity_won(two));
}

TEST(Win, HamiltonWithAndWithoutCertificate) {
  // Maker closes 0-1-2-3-0 on K_6; Breaker walks 4-5-3-4 meanwhile.
  const auto s = play(6, Player::kMaker, "P 0 1; P 4 5; C 2; C 3; C 3; C 4; C 0");
  const std::vector<Vertex> cycle{0, 1, 2, 3};
  EXPECT_TRUE(is_maker_cycle(s, cycle));
  EXPECT_THROW(hamilton_won(s, std::span<const Vertex>(cycle)), MalformedCertificateError);
  EXPECT_FALSE(hamilton_won(s));

  // On K_4 Breaker only ever holds 0-2, so Maker gets the whole 4-cycle.
  const auto k4 = play(4, Player::kMaker, "P 0 1; P 0 2; C 2; T 0; C 3; T 2; C 0");
  const std::vector<Vertex> full{0, 1, 2, 3};
  EXPECT_TRUE(hamilton_won(k4, std::span<const Vertex>(full)));
  EXPECT_TRUE(hamilton_won(k4));
  const std::vector<Vertex> wrong_order{0, 2, 1, 3};
  EXPECT_FALSE(hamilton_won(k4, std::span<const Vertex>(wrong_order)));
  const std::vector<Vertex> repeat{0, 1, 2, 2};
  EXPECT_THROW(hamilton_won(k4, std::span<const Vertex>(repeat)), MalformedCertificateError);

  const auto path = play(4, Player::kMaker, "P 0 1");
  EXPECT_FALSE(hamilton_won(path));
  EXPECT_FALSE(hamilton_won(path, std::span<const Vertex>(full)));
}

TEST(Win, HamiltonSearchIsCapped) {
  EXPECT_THROW(hamilton_won(new_game(kHamiltonSearchLimit + 1)), std::domain_error);
}

// Random games at several n and both biases: every structural invariant
// after every step.
class EngineProperty : public ::testing::TestWithParam<std::tuple<int, Bias, Player>> {};

TEST_P(EngineProperty, RandomGamesKeepInvariants) {
  const auto [n, bias, first] = GetParam();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed, 7);
    GameState s = new_game(n, bias, first);
    for (int step = 0; step < 6 * n; ++step) {
      const Player p = s.to_move();
      const auto moves = legal_moves(s, p);
      // Completeness: every syntactically possible move is accepted iff listed.
      std::vector<Move> candidates{Move::pass()};
      for (Vertex a = 0; a < n; ++a) {
        candidates.push_back(Move::claim(a));
        candidates.push_back(Move::traverse(a));
        for (Vertex b = 0; b < n; ++b) candidates.push_back(Move::place(a, b));
      }
      for (const Move& m : candidates) {
        bool accepted = true;
        try {
          check_legal(s, p, m);
        } catch (const IllegalMoveError&) {
          accepted = false;
        }
        const bool listed = std::find(moves.begin(), moves.end(), m) != moves.end();
        ASSERT_EQ(accepted, listed) << to_string(m);
      }

      const Move m = moves[rng.below(moves.size())];
      const auto before_pos = s.position(p);
      const int before_u = s.unvisited_count();
      const GameState next = apply_move(s, p, m);
      // apply_move is pure.
      ASSERT_EQ(apply_move(s, p, m), next);

      if (m.kind == MoveKind::kClaim || m.kind == MoveKind::kTraverse) {
        ASSERT_TRUE(before_pos.has_value());
        const Owner o = s.owner(*before_pos, m.to);
        ASSERT_TRUE(o == Owner::kFree || o == owner_of(p));
      }
      const int drop = before_u - next.unvisited_count();
      ASSERT_GE(drop, 0);
      if (p == Player::kBreaker || m.kind == MoveKind::kTraverse) {
        ASSERT_EQ(drop, 0);
      }
      ASSERT_LE(drop, m.kind == MoveKind::kPlaceAndClaim ? 2 : 1);
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
          if (s.owner(a, b) != Owner::kFree) ASSERT_EQ(next.owner(a, b), s.owner(a, b));
        }
      }
      ASSERT_EQ(next.unvisited_vertices(), next.recompute_unvisited());
      ASSERT_EQ(next.breaker_touched_vertices(), next.recompute_breaker_touched());
      s = next;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Boards, EngineProperty,
                         ::testing::Values(std::make_tuple(5, Bias{1, 1}, Player::kBreaker),
                                           std::make_tuple(8, Bias{1, 1}, Player::kMaker),
                                           std::make_tuple(7, Bias{1, 2}, Player::kMaker),
                                           std::make_tuple(6, Bias{2, 1}, Player::kBreaker)));

TEST(EngineProperty, WalkPropertyHoldsForBothPlayers) {
  Rng rng(3, 1);
  GameState s = new_game(9);
  std::optional<Vertex> pos[2];
  for (int step = 0; step < 60; ++step) {
    const Player p = s.to_move();
    const auto moves = legal_moves(s, p);
    const Move m = moves[rng.below(moves.size())];
    s.apply(p, m);
    const auto& last = s.last_step(p);
    ASSERT_TRUE(last.has_value());
    const int i = static_cast<int>(p);
    if (m.kind != MoveKind::kPlaceAndClaim && m.kind != MoveKind::kPass) {
      ASSERT_EQ(last->from, pos[i]);
    }
    pos[i] = s.position(p);
  }
}

}  // namespace
}  // namespace walkergames
