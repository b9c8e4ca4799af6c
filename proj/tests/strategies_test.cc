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
#include <numeric>
#include <set>
#include <sstream>

#include "test_util.h"
#include "walkergames/engine.h"
#include "walkergames/monitors.h"
#include "walkergames/rng.h"
#include "walkergames/runner.h"
#include "walkergames/strategies.h"

namespace walkergames {
namespace {

using testing::play;

TEST(StrategyS, FirstMoveStartsWhereBreakerStopped) {
  const auto s = play(10, Player::kBreaker, "P 8 7");
  StrategyMemory mem;
  EXPECT_EQ(strategy_s_move(s, mem), Move::place(7, 0));
  EXPECT_EQ(mem.v1, 7);
  EXPECT_EQ(mem.path_order, (std::vector<Vertex>{7, 0}));
}

TEST(StrategyS, MakerFirstStartsAtZeroOne) {
  StrategyMemory mem;
  EXPECT_EQ(strategy_s_move(new_game(10, {}, Player::kMaker), mem), Move::place(0, 1));
}

TEST(StrategyS, ChasesTheBreakerEdgeInsideU) {
  // Breaker edge 3-5 lies in U with d_B(3) = 2 > d_B(5) = 1.
  const auto s = play(10, Player::kBreaker, "P 0 1; P 1 2; C 3; C 4; C 5");
  ASSERT_EQ(degree_b(s, 3), 2);
  ASSERT_EQ(degree_b(s, 5), 1);
  StrategyMemory mem;
  mem.v1 = 1;
  mem.path_order = {1, 2, 4};
  EXPECT_EQ(strategy_s_move(s, mem), Move::claim(3));
}

TEST(StrategyS, LowestIndexWhenUIsUntouched) {
  const auto s = play(7, Player::kBreaker, "P 0 1; P 1 3; T 0; C 2; T 1; C 0");
  ASSERT_EQ(s.unvisited_vertices(), (std::vector<Vertex>{4, 5, 6}));
  StrategyMemory mem;
  mem.v1 = 1;
  mem.path_order = {1, 3, 2, 0};
  EXPECT_EQ(strategy_s_move(s, mem), Move::claim(4));
}

TEST(StrategyS, InteriorEdgeGoesToItsHeavierEnd) {
  // Breaker walk 0-6-5: d_B(6) = 2 and 5 has 1, both unvisited; 0 is Maker's.
  const auto s = play(8, Player::kBreaker, "P 0 6; P 0 1; C 5; C 2");
  StrategyMemory mem;
  mem.v1 = 0;
  mem.path_order = {0, 1, 2};
  // Rule 1 applies to the Breaker edge 5-6 inside U: claim its larger end.
  EXPECT_EQ(strategy_s_move(s, mem), Move::claim(6));
}

TEST(StrategyS, FailsWithoutAFreeEdgeIntoU) {
  // On K_4 with (1:3) Breaker cuts Maker's end 1 from both 2 and 3.
  auto s = new_game(4, {1, 3}, Player::kMaker);
  s = play(s, "P 0 1; P 2 1; C 3; T 1");
  StrategyMemory mem;
  mem.v1 = 0;
  mem.path_order = {0, 1};
  EXPECT_THROW(strategy_s_move(s, mem), StrategyAssertionError);
}

TEST(ConnectivityMaker, EndgameTakesTheThirdVertex) {
  // Maker at w = 0 with Breaker edges 0-4 and 0-5, Breaker standing on 5.
  const auto s = play(7, Player::kBreaker, "P 4 0; P 1 2; T 4; C 3; T 0; C 0; C 5");
  ASSERT_EQ(s.unvisited_vertices(), (std::vector<Vertex>{4, 5, 6}));
  StrategyMemory mem;
  mem.stage = 1;
  mem.v1 = 1;
  mem.path_order = {1, 2, 3, 0};
  EXPECT_EQ(connectivity_maker_move(s, mem), Move::claim(6));
}

TEST(FindPivot, EmptyBreakerGraphGivesLowestIndex) {
  const auto s = new_game(12);
  std::vector<Vertex> path(10);
  std::iota(path.begin(), path.end(), 0);
  EXPECT_EQ(find_pivot(s, 10, 11, path), 0);
}

TEST(FindPivot, SkipsBlockedVertices) {
  const auto s = play(12, Player::kBreaker, "P 0 10; P 5 6; C 1; T 5; T 10; T 6; C 2");
  std::vector<Vertex> path(10);
  std::iota(path.begin(), path.end(), 0);
  EXPECT_EQ(find_pivot(s, 10, 11, path), 3);
  const std::vector<Vertex> exclude{3, 4};
  EXPECT_EQ(find_pivot(s, 10, 11, path, exclude), 5);
}

TEST(FindPivot, ExistsWhenDegreesAreBelowPathLength) {
  // Breaker zig-zags 50-0-51-1-50-2-51-... so d_B(50) + d_B(51) = 16 while
  // Maker paces along 55-56.
  const std::vector<Vertex> targets{51, 1, 50, 2, 51, 3, 50, 4, 51, 5, 50, 6, 51, 7, 50};
  std::ostringstream script;
  script << "P 50 0\nP 55 56\n";
  for (std::size_t i = 0; i < targets.size(); ++i) {
    script << "C " << targets[i] << "\nT " << (i % 2 == 0 ? 55 : 56) << "\n";
  }
  const auto s = play(60, Player::kBreaker, script.str());
  const int sum = degree_b(s, 50) + degree_b(s, 51);
  ASSERT_EQ(sum, 16);
  std::vector<Vertex> path(50);
  std::iota(path.begin(), path.end(), 0);
  // Brute force: lowest path vertex seeing both ends over free edges.
  Vertex expected = -1;
  for (Vertex v : path) {
    if (s.is_free(50, v) && s.is_free(v, 51)) {
      expected = v;
      break;
    }
  }
  ASSERT_GE(expected, 0);
  EXPECT_EQ(find_pivot(s, 50, 51, path), expected);
}

TEST(FindPivot, ThrowsWhenNoneExists) {
  const auto s = play(5, Player::kBreaker, "P 3 0; P 1 2; C 4; T 1; T 0");
  // 3-0 and 0-4 are Breaker's; path {0} has no pivot between 3 and 4.
  const std::vector<Vertex> path{0};
  EXPECT_THROW(find_pivot(s, 3, 4, path), StrategyAssertionError);
}

TEST(FindFreeTriple, EmptyBreakerGraph) {
  const auto s = new_game(20);
  std::vector<Vertex> cycle{4, 9, 2, 7, 1, 3, 0, 8, 5};
  const std::vector<Vertex> forbidden{15};
  EXPECT_EQ(find_free_triple(s, cycle, forbidden), (Triple{4, 9, 2}));
}

TEST(FindFreeTriple, FirstCleanWindow) {
  // Breaker star from 15 to cycle[0..5].
  std::ostringstream script;
  script << "P 15 0\nP 18 19\n";
  for (Vertex v = 1; v <= 5; ++v) script << "T 15\nT 18\nC " << v << "\nT 19\n";
  const auto s = play(20, Player::kBreaker, script.str());
  std::vector<Vertex> cycle(15);
  std::iota(cycle.begin(), cycle.end(), 0);
  const std::vector<Vertex> forbidden{15};
  EXPECT_EQ(find_free_triple(s, cycle, forbidden), (Triple{6, 7, 8}));
}

// Independent reading of the triple rule.
std::optional<Triple> brute_force_triple(const GameState& s, const std::vector<Vertex>& cycle,
                                         const std::vector<Vertex>& forbidden,
                                         const std::vector<Vertex>& excluded) {
  const auto bad = [&](Vertex y) {
    if (std::count(excluded.begin(), excluded.end(), y) ||
        std::count(forbidden.begin(), forbidden.end(), y)) {
      return true;
    }
    int d = 0;
    for (Vertex x = 0; x < s.n(); ++x) d += x != y && s.owner(x, y) == Owner::kBreaker;
    if (d * 3 >= s.n()) return true;
    return std::any_of(forbidden.begin(), forbidden.end(),
                       [&](Vertex t) { return t != y && s.owner(t, y) == Owner::kBreaker; });
  };
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Triple t{cycle[i], cycle[(i + 1) % cycle.size()], cycle[(i + 2) % cycle.size()]};
    if (!bad(t.first) && !bad(t.middle) && !bad(t.last)) return t;
  }
  return std::nullopt;
}

TEST(FindFreeTriple, MatchesBruteForceOnRandomWalks) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed, 3);
    GameState s = new_game(60);
    for (int step = 0; step < 160; ++step) {
      const auto moves = legal_moves(s, s.to_move());
      s.apply(s.to_move(), moves[rng.below(moves.size())]);
    }
    std::vector<Vertex> cycle(50);
    std::iota(cycle.begin(), cycle.end(), 0);
    for (std::size_t i = cycle.size() - 1; i > 0; --i) std::swap(cycle[i], cycle[rng.below(i + 1)]);
    const std::vector<Vertex> forbidden{50, 51, 52};
    const std::vector<Vertex> excluded{cycle[7]};
    const auto expected = brute_force_triple(s, cycle, forbidden, excluded);
    if (expected) {
      EXPECT_EQ(find_free_triple(s, cycle, forbidden, excluded), *expected) << "seed " << seed;
    } else {
      EXPECT_THROW(find_free_triple(s, cycle, forbidden, excluded), StrategyAssertionError);
    }
  }
}

TEST(DelayingBreaker, ShadowsMakerThroughTheLastThree) {
  GameState s = play(6, Player::kMaker, "P 0 1; P 0 5; C 2");
  StrategyMemory mem;
  Rng rng(1);
  ASSERT_EQ(s.unvisited_vertices(), (std::vector<Vertex>{3, 4, 5}));
  // Phase 1 ends here: the last three are recorded.
  const Move phase1 = delaying_breaker_move(s, mem, rng);
  EXPECT_NO_THROW(check_legal(s, Player::kBreaker, phase1));
  EXPECT_EQ(mem.designated.at("u1"), 3);
  s = play(s, "C 1; C 3");  // scripted Breaker step, Maker enters 3
  EXPECT_EQ(delaying_breaker_move(s, mem, rng), Move::claim(4));
  s = play(s, "C 4; C 4");  // Breaker to 4, Maker follows into 4
  EXPECT_EQ(delaying_breaker_move(s, mem, rng), Move::claim(5));
  EXPECT_TRUE(mem.log.empty());
}

TEST(DelayingBreaker, NeverFallsBackAgainstConnectivityMaker) {
  for (int n : {20, 50}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      RunConfig c;
      c.n = n;
      c.first_player = Player::kMaker;
      c.maker = "connectivity";
      c.breaker = "delaying";
      c.seed = seed;
      const auto r = run_game(c);
      EXPECT_TRUE(r.breaker_log.empty()) << n << "/" << seed << ": " << r.breaker_log.front();
      EXPECT_GE(r.transcript.footer.maker_move_count, n);
    }
  }
}

TEST(IsolatingBreaker, CutsZFromMaker) {
  auto s = new_game(10, {1, 2}, Player::kMaker);
  s = play(s, "P 0 1");
  StrategyMemory mem;
  // z = 9, the highest vertex Maker's first move did not touch.
  EXPECT_EQ(isolating_breaker2_move(s, mem), Move::place(9, 1));
  EXPECT_EQ(mem.designated.at("z"), 9);
  s = play(s, "P 9 1");
  EXPECT_EQ(isolating_breaker2_move(s, mem), Move::traverse(9));
  s = play(s, "T 9; C 2");  // Maker moves on to 2
  EXPECT_EQ(isolating_breaker2_move(s, mem), Move::claim(2));
}

TEST(IsolatingBreaker, ProtectedVertexStaysIsolated) {
  for (int n : {10, 20}) {
    for (const char* maker : {"s", "random"}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RunConfig c;
        c.n = n;
        c.bias = {1, 2};
        c.first_player = Player::kMaker;
        c.maker = maker;
        c.breaker = "isolating2";
        c.seed = seed;
        const auto r = run_game(c);
        const auto& first = r.transcript.entries.front();
        Vertex z = n - 1;
        while (z == first.move.start || z == first.move.to) --z;
        EXPECT_TRUE(r.final_state.unvisited(z)) << maker << " n=" << n << " seed=" << seed;
        EXPECT_EQ(r.transcript.footer.maker_move_count, 10 * n);
      }
    }
  }
}

TEST(GreedyBreaker, OpensAtTheLowestPair) {
  EXPECT_EQ(greedy_breaker_move(new_game(8)), Move::place(0, 1));
}

TEST(GreedyBreaker, HeadsForTheHeaviestUnvisitedVertex) {
  // Breaker walks 0-1-4 and back to 0; from there 4 is the only unvisited
  // vertex with Breaker degree over a free edge.
  const auto s = play(10, Player::kBreaker, "P 0 1; P 2 3; C 4; C 5; T 1; C 6; T 0; C 7");
  EXPECT_EQ(greedy_breaker_move(s), Move::claim(4));
}

TEST(RandomWalker, SameSeedSameMove) {
  const auto s = play(12, Player::kBreaker, "P 0 1; P 4 5; C 7");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng a(seed, 1);
    Rng b(seed, 1);
    EXPECT_EQ(random_walker_move(s, Player::kMaker, a), random_walker_move(s, Player::kMaker, b));
  }
}

TEST(Scripted, EmptyScriptFails) {
  Script script;
  EXPECT_THROW(scripted_move(new_game(5), Player::kBreaker, script), ScriptError);
}

TEST(Scripted, IllegalEntryIsNamed) {
  Script script{{Move::claim(1)}};
  try {
    scripted_move(new_game(5), Player::kBreaker, script);
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_NE(std::string(e.what()).find("entry 0"), std::string::npos);
  }
}

TEST(Scripted, ParsesAllKindsAndComments) {
  std::istringstream in("P 0 1  # start\n\nC 2\nT 1\nX\n");
  EXPECT_EQ(parse_script(in),
            (std::vector<Move>{Move::place(0, 1), Move::claim(2), Move::traverse(1), Move::pass()}));
  std::istringstream bad("C\n");
  EXPECT_THROW(parse_script(bad), ScriptError);
  std::istringstream extra("C 1 2\n");
  EXPECT_THROW(parse_script(extra), ScriptError);
}

TEST(Policies, UnknownIdsAreRejected) {
  EXPECT_THROW(make_policy("isolating2", Player::kMaker, {}), std::invalid_argument);
  EXPECT_THROW(make_policy("nope", Player::kBreaker, {}), std::invalid_argument);
  for (auto id : kMakerPolicies) EXPECT_EQ(make_policy(id, Player::kMaker, {})->id(), id);
  for (auto id : kBreakerPolicies) EXPECT_EQ(make_policy(id, Player::kBreaker, {})->id(), id);
}

// Drives two policies by hand so every move and memory can be inspected.
struct Observed {
  GameState state;
  bool assertion = false;
};

template <typename OnMakerMove>
Observed drive(int n, Bias bias, Player first, std::string_view maker_id,
               std::string_view breaker_id, std::uint64_t seed, OnMakerMove on_maker) {
  PolicyOptions opts;
  opts.seed = seed;
  auto maker = make_policy(maker_id, Player::kMaker, opts);
  auto breaker = make_policy(breaker_id, Player::kBreaker, opts);
  GameState s = new_game(n, bias, first);
  for (int turns = 0; turns < 4 * n && !connectivity_won(s);) {
    const Player p = s.to_move();
    Move m;
    try {
      m = (p == Player::kMaker ? *maker : *breaker).choose(s);
    } catch (const StrategyAssertionError&) {
      return {s, true};
    }
    const auto moves = legal_moves(s, p);
    EXPECT_NE(std::find(moves.begin(), moves.end(), m), moves.end())
        << maker_id << "/" << breaker_id << " n=" << n << " seed=" << seed << " " << to_string(m);
    const GameState before = s;
    s.apply(p, m);
    if (p == Player::kMaker) {
      ++turns;
      on_maker(before, m, s, maker->memory());
      if (maker_id == "hamilton" && maker->memory().cycle_order &&
          static_cast<int>(maker->memory().cycle_order->size()) == n) {
        break;
      }
    }
  }
  return {s, false};
}

TEST(StrategyProperty, EveryPolicyPlaysLegalMoves) {
  const auto noop = [](const GameState&, const Move&, const GameState&, const StrategyMemory&) {};
  for (auto maker : {"s", "connectivity", "hamilton", "random"}) {
    for (auto breaker : {"random", "greedy", "delaying", "adversarial"}) {
      for (int n : {6, 9, 15, 24}) {
        for (Player first : {Player::kBreaker, Player::kMaker}) {
          for (std::uint64_t seed = 0; seed < 3; ++seed) {
            drive(n, {}, first, maker, breaker, seed, noop);
          }
        }
      }
    }
  }
  for (auto maker : {"s", "random", "connectivity"}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      drive(12, {1, 2}, Player::kMaker, maker, "isolating2", seed, noop);
    }
  }
}

TEST(StrategyProperty, RuleOneTouchesTheInteriorBreakerEdge) {
  int applied = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    drive(30, {}, Player::kBreaker, "s", "random", seed,
          [&](const GameState& before, const Move& m, const GameState&, const StrategyMemory&) {
            if (!before.position(Player::kMaker) || before.unvisited_count() < 3) return;
            std::set<Vertex> ends;
            for (const Edge& e : before.claimed_edges(Player::kBreaker)) {
              if (before.unvisited(e.lo()) && before.unvisited(e.hi()) &&
                  (before.is_free(*before.position(Player::kMaker), e.lo()) ||
                   before.is_free(*before.position(Player::kMaker), e.hi()))) {
                ends.insert(e.lo());
                ends.insert(e.hi());
              }
            }
            if (ends.empty()) return;
            ++applied;
            EXPECT_TRUE(ends.count(m.to)) << "seed " << seed;
          });
  }
  EXPECT_GT(applied, 0);
}

TEST(StrategyProperty, ConnectivityBuildsASimplePathFirst) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto breaker : {"random", "greedy", "adversarial"}) {
      drive(30, {}, Player::kBreaker, "connectivity", breaker, seed,
            [&](const GameState&, const Move&, const GameState& after, const StrategyMemory& mem) {
              const int k = after.move_count(Player::kMaker);
              if (k > after.n() - 3) return;
              EXPECT_EQ(static_cast<int>(after.claimed_edges(Player::kMaker).size()), k);
              EXPECT_TRUE(check_path_progress(after, mem.path_order)) << breaker << " " << seed;
            });
    }
  }
}

TEST(StrategyProperty, HamiltonCycleOrderIsAlwaysAMakerCycle) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto breaker : {"random", "greedy", "delaying", "adversarial"}) {
      const auto result =
          drive(40, {}, Player::kBreaker, "hamilton", breaker, seed,
                [&](const GameState&, const Move&, const GameState& after, const StrategyMemory& mem) {
                  if (!mem.cycle_order) return;
                  ++checked;
                  // Mid-splice the order already lists the vertex being spliced in.
                  if (mem.splice_step != 0) return;
                  EXPECT_TRUE(is_maker_cycle(after, *mem.cycle_order)) << breaker << " " << seed;
                });
      EXPECT_FALSE(result.assertion);
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(StrategyProperty, HamiltonCertificateAtTheEnd) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RunConfig c;
    c.n = 100;
    c.maker = "hamilton";
    c.breaker = "random";
    c.seed = seed;
    const auto r = run_game(c);
    ASSERT_EQ(r.transcript.footer.winner, Winner::kMaker);
    ASSERT_TRUE(r.transcript.footer.certificate);
    EXPECT_TRUE(hamilton_won(r.final_state, std::span<const Vertex>(*r.transcript.footer.certificate)));
    EXPECT_LE(r.transcript.footer.maker_move_count, 106);
  }
}

TEST(StrategyProperty, SameSeedSameGame) {
  for (auto breaker : {"random", "delaying", "adversarial"}) {
    RunConfig c;
    c.n = 25;
    c.maker = "hamilton";
    c.breaker = breaker;
    c.seed = 11;
    EXPECT_EQ(run_game(c).transcript, run_game(c).transcript);
  }
}

}  // namespace
}  // namespace walkergames
