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

// walkergames: run, verify, replay and solve walker Maker-Breaker games.
//
// Exit status: 0 ok, 1 bound breach / missing win / replay mismatch,
// 2 monitor violation, 3 strategy assertion, 4 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "walkergames/engine.h"
#include "walkergames/oracle.h"
#include "walkergames/runner.h"
#include "walkergames/strategies.h"
#include "walkergames/transcript.h"

namespace wg = walkergames;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBound = 1;
constexpr int kExitMonitor = 2;
constexpr int kExitAssertion = 3;
constexpr int kExitUsage = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<int> env_int(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " is not an integer: '" + v + "'");
  }
}

wg::Bias parse_bias(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    const wg::Bias b{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    if (b.maker < 1 || b.breaker < 1) throw std::invalid_argument(text);
    return b;
  } catch (const std::exception&) {
    throw UsageError("bias must look like a:b with positive a, b; got '" + text + "'");
  }
}

wg::Player parse_first(const std::string& text) {
  const auto p = wg::player_from_string(text);
  if (!p) throw UsageError("--first must be maker or breaker");
  return *p;
}

std::vector<wg::Move> load_script(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open script '" + path + "'");
  return wg::parse_script(in);
}

std::string bias_text(const wg::Bias& b) {
  return std::to_string(b.maker) + ":" + std::to_string(b.breaker);
}

int status_of(const wg::RunResult& r) {
  const auto& t = r.transcript;
  if (r.strategy_assertion) return kExitAssertion;
  if (r.monitor_abort || !t.footer.monitors.ok()) return kExitMonitor;
  if (!wg::bound_satisfied(t)) return kExitBound;
  if (wg::maker_should_win(t.header) && t.footer.winner != wg::Winner::kMaker) return kExitBound;
  return kExitOk;
}

struct RunArgs {
  int n = 20;
  std::string bias = "1:1";
  std::string maker = "connectivity";
  std::string breaker = "random";
  std::string first = "breaker";
  std::uint64_t seed = 0;
  std::optional<int> move_cap;
  std::optional<int> n0;
  bool no_monitors = false;
  bool strict = false;
  bool greedy_phase1 = false;
  std::string out;
  std::string maker_script;
  std::string breaker_script;
};

int cmd_run(const RunArgs& a) {
  wg::RunConfig c;
  c.n = a.n;
  c.bias = parse_bias(a.bias);
  c.first_player = parse_first(a.first);
  c.maker = a.maker;
  c.breaker = a.breaker;
  c.seed = a.seed;
  c.n0 = a.n0 ? *a.n0 : env_int("WALKERGAMES_N0").value_or(wg::kDefaultN0);
  c.move_cap = a.move_cap ? a.move_cap : env_int("WALKERGAMES_MOVE_CAP");
  c.monitors = !a.no_monitors;
  c.strict = a.strict;
  c.delaying_greedy_phase1 = a.greedy_phase1;
  c.maker_script = load_script(a.maker_script);
  c.breaker_script = load_script(a.breaker_script);
  if (c.n < 3) throw UsageError("--n must be at least 3");

  const auto r = wg::run_game(c);
  const auto& f = r.transcript.footer;
  if (a.out.empty() || a.out == "-") {
    wg::write_transcript(std::cout, r.transcript);
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + a.out + "'");
    wg::write_transcript(out, r.transcript);
    if (!out.flush()) throw UsageError("write to '" + a.out + "' failed");
    std::cout << "winner=" << wg::to_string(f.winner) << " maker_moves=" << f.maker_move_count
              << " breaker_moves=" << f.breaker_move_count
              << " monitors=" << (f.monitors.ok() ? "ok" : "violated") << '\n';
  }
  for (const auto& e : f.assertions) {
    std::cerr << "strategy assertion in round " << e.round << ": " << e.expectation << "\n  "
              << e.snapshot << '\n';
  }
  const int status = status_of(r);
  if (status == kExitBound) {
    const auto b = wg::theorem_bound(r.transcript.header);
    std::cerr << "bound not met: " << (b ? b->label : std::string("maker did not win")) << " (got "
              << f.maker_move_count << " maker moves, winner " << wg::to_string(f.winner) << ")\n";
  }
  for (const auto& check : f.monitors.checks) {
    if (!check.passed()) {
      std::cerr << "monitor " << check.name << " violated in round " << *check.first_violation_round
                << ": " << check.context << '\n';
    }
  }
  return status;
}

std::vector<std::string> split(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

struct VerifyArgs {
  std::vector<std::string> ns;
  std::vector<std::string> makers;
  std::vector<std::string> breakers;
  int games = 1;
  std::uint64_t seed_base = 0;
  std::string first = "breaker";
  std::string bias = "1:1";
  std::optional<int> n0;
  std::optional<int> move_cap;
  bool strict = false;
  bool as_json = false;
};

int cmd_verify(const VerifyArgs& a) {
  wg::VerifyConfig c;
  for (const auto& n : split(a.ns)) {
    try {
      c.ns.push_back(std::stoi(n));
    } catch (const std::exception&) {
      throw UsageError("bad --n value '" + n + "'");
    }
    if (c.ns.back() < 3) throw UsageError("--n values must be at least 3");
  }
  c.makers = split(a.makers);
  c.breakers = split(a.breakers);
  for (const auto& m : c.makers) wg::make_policy(m, wg::Player::kMaker, {});
  for (const auto& b : c.breakers) wg::make_policy(b, wg::Player::kBreaker, {});
  c.games = a.games;
  c.seed_base = a.seed_base;
  c.first_player = parse_first(a.first);
  c.bias = parse_bias(a.bias);
  c.n0 = a.n0 ? *a.n0 : env_int("WALKERGAMES_N0").value_or(wg::kDefaultN0);
  c.move_cap = a.move_cap ? a.move_cap : env_int("WALKERGAMES_MOVE_CAP");
  c.strict = a.strict;

  const auto summary = wg::verify(c);
  if (a.as_json) {
    json rows = json::array();
    for (const auto& cell : summary.cells) {
      rows.push_back({{"n", cell.n},
                      {"maker", cell.maker},
                      {"breaker", cell.breaker},
                      {"games", cell.games},
                      {"maker_wins", cell.maker_wins},
                      {"min_maker_moves", cell.min_maker_moves},
                      {"max_maker_moves", cell.max_maker_moves},
                      {"monitor_violations", cell.monitor_violations},
                      {"strategy_assertions", cell.strategy_assertions},
                      {"bound_breaches", cell.bound_breaches},
                      {"max_first_visit_degree", cell.max_first_visit_degree}});
    }
    std::cout << json{{"ok", summary.ok()}, {"cells", rows}}.dump(2) << '\n';
  } else {
    std::cout << std::left << std::setw(6) << "n" << std::setw(14) << "maker" << std::setw(13)
              << "breaker" << std::right << std::setw(6) << "games" << std::setw(6) << "wins"
              << std::setw(6) << "min" << std::setw(6) << "max" << std::setw(6) << "viol"
              << std::setw(6) << "asrt" << std::setw(7) << "breach" << std::setw(6) << "dB1"
              << '\n';
    for (const auto& cell : summary.cells) {
      std::cout << std::left << std::setw(6) << cell.n << std::setw(14) << cell.maker
                << std::setw(13) << cell.breaker << std::right << std::setw(6) << cell.games
                << std::setw(6) << cell.maker_wins << std::setw(6) << cell.min_maker_moves
                << std::setw(6) << cell.max_maker_moves << std::setw(6) << cell.monitor_violations
                << std::setw(6) << cell.strategy_assertions << std::setw(7) << cell.bound_breaches
                << std::setw(6) << cell.max_first_visit_degree << '\n';
    }
  }
  int status = kExitOk;
  for (const auto& cell : summary.cells) {
    if (cell.strategy_assertions > 0) return kExitAssertion;
    if (cell.monitor_violations > 0) status = kExitMonitor;
    if (cell.bound_breaches > 0 && status == kExitOk) status = kExitBound;
  }
  return status;
}

int cmd_replay(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open transcript '" + path + "'");
  wg::Transcript t;
  wg::ReplayResult r;
  try {
    t = wg::read_transcript(in);
    r = wg::replay(t);
  } catch (const wg::TranscriptError& e) {
    std::cerr << wg::to_string(e.kind()) << ": " << e.what() << '\n';
    const bool usage = e.kind() == wg::TranscriptError::Kind::kMalformed ||
                       e.kind() == wg::TranscriptError::Kind::kUnknownVersion;
    return usage ? kExitUsage : kExitBound;
  }
  const auto& f = r.footer;
  if (as_json) {
    std::cout << json{{"winner", wg::to_string(f.winner)},
                      {"maker_move_count", f.maker_move_count},
                      {"breaker_move_count", f.breaker_move_count},
                      {"monitors_ok", f.monitors.ok()},
                      {"unvisited", r.final_state.unvisited_count()},
                      {"footer_match", true}}
                     .dump()
              << '\n';
  } else {
    std::cout << "footer match: winner=" << wg::to_string(f.winner)
              << " maker_moves=" << f.maker_move_count
              << " breaker_moves=" << f.breaker_move_count
              << " monitors=" << (f.monitors.ok() ? "ok" : "violated")
              << " unvisited=" << r.final_state.unvisited_count() << '\n';
  }
  return f.monitors.ok() ? kExitOk : kExitMonitor;
}

struct SolveArgs {
  int n = 3;
  std::string game = "connectivity";
  std::string first = "breaker";
  std::string bias = "1:1";
  int cap = 10;
  bool check_legality = false;
  bool as_json = false;
};

std::string pv_text(const wg::SolveResult& r) {
  std::string out;
  for (const auto& [p, m] : r.principal_variation) {
    if (!out.empty()) out += ", ";
    out += (p == wg::Player::kMaker ? "M:" : "B:") + wg::to_string(m);
  }
  return out;
}

int cmd_solve(const SolveArgs& a) {
  if (a.game != "connectivity" && a.game != "hamilton") {
    throw UsageError("--game must be connectivity or hamilton");
  }
  const wg::Goal goal = a.game == "hamilton" ? wg::Goal::kHamilton : wg::Goal::kConnectivity;
  wg::SolveOptions opts;
  opts.check_engine_legality = a.check_legality;
  wg::SolveResult r;
  try {
    r = wg::solve(a.n, goal, parse_first(a.first), a.cap, parse_bias(a.bias), opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool valid = wg::cross_validate(r);
  if (a.as_json) {
    json pv = json::array();
    for (const auto& [p, m] : r.principal_variation) {
      pv.push_back({{"player", wg::to_string(p)}, {"move", wg::to_string(m)}});
    }
    std::cout << json{{"game", a.game},
                      {"n", r.n},
                      {"first_player", wg::to_string(r.first_player)},
                      {"bias", bias_text(r.bias)},
                      {"move_cap", r.move_cap},
                      {"outcome", wg::to_string(r.outcome)},
                      {"maker_moves", r.outcome == wg::SolveOutcome::kMakerWins
                                          ? json(r.maker_moves)
                                          : json(nullptr)},
                      {"nodes", r.nodes},
                      {"cross_validated", valid},
                      {"principal_variation", pv}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "game        " << a.game << "\nn           " << r.n << "\nfirst       "
              << wg::to_string(r.first_player) << "\nbias        " << bias_text(r.bias)
              << "\nmove cap    " << r.move_cap << "\noutcome     " << wg::to_string(r.outcome);
    if (r.outcome == wg::SolveOutcome::kMakerWins) std::cout << " in " << r.maker_moves;
    std::cout << "\nnodes       " << r.nodes << "\nvalidated   " << (valid ? "yes" : "NO")
              << "\nline        " << pv_text(r) << '\n';
  }
  return valid ? kExitOk : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and checker for walker Maker-Breaker games on K_n"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Play one game and write its transcript");
  run_cmd->add_option("--n", run.n, "Number of vertices")->capture_default_str();
  run_cmd->add_option("--maker", run.maker, "Maker policy: s, connectivity, hamilton, random, scripted")
      ->capture_default_str();
  run_cmd->add_option("--breaker", run.breaker,
                      "Breaker policy: random, greedy, delaying, adversarial, isolating2, scripted")
      ->capture_default_str();
  run_cmd->add_option("--first", run.first, "Who moves first: maker or breaker")->capture_default_str();
  run_cmd->add_option("--bias", run.bias, "Steps per turn, maker:breaker")->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "Game seed")->capture_default_str();
  run_cmd->add_option("--move-cap", run.move_cap, "Maker turns before the game is stopped (10n)");
  run_cmd->add_option("--n0", run.n0, "Smallest n the move-count bounds apply to (20)");
  run_cmd->add_option("--out", run.out, "Transcript path (stdout if omitted)");
  run_cmd->add_option("--maker-script", run.maker_script, "Move script for --maker scripted");
  run_cmd->add_option("--breaker-script", run.breaker_script, "Move script for --breaker scripted");
  run_cmd->add_flag("--no-monitors", run.no_monitors, "Do not evaluate the invariant monitors");
  run_cmd->add_flag("--strict", run.strict, "Abort at the first monitor violation");
  run_cmd->add_flag("--greedy-phase1", run.greedy_phase1,
                    "Delaying Breaker plays greedy instead of random before the endgame");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded matrix of games and summarise it");
  verify_cmd->add_option("--n", ver.ns, "Vertex counts (comma separated)");
  verify_cmd->add_option("--maker", ver.makers, "Maker policies (comma separated)");
  verify_cmd->add_option("--breaker", ver.breakers, "Breaker policies (comma separated)");
  verify_cmd->add_option("--games", ver.games, "Games per cell")->capture_default_str();
  verify_cmd->add_option("--seed-base", ver.seed_base, "Seed of the first game in a cell")
      ->capture_default_str();
  verify_cmd->add_option("--first", ver.first, "Who moves first")->capture_default_str();
  verify_cmd->add_option("--bias", ver.bias, "Steps per turn, maker:breaker")->capture_default_str();
  verify_cmd->add_option("--n0", ver.n0, "Smallest n the move-count bounds apply to (20)");
  verify_cmd->add_option("--move-cap", ver.move_cap, "Maker turns per game (10n)");
  verify_cmd->add_flag("--strict", ver.strict, "Abort each game at its first monitor violation");
  verify_cmd->add_flag("--json", ver.as_json, "Print the table as JSON");

  std::string replay_path;
  bool replay_json = false;
  auto* replay_cmd = app.add_subcommand("replay", "Re-execute a transcript and check its footer");
  replay_cmd->add_option("transcript", replay_path, "Transcript file")->required();
  replay_cmd->add_flag("--json", replay_json, "Print the result as JSON");

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a tiny board exactly");
  solve_cmd->add_option("--n", sol.n, "Number of vertices (3..5)")->capture_default_str();
  solve_cmd->add_option("--game", sol.game, "connectivity or hamilton")->capture_default_str();
  solve_cmd->add_option("--first", sol.first, "Who moves first")->capture_default_str();
  solve_cmd->add_option("--bias", sol.bias, "Steps per turn, maker:breaker")->capture_default_str();
  solve_cmd->add_option("--cap", sol.cap, "Maker moves allowed")->capture_default_str();
  solve_cmd->add_flag("--check-legality", sol.check_legality,
                      "Compare the oracle's move generator with the engine at every node");
  solve_cmd->add_flag("--json", sol.as_json, "Print the result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*verify_cmd) return cmd_verify(ver);
    if (*replay_cmd) return cmd_replay(replay_path, replay_json);
    if (*solve_cmd) return cmd_solve(sol);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wg::ScriptError& e) {
    std::cerr << "script error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wg::OracleResourceError& e) {
    std::cerr << "oracle: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
