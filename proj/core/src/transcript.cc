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

#include "walkergames/transcript.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "walkergames/strategies.h"

namespace walkergames {

using json = nlohmann::ordered_json;
using Kind = TranscriptError::Kind;

std::string_view to_string(Winner w) {
  switch (w) {
    case Winner::kMaker:
      return "maker";
    case Winner::kBreaker:
      return "breaker";
    case Winner::kAborted:
      return "aborted";
  }
  return "?";
}

std::string_view to_string(Goal g) { return g == Goal::kHamilton ? "hamilton" : "connectivity"; }

Goal goal_for_maker(std::string_view maker_id) {
  return maker_id == "hamilton" ? Goal::kHamilton : Goal::kConnectivity;
}

std::string_view to_string(TranscriptError::Kind k) {
  switch (k) {
    case Kind::kMalformed:
      return "malformed transcript";
    case Kind::kUnknownVersion:
      return "unknown transcript version";
    case Kind::kFooterMismatch:
      return "footer mismatch";
    case Kind::kIllegalRecordedMove:
      return "illegal recorded move";
  }
  return "?";
}

int maker_move_count(const Transcript& t) {
  int count = 0;
  for (const auto& e : t.entries) {
    if (e.player == Player::kMaker && e.move.kind != MoveKind::kPass) ++count;
  }
  return count;
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw TranscriptError(Kind::kMalformed, what); }

char kind_letter(MoveKind k) {
  switch (k) {
    case MoveKind::kPlaceAndClaim:
      return 'P';
    case MoveKind::kClaim:
      return 'C';
    case MoveKind::kTraverse:
      return 'T';
    case MoveKind::kPass:
      return 'X';
  }
  return '?';
}

json optional_vertex(std::optional<Vertex> v) { return v ? json(*v) : json(nullptr); }

json monitors_to_json(const MonitorReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"evaluated", c.evaluated},
                      {"skipped", c.skipped},
                      {"first_violation_round", c.first_violation_round
                                                    ? json(*c.first_violation_round)
                                                    : json(nullptr)},
                      {"context", c.context}});
  }
  return {{"armed", r.armed},
          {"ok", r.ok()},
          {"checks", checks},
          {"max_first_visit_degree", r.max_first_visit_degree},
          {"maker_passes", r.maker_passes},
          {"breaker_passes", r.breaker_passes}};
}

MonitorReport monitors_from_json(const json& j) {
  MonitorReport r;
  r.armed = j.at("armed").get<bool>();
  for (const auto& c : j.at("checks")) {
    CheckStats s;
    s.name = c.at("name").get<std::string>();
    s.evaluated = c.at("evaluated").get<int>();
    s.skipped = c.at("skipped").get<int>();
    if (!c.at("first_violation_round").is_null()) {
      s.first_violation_round = c.at("first_violation_round").get<int>();
    }
    s.context = c.at("context").get<std::string>();
    r.checks.push_back(std::move(s));
  }
  r.max_first_visit_degree = j.at("max_first_visit_degree").get<int>();
  r.maker_passes = j.at("maker_passes").get<int>();
  r.breaker_passes = j.at("breaker_passes").get<int>();
  return r;
}

Player parse_player(const json& j) {
  const auto p = player_from_string(j.get<std::string>());
  if (!p) malformed("unknown player '" + j.get<std::string>() + "'");
  return *p;
}

Winner parse_winner(const std::string& s) {
  if (s == "maker") return Winner::kMaker;
  if (s == "breaker") return Winner::kBreaker;
  if (s == "aborted") return Winner::kAborted;
  malformed("unknown winner '" + s + "'");
}

TranscriptEntry parse_entry(const json& j) {
  TranscriptEntry e;
  e.index = j.at("index").get<int>();
  e.round = j.at("round").get<int>();
  e.player = parse_player(j.at("player"));
  const auto kind = j.at("kind").get<std::string>();
  if (!j.at("from").is_null()) e.from = j.at("from").get<Vertex>();
  const Vertex to = j.at("to").is_null() ? -1 : j.at("to").get<Vertex>();
  if (kind == "P") {
    if (!e.from) malformed("entry " + std::to_string(e.index) + ": P without a start vertex");
    e.move = Move::place(*e.from, to);
  } else if (kind == "C") {
    e.move = Move::claim(to);
  } else if (kind == "T") {
    e.move = Move::traverse(to);
  } else if (kind == "X") {
    e.move = Move::pass();
  } else {
    malformed("entry " + std::to_string(e.index) + ": unknown kind '" + kind + "'");
  }
  return e;
}

}  // namespace

void write_transcript(std::ostream& out, const Transcript& t) {
  const auto& h = t.header;
  json header = {{"record", "header"},
                 {"version", h.version},
                 {"n", h.n},
                 {"bias", {h.bias.maker, h.bias.breaker}},
                 {"first_player", to_string(h.first_player)},
                 {"maker", h.maker},
                 {"breaker", h.breaker},
                 {"seed", h.seed},
                 {"n0", h.n0}};
  out << header.dump() << '\n';
  for (const auto& e : t.entries) {
    json entry = {{"record", "entry"},
                  {"index", e.index},
                  {"round", e.round},
                  {"player", to_string(e.player)},
                  {"kind", std::string(1, kind_letter(e.move.kind))},
                  {"from", optional_vertex(e.from)},
                  {"to", e.move.kind == MoveKind::kPass ? json(nullptr) : json(e.move.to)}};
    out << entry.dump() << '\n';
  }
  const auto& f = t.footer;
  json assertions = json::array();
  for (const auto& a : f.assertions) {
    assertions.push_back(
        {{"round", a.round}, {"expectation", a.expectation}, {"snapshot", a.snapshot}});
  }
  json footer = {{"record", "footer"},
                 {"winner", to_string(f.winner)},
                 {"maker_move_count", f.maker_move_count},
                 {"breaker_move_count", f.breaker_move_count},
                 {"monitors", monitors_to_json(f.monitors)},
                 {"certificate", f.certificate ? json(*f.certificate) : json(nullptr)},
                 {"assertions", assertions}};
  out << footer.dump() << '\n';
}

std::string transcript_to_string(const Transcript& t) {
  std::ostringstream out;
  write_transcript(out, t);
  return out.str();
}

Transcript read_transcript(std::istream& in) {
  Transcript t;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool have_footer = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (have_footer) malformed("line " + std::to_string(line_no) + ": content after footer");
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      malformed("line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      const auto record = j.at("record").get<std::string>();
      if (record == "header") {
        if (have_header) malformed("line " + std::to_string(line_no) + ": second header");
        const int version = j.at("version").get<int>();
        if (version != kTranscriptVersion) {
          throw TranscriptError(Kind::kUnknownVersion,
                                "transcript version " + std::to_string(version) +
                                    " is not supported (expected " +
                                    std::to_string(kTranscriptVersion) + ")");
        }
        auto& h = t.header;
        h.version = version;
        h.n = j.at("n").get<int>();
        const auto& bias = j.at("bias");
        if (!bias.is_array() || bias.size() != 2) malformed("header: bias must be [a, b]");
        h.bias = {bias[0].get<int>(), bias[1].get<int>()};
        h.first_player = parse_player(j.at("first_player"));
        h.maker = j.at("maker").get<std::string>();
        h.breaker = j.at("breaker").get<std::string>();
        h.seed = j.at("seed").get<std::uint64_t>();
        h.n0 = j.at("n0").get<int>();
        have_header = true;
      } else if (record == "entry") {
        if (!have_header) malformed("line " + std::to_string(line_no) + ": entry before header");
        auto e = parse_entry(j);
        if (e.index != static_cast<int>(t.entries.size())) {
          malformed("line " + std::to_string(line_no) + ": entry index " +
                    std::to_string(e.index) + " out of order");
        }
        if (!t.entries.empty() && e.round < t.entries.back().round) {
          malformed("line " + std::to_string(line_no) + ": rounds decrease");
        }
        t.entries.push_back(e);
      } else if (record == "footer") {
        if (!have_header) malformed("line " + std::to_string(line_no) + ": footer before header");
        auto& f = t.footer;
        f.winner = parse_winner(j.at("winner").get<std::string>());
        f.maker_move_count = j.at("maker_move_count").get<int>();
        f.breaker_move_count = j.at("breaker_move_count").get<int>();
        f.monitors = monitors_from_json(j.at("monitors"));
        if (!j.at("certificate").is_null()) {
          f.certificate = j.at("certificate").get<std::vector<Vertex>>();
        }
        for (const auto& a : j.at("assertions")) {
          f.assertions.push_back({a.at("round").get<int>(), a.at("expectation").get<std::string>(),
                                  a.at("snapshot").get<std::string>()});
        }
        have_footer = true;
      } else {
        malformed("line " + std::to_string(line_no) + ": unknown record '" + record + "'");
      }
    } catch (const json::exception& e) {
      malformed("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) malformed("missing header");
  if (!have_footer) malformed("missing footer");
  return t;
}

namespace {

void mismatch(const std::string& field, const std::string& recorded, const std::string& replayed) {
  throw TranscriptError(Kind::kFooterMismatch, field + ": recorded " + recorded +
                                                   ", replay gives " + replayed);
}

}  // namespace

ReplayResult replay(const Transcript& t) {
  const auto& h = t.header;
  GameState s = [&] {
    try {
      return new_game(h.n, h.bias, h.first_player);
    } catch (const std::invalid_argument& e) {
      malformed(std::string("header: ") + e.what());
    }
  }();
  MonitorRunner monitors(h.maker, s);
  const Goal goal = goal_for_maker(h.maker);
  const auto& cert = t.footer.certificate;

  for (const auto& e : t.entries) {
    if (connectivity_won(s) && goal == Goal::kConnectivity) {
      malformed("entry " + std::to_string(e.index) + " after the game was won");
    }
    if (e.player != s.to_move()) {
      throw TranscriptError(Kind::kIllegalRecordedMove,
                            "entry " + std::to_string(e.index) + ": " +
                                std::string(to_string(s.to_move())) + " is to move");
    }
    if (e.round != s.round() + 1) malformed("entry " + std::to_string(e.index) + ": wrong round");
    if (e.move.kind != MoveKind::kPlaceAndClaim && e.from != s.position(e.player)) {
      malformed("entry " + std::to_string(e.index) + ": 'from' is not the walker position");
    }
    GameState next = s;
    try {
      next.apply(e.player, e.move);
    } catch (const IllegalMoveError& err) {
      throw TranscriptError(Kind::kIllegalRecordedMove,
                            "entry " + std::to_string(e.index) + " ('" + to_string(e.move) +
                                "'): " + err.what());
    }
    monitors.observe(s, e.player, e.move, next);
    s = std::move(next);
  }

  TranscriptFooter f;
  f.maker_move_count = s.move_count(Player::kMaker);
  f.breaker_move_count = s.move_count(Player::kBreaker);
  f.monitors = monitors.report();
  f.certificate = cert;
  f.assertions = t.footer.assertions;
  bool won = false;
  if (goal == Goal::kConnectivity) {
    won = connectivity_won(s);
  } else if (cert) {
    try {
      won = static_cast<int>(cert->size()) == s.n() && is_maker_cycle(s, *cert);
    } catch (const MalformedCertificateError& e) {
      malformed(std::string("certificate: ") + e.what());
    }
  }
  if (won) {
    f.winner = Winner::kMaker;
  } else if (!f.assertions.empty() || t.footer.winner == Winner::kAborted) {
    f.winner = Winner::kAborted;
  } else {
    f.winner = Winner::kBreaker;
  }

  const auto& r = t.footer;
  if (r.winner != f.winner) {
    mismatch("winner", std::string(to_string(r.winner)), std::string(to_string(f.winner)));
  }
  if (r.maker_move_count != f.maker_move_count) {
    mismatch("maker_move_count", std::to_string(r.maker_move_count),
             std::to_string(f.maker_move_count));
  }
  if (maker_move_count(t) != f.maker_move_count) {
    mismatch("maker entries", std::to_string(maker_move_count(t)),
             std::to_string(f.maker_move_count));
  }
  if (r.breaker_move_count != f.breaker_move_count) {
    mismatch("breaker_move_count", std::to_string(r.breaker_move_count),
             std::to_string(f.breaker_move_count));
  }
  if (r.monitors != f.monitors) {
    mismatch("monitors", monitors_to_json(r.monitors).dump(), monitors_to_json(f.monitors).dump());
  }
  return {std::move(s), std::move(f)};
}

Lemma3Result check_lemma3(const Transcript& t) {
  Lemma3Result out;
  GameState s = new_game(t.header.n, t.header.bias, t.header.first_player);
  bool in_s_phase = monitors_applicable(t.header.maker, s);
  for (const auto& e : t.entries) {
    if (e.player == Player::kMaker && in_s_phase) {
      if (!is_s_phase_move(t.header.maker, s, e.move)) {
        in_s_phase = false;
      } else {
        std::vector<Vertex> fresh;
        if (e.move.kind == MoveKind::kPlaceAndClaim) fresh.push_back(e.move.start);
        if (s.unvisited(e.move.to)) fresh.push_back(e.move.to);
        for (Vertex x : fresh) {
          const int d = degree_b(s, x);
          ++out.visits;
          out.max_degree = std::max(out.max_degree, d);
          if (d > kLemma3Bound && out.pass) {
            out.pass = false;
            out.first_violation_round = e.round;
          }
        }
      }
    }
    s.apply(e.player, e.move);
  }
  return out;
}

}  // namespace walkergames
