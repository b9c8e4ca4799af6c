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

#ifndef WALKERGAMES_TRANSCRIPT_H_
#define WALKERGAMES_TRANSCRIPT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkergames/engine.h"
#include "walkergames/monitors.h"

namespace walkergames {

inline constexpr int kTranscriptVersion = 1;

struct TranscriptHeader {
  int version = kTranscriptVersion;
  int n = 0;
  Bias bias{};
  Player first_player = Player::kBreaker;
  std::string maker;
  std::string breaker;
  std::uint64_t seed = 0;
  int n0 = 20;
  friend bool operator==(const TranscriptHeader&, const TranscriptHeader&) = default;
};

struct TranscriptEntry {
  int index = 0;
  int round = 0;  // 1-based round the move belongs to
  Player player = Player::kMaker;
  Move move;
  std::optional<Vertex> from;  // position before the step (the start vertex for "P")
  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

enum class Winner { kMaker, kBreaker, kAborted };
std::string_view to_string(Winner w);

struct AssertionRecord {
  int round = 0;
  std::string expectation;
  std::string snapshot;
  friend bool operator==(const AssertionRecord&, const AssertionRecord&) = default;
};

struct TranscriptFooter {
  Winner winner = Winner::kBreaker;
  int maker_move_count = 0;
  int breaker_move_count = 0;
  MonitorReport monitors;
  std::optional<std::vector<Vertex>> certificate;
  std::vector<AssertionRecord> assertions;
  friend bool operator==(const TranscriptFooter&, const TranscriptFooter&) = default;
};

struct Transcript {
  TranscriptHeader header;
  std::vector<TranscriptEntry> entries;
  TranscriptFooter footer;
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

enum class Goal { kConnectivity, kHamilton };
std::string_view to_string(Goal g);
// The "hamilton" Maker plays for a Hamilton cycle, every other for connectivity.
Goal goal_for_maker(std::string_view maker_id);

// Maker entries of any kind but Pass.
int maker_move_count(const Transcript& t);

// Lemma 3 over a whole history: replays the entries and inspects every
// first visit made by a strategy-S move of the header's Maker.
Lemma3Result check_lemma3(const Transcript& t);

class TranscriptError : public std::runtime_error {
 public:
  enum class Kind { kMalformed, kUnknownVersion, kFooterMismatch, kIllegalRecordedMove };
  TranscriptError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};
std::string_view to_string(TranscriptError::Kind k);

// One JSON object per line: header, entries, footer.
void write_transcript(std::ostream& out, const Transcript& t);
std::string transcript_to_string(const Transcript& t);
Transcript read_transcript(std::istream& in);

struct ReplayResult {
  GameState final_state;
  TranscriptFooter footer;  // recomputed
};

// Re-executes the entries through the engine and recomputes the footer.
// Throws TranscriptError on an illegal entry or any footer difference.
ReplayResult replay(const Transcript& t);

}  // namespace walkergames

#endif  // WALKERGAMES_TRANSCRIPT_H_
