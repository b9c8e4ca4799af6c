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

#include <stdexcept>
#include <string>

#include "walkergames/strategies.h"

namespace walkergames {
namespace {

enum class Kind {
  kS,
  kConnectivity,
  kHamilton,
  kRandom,
  kScripted,
  kGreedy,
  kDelaying,
  kAdversarial,
  kIsolating2,
};

// Rng stream per role, so Maker and Breaker draws never interleave.
constexpr std::uint64_t kMakerStream = 1;
constexpr std::uint64_t kBreakerStream = 2;

class BuiltinPolicy final : public Policy {
 public:
  BuiltinPolicy(std::string_view id, Kind kind, Player role, const PolicyOptions& options)
      : id_(id),
        kind_(kind),
        role_(role),
        rng_(options.seed, role == Player::kMaker ? kMakerStream : kBreakerStream),
        greedy_phase1_(options.delaying_greedy_phase1) {
    mem_.rng_seed = options.seed;
    script_.moves = options.script;
  }

  Move choose(const GameState& s) override {
    switch (kind_) {
      case Kind::kS:
        return s_maker_move(s, mem_);
      case Kind::kConnectivity:
        return connectivity_maker_move(s, mem_);
      case Kind::kHamilton:
        return hamilton_maker_move(s, mem_);
      case Kind::kRandom:
        return random_walker_move(s, role_, rng_);
      case Kind::kScripted:
        return scripted_move(s, role_, script_);
      case Kind::kGreedy:
        return greedy_breaker_move(s);
      case Kind::kDelaying:
        return delaying_breaker_move(s, mem_, rng_, greedy_phase1_);
      case Kind::kAdversarial:
        return adversarial_breaker_move(s, mem_, rng_);
      case Kind::kIsolating2:
        return isolating_breaker2_move(s, mem_);
    }
    throw std::logic_error("unhandled policy kind");
  }

  std::string_view id() const override { return id_; }
  const StrategyMemory& memory() const override { return mem_; }

 private:
  std::string id_;
  Kind kind_;
  Player role_;
  Rng rng_;
  bool greedy_phase1_;
  StrategyMemory mem_;
  Script script_;
};

}  // namespace

std::unique_ptr<Policy> make_policy(std::string_view id, Player role, const PolicyOptions& options) {
  Kind kind;
  if (role == Player::kMaker) {
    if (id == "s") {
      kind = Kind::kS;
    } else if (id == "connectivity") {
      kind = Kind::kConnectivity;
    } else if (id == "hamilton") {
      kind = Kind::kHamilton;
    } else if (id == "random") {
      kind = Kind::kRandom;
    } else if (id == "scripted") {
      kind = Kind::kScripted;
    } else {
      throw std::invalid_argument("unknown maker policy '" + std::string(id) + "'");
    }
  } else {
    if (id == "random") {
      kind = Kind::kRandom;
    } else if (id == "greedy") {
      kind = Kind::kGreedy;
    } else if (id == "delaying") {
      kind = Kind::kDelaying;
    } else if (id == "adversarial") {
      kind = Kind::kAdversarial;
    } else if (id == "isolating2") {
      kind = Kind::kIsolating2;
    } else if (id == "scripted") {
      kind = Kind::kScripted;
    } else {
      throw std::invalid_argument("unknown breaker policy '" + std::string(id) + "'");
    }
  }
  return std::make_unique<BuiltinPolicy>(id, kind, role, options);
}

}  // namespace walkergames
