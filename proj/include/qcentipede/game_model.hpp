// Copyright 2026 The qcentipede Authors
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

#ifndef QCENTIPEDE_GAME_MODEL_HPP_
#define QCENTIPEDE_GAME_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcentipede/ctz_protocol.hpp"
#include "qcentipede/state_vector.hpp"

namespace qcentipede {

struct PayoffPair {
  double player1 = 0.0;
  double player2 = 0.0;

  bool operator==(const PayoffPair&) const = default;
};

// Payoffs of an n-round centipede game: defect[r - 1] is paid when the game
// ends by a defection at round r, cooperate when nobody defects.
struct PayoffSchedule {
  std::vector<PayoffPair> defect;
  PayoffPair cooperate;

  int rounds() const { return static_cast<int>(defect.size()); }

  // The three-round game: (1,0), (0,2), (3,1) for defection at rounds 1..3,
  // (2,2) when both players pass to the end.
  static PayoffSchedule centipede3();

  // {"rounds": 3, "defect": [[1,0],[0,2],[3,1]], "cooperate": [2,2]}
  // Throws std::invalid_argument on a malformed document.
  static PayoffSchedule from_json(const nlohmann::json& doc);
  static PayoffSchedule load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  // rounds >= 2 and every payoff finite; throws std::invalid_argument otherwise.
  void validate() const;
};

// How a game ends: at the first defection, or by cooperating throughout.
class Outcome {
 public:
  static Outcome defect_at(int round);
  static Outcome full_cooperation() { return Outcome(0); }

  bool is_full_cooperation() const { return round_ == 0; }
  // 1-based round of the defection; 0 for full cooperation.
  int defect_round() const { return round_; }

  bool operator==(const Outcome&) const = default;

 private:
  explicit Outcome(int round) : round_(round) {}
  int round_;
};

// First 1-bit wins; later bits are irrelevant because the game is already over.
// Throws std::invalid_argument if bits.size() != n_rounds or bits is not binary.
Outcome classify(std::string_view bits, int n_rounds);
Outcome classify_index(std::size_t basis_index, int n_rounds);

// Throws std::out_of_range if the defection round exceeds the schedule.
PayoffPair payoff(const Outcome& outcome, const PayoffSchedule& schedule);

// Probability mass grouped by outcome.
OutcomeProbabilities outcome_probabilities(const StateVector& state);

struct PayoffMoments {
  PayoffPair mean;
  PayoffPair variance;  // per-shot variance
};

PayoffMoments payoff_moments(const StateVector& state, const PayoffSchedule& schedule);

// Exact expectation over the protocol's output distribution. The span overload
// skips StrategyProfile's range check. Throws std::invalid_argument when the
// round counts differ.
PayoffPair expected_payoffs_exact(const StrategyProfile& profile, const PayoffSchedule& schedule);
PayoffPair expected_payoffs_exact(std::span<const double> thetas, const PayoffSchedule& schedule);

// Average payoff over `shots` sampled measurements of the protocol output.
PayoffPair expected_payoffs_mc(const StrategyProfile& profile, const PayoffSchedule& schedule,
                               std::uint64_t shots, std::uint64_t seed);

struct BackwardInductionResult {
  std::optional<int> defection_round;  // nullopt: cooperation to the end
  PayoffPair payoffs;
};

// Classical subgame-perfect solution. Player 1 moves on odd rounds, player 2 on
// even rounds; a mover defects only when that strictly beats continuing.
BackwardInductionResult backward_induction(const PayoffSchedule& schedule);

}  // namespace qcentipede

#endif  // QCENTIPEDE_GAME_MODEL_HPP_
