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

#include "qcentipede/game_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

namespace qcentipede {
namespace {

PayoffPair pair_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string(what) + " must be a [p1, p2] number pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

void check_rounds(std::size_t profile_rounds, const PayoffSchedule& schedule) {
  if (static_cast<int>(profile_rounds) != schedule.rounds()) {
    throw std::invalid_argument("profile has " + std::to_string(profile_rounds) +
                                " rounds but schedule has " +
                                std::to_string(schedule.rounds()));
  }
}

}  // namespace

PayoffSchedule PayoffSchedule::centipede3() {
  return {{{1.0, 0.0}, {0.0, 2.0}, {3.0, 1.0}}, {2.0, 2.0}};
}

PayoffSchedule PayoffSchedule::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("schedule must be a JSON object");
  for (const char* key : {"rounds", "defect", "cooperate"}) {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("schedule missing '") + key + "'");
  }
  if (!doc["rounds"].is_number_integer()) throw std::invalid_argument("'rounds' must be an integer");
  if (!doc["defect"].is_array()) throw std::invalid_argument("'defect' must be an array");

  const auto rounds = doc["rounds"].get<long long>();
  if (rounds < 0 || static_cast<std::size_t>(rounds) != doc["defect"].size()) {
    throw std::invalid_argument("'defect' has " + std::to_string(doc["defect"].size()) +
                                " entries but rounds is " + std::to_string(rounds));
  }
  PayoffSchedule schedule;
  for (const auto& entry : doc["defect"]) schedule.defect.push_back(pair_from_json(entry, "defect entry"));
  schedule.cooperate = pair_from_json(doc["cooperate"], "'cooperate'");
  schedule.validate();
  return schedule;
}

PayoffSchedule PayoffSchedule::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open schedule file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("schedule file " + path.string() + ": " + e.what());
  }
  return from_json(doc);
}

nlohmann::json PayoffSchedule::to_json() const {
  nlohmann::json defect_rows = nlohmann::json::array();
  for (const auto& d : defect) defect_rows.push_back({d.player1, d.player2});
  return {{"rounds", rounds()},
          {"defect", defect_rows},
          {"cooperate", {cooperate.player1, cooperate.player2}}};
}

void PayoffSchedule::validate() const {
  if (rounds() < 2) throw std::invalid_argument("schedule needs at least 2 rounds");
  const auto finite = [](const PayoffPair& p) {
    return std::isfinite(p.player1) && std::isfinite(p.player2);
  };
  for (const auto& d : defect) {
    if (!finite(d)) throw std::invalid_argument("non-finite defection payoff");
  }
  if (!finite(cooperate)) throw std::invalid_argument("non-finite cooperation payoff");
}

Outcome Outcome::defect_at(int round) {
  if (round < 1) throw std::invalid_argument("defection round must be >= 1");
  return Outcome(round);
}

Outcome classify(std::string_view bits, int n_rounds) {
  if (static_cast<int>(bits.size()) != n_rounds) {
    throw std::invalid_argument("bitstring '" + std::string(bits) + "' does not have " +
                                std::to_string(n_rounds) + " rounds");
  }
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') return Outcome::defect_at(static_cast<int>(k) + 1);
    if (bits[k] != '0') throw std::invalid_argument("bitstring has non-binary digit");
  }
  return Outcome::full_cooperation();
}

Outcome classify_index(std::size_t basis_index, int n_rounds) {
  for (int k = 1; k <= n_rounds; ++k) {
    if ((basis_index >> (n_rounds - k)) & 1U) return Outcome::defect_at(k);
  }
  return Outcome::full_cooperation();
}

PayoffPair payoff(const Outcome& outcome, const PayoffSchedule& schedule) {
  if (outcome.is_full_cooperation()) return schedule.cooperate;
  if (outcome.defect_round() > schedule.rounds()) {
    throw std::out_of_range("defection round " + std::to_string(outcome.defect_round()) +
                            " beyond a " + std::to_string(schedule.rounds()) + "-round schedule");
  }
  return schedule.defect[static_cast<std::size_t>(outcome.defect_round() - 1)];
}

OutcomeProbabilities outcome_probabilities(const StateVector& state) {
  const int n = state.num_qubits();
  OutcomeProbabilities out;
  out.p_defect_round.assign(static_cast<std::size_t>(n), 0.0);
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Outcome o = classify_index(i, n);
    const double p = std::norm(amps[i]);
    if (o.is_full_cooperation()) {
      out.p_full_cooperation += p;
    } else {
      out.p_defect_round[static_cast<std::size_t>(o.defect_round() - 1)] += p;
    }
  }
  return out;
}

PayoffMoments payoff_moments(const StateVector& state, const PayoffSchedule& schedule) {
  check_rounds(static_cast<std::size_t>(state.num_qubits()), schedule);
  const OutcomeProbabilities probs = outcome_probabilities(state);

  PayoffPair mean;
  PayoffPair second;
  const auto accumulate = [&](double p, const PayoffPair& pay) {
    mean.player1 += p * pay.player1;
    mean.player2 += p * pay.player2;
    second.player1 += p * pay.player1 * pay.player1;
    second.player2 += p * pay.player2 * pay.player2;
  };
  for (int r = 1; r <= schedule.rounds(); ++r) {
    accumulate(probs.p_defect_round[static_cast<std::size_t>(r - 1)],
               payoff(Outcome::defect_at(r), schedule));
  }
  accumulate(probs.p_full_cooperation, schedule.cooperate);

  return {mean,
          {std::max(0.0, second.player1 - mean.player1 * mean.player1),
           std::max(0.0, second.player2 - mean.player2 * mean.player2)}};
}

PayoffPair expected_payoffs_exact(std::span<const double> thetas, const PayoffSchedule& schedule) {
  check_rounds(thetas.size(), schedule);
  return payoff_moments(run_protocol(thetas), schedule).mean;
}

PayoffPair expected_payoffs_exact(const StrategyProfile& profile, const PayoffSchedule& schedule) {
  check_rounds(profile.rounds(), schedule);
  return payoff_moments(run_protocol(profile), schedule).mean;
}

PayoffPair expected_payoffs_mc(const StrategyProfile& profile, const PayoffSchedule& schedule,
                               std::uint64_t shots, std::uint64_t seed) {
  check_rounds(profile.rounds(), schedule);
  const StateVector state = run_protocol(profile);
  const int n = state.num_qubits();

  PayoffPair sum;
  for (std::size_t idx : sample_indices(state, shots, seed)) {
    const PayoffPair p = payoff(classify_index(idx, n), schedule);
    sum.player1 += p.player1;
    sum.player2 += p.player2;
  }
  const auto count = static_cast<double>(shots);
  return {sum.player1 / count, sum.player2 / count};
}

BackwardInductionResult backward_induction(const PayoffSchedule& schedule) {
  BackwardInductionResult result{std::nullopt, schedule.cooperate};
  for (int r = schedule.rounds(); r >= 1; --r) {
    const PayoffPair& take = schedule.defect[static_cast<std::size_t>(r - 1)];
    const bool player1_moves = (r % 2) == 1;
    const double take_value = player1_moves ? take.player1 : take.player2;
    const double pass_value = player1_moves ? result.payoffs.player1 : result.payoffs.player2;
    if (take_value > pass_value) result = {r, take};
  }
  return result;
}

}  // namespace qcentipede
